"""Exact Hamiltonian cycle search and the all-subsets Hamiltonicity table."""

from __future__ import annotations

import os

import numpy as np

from .graph import Cycle, Graph, GraphError, VertexSet, bits, induced_subgraph, popcount

DEFAULT_SUBSET_CAP = 22
CAP_ENV_VAR = "CYCLE_EXT_SUBSET_CAP"
_HARD_CAP = 30  # endpoint sets are stored as uint32 words


class CapacityError(ValueError):
    """Graph too large for the subset table."""


def subset_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if not raw:
        return DEFAULT_SUBSET_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CapacityError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if not 1 <= cap <= _HARD_CAP:
        raise CapacityError(f"{CAP_ENV_VAR} must be in 1..{_HARD_CAP}, got {cap}")
    return cap


def _popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.uint8)
    for v in range(n):
        pc[1 << v : 1 << (v + 1)] = pc[: 1 << v] + 1
    return pc


def _path_endpoints(adj, n: int, pc: np.ndarray) -> np.ndarray:
    """For every subset W, the set of v such that G[W] has a Hamiltonian
    path from min(W) to v.

    Subsets are processed layer by layer in popcount order; inside a layer
    each vertex v is handled with one vectorised pass.
    """
    dp = np.zeros(1 << n, dtype=np.uint32)
    for v in range(n):
        dp[1 << v] = 1 << v
    order = np.argsort(pc, kind="stable").astype(np.uint32)
    bounds = np.concatenate(([0], np.cumsum(np.bincount(pc, minlength=n + 1))))
    adj_words = [np.uint32(a) for a in adj]
    for size in range(2, n + 1):
        layer = order[bounds[size] : bounds[size + 1]]
        low = layer & (~layer + np.uint32(1))
        for v in range(n):
            bit = np.uint32(1 << v)
            sel = layer[((layer & bit) != 0) & (low != bit)]
            if sel.size == 0:
                continue
            ok = (dp[sel ^ bit] & adj_words[v]) != 0
            hit = sel[ok]
            dp[hit] |= bit
    return dp


class HamTable:
    """ham(W) for every vertex subset W of a graph with n <= cap."""

    def __init__(self, g: Graph, cap: int | None = None):
        cap = subset_cap() if cap is None else cap
        if g.n > cap:
            raise CapacityError(
                f"graph has {g.n} vertices; the subset table cap is {cap} "
                f"(set {CAP_ENV_VAR} to raise it, max {_HARD_CAP})"
            )
        self.graph = g
        self.cap = cap
        n = g.n
        self.popcount = _popcounts(n)
        self.endpoints = _path_endpoints(g.adj, n, self.popcount)
        masks = np.arange(1 << n, dtype=np.uint32)
        low = masks & (~masks + np.uint32(1))
        low_adj = np.zeros(1 << n, dtype=np.uint32)
        nz = low != 0
        low_idx = np.zeros(1 << n, dtype=np.int64)
        low_idx[nz] = np.log2(low[nz]).astype(np.int64)
        adj_arr = np.array(g.adj, dtype=np.uint32) if n else np.zeros(1, dtype=np.uint32)
        low_adj[nz] = adj_arr[low_idx[nz]]
        self.ham = ((self.endpoints & low_adj) != 0) & (self.popcount >= 3)

    def __contains__(self, W: VertexSet) -> bool:
        return bool(self.ham[W])

    def is_ham(self, W: VertexSet) -> bool:
        self.graph.check_mask(W)
        return bool(self.ham[W])

    def hamiltonian_sets(self) -> np.ndarray:
        return np.flatnonzero(self.ham)

    def witness(self, W: VertexSet) -> Cycle | None:
        """A Hamiltonian cycle of G[W] rebuilt from the endpoint table."""
        if not self.is_ham(W):
            return None
        adj = self.graph.adj
        s = (W & -W).bit_length() - 1
        v = (int(self.endpoints[W]) & adj[s])
        v = (v & -v).bit_length() - 1
        path = [v]
        cur = W
        while cur != 1 << s:
            rest = cur ^ (1 << v)
            u = int(self.endpoints[rest]) & adj[v]
            u = (u & -u).bit_length() - 1
            path.append(u)
            cur, v = rest, u
        return Cycle(tuple(reversed(path)))


def build_ham_table(g: Graph, cap: int | None = None) -> HamTable:
    return HamTable(g, cap)


# -- backtracking -------------------------------------------------------------------


def _backtrack_cycle(adj, W: VertexSet) -> list[int] | None:
    k = popcount(W)
    if k < 3:
        return None
    if any(popcount(adj[i] & W) < 2 for i in bits(W)):
        return None
    start = (W & -W).bit_length() - 1
    deg = {i: popcount(adj[i] & W) for i in bits(W)}
    path = [start]

    def feasible(unvisited: VertexSet, end: int) -> bool:
        allowed = unvisited | 1 << end | 1 << start
        for i in bits(unvisited):
            if popcount(adj[i] & allowed) < 2:
                return False
        # end must reach every unvisited vertex through unvisited vertices
        reach = frontier = 1 << end
        region = unvisited | 1 << end
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= adj[i]
            frontier = nxt & region & ~reach
            reach |= frontier
        return reach == region

    def dfs(end: int, unvisited: VertexSet) -> bool:
        if not unvisited:
            return bool(adj[end] >> start & 1)
        if not feasible(unvisited, end):
            return False
        for u in sorted(bits(adj[end] & unvisited), key=lambda i: (deg[i], i)):
            path.append(u)
            if dfs(u, unvisited & ~(1 << u)):
                return True
            path.pop()
        return False

    if dfs(start, W & ~(1 << start)):
        return path
    return None


def hamiltonian_cycle_backtrack(g: Graph, W: VertexSet | None = None) -> Cycle | None:
    """Direct backtracking search for a Hamiltonian cycle of G[W]."""
    W = g.full if W is None else W
    g.check_mask(W)
    seq = _backtrack_cycle(g.adj, W)
    return Cycle(tuple(seq)) if seq else None


def hamiltonian_cycle(g: Graph, table: HamTable | None = None) -> Cycle | None:
    if table is not None:
        return table.witness(g.full)
    return hamiltonian_cycle_backtrack(g)


def is_induced_hamiltonian(g: Graph, W: VertexSet, table: HamTable | None = None) -> bool:
    g.check_mask(W)
    if popcount(W) < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    if table is not None:
        return table.is_ham(W)
    if any(popcount(g.adj[i] & W) < 2 for i in bits(W)):
        return False
    if popcount(W) <= subset_cap():
        sub = induced_subgraph(g, W)
        return HamTable(sub).is_ham(sub.full)
    return _backtrack_cycle(g.adj, W) is not None


def is_pancyclic(g: Graph, table: HamTable) -> bool:
    """Cycles of every length 3..n exist (a cycle's vertex set is a ham subset)."""
    if g.n < 3:
        return False
    lengths = np.bincount(table.popcount[table.ham], minlength=g.n + 1)
    return bool(np.all(lengths[3 : g.n + 1] > 0))
