"""S-cycle extendability of cycles and graphs, decided on vertex sets.

Whether a cycle C extends only depends on V(C): an extension must contain
every vertex of C, not its edges. So a cycle on W is S-extendable iff some
Z with |Z| in S, Z disjoint from W, makes G[W | Z] Hamiltonian.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Cycle, Graph, GraphError, VertexSet, bits, popcount
from .hamiltonicity import HamTable, is_induced_hamiltonian

@dataclass(frozen=True)
class ExtensionSpec:
    """Nonempty set S of positive extension sizes."""

    S: frozenset

    def __init__(self, S):
        if isinstance(S, int):
            S = {S}
        S = frozenset(int(i) for i in S)
        if not S:
            raise ValueError("S must be nonempty")
        if min(S) < 1:
            raise ValueError("S must contain positive integers only")
        object.__setattr__(self, "S", S)

    @classmethod
    def parse(cls, text: str) -> "ExtensionSpec":
        try:
            return cls(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise ValueError(f"bad extension set {text!r}: {exc}") from None

    @classmethod
    def upto(cls, t: int) -> "ExtensionSpec":
        return cls(range(1, t + 1))

    @property
    def t(self) -> int:
        return max(self.S)

    def __iter__(self):
        return iter(sorted(self.S))

    def __str__(self) -> str:
        return ",".join(str(i) for i in sorted(self.S))



class NotCycleRealizable(GraphError):
    """The vertex set does not carry a cycle (G[W] is not Hamiltonian)."""


class SpanningCycleError(GraphError):
    """The vertex set is the whole graph; Hamiltonian cycles are exempt."""


def _check_cycle_set(g: Graph, W: VertexSet, table: HamTable | None) -> None:
    g.check_mask(W)
    if W == g.full:
        raise SpanningCycleError("W covers every vertex; a Hamiltonian cycle has no extension")
    if popcount(W) < 3 or not is_induced_hamiltonian(g, W, table):
        raise NotCycleRealizable(f"no cycle spans {g.names_of(W)}")


def is_set_extendable(
    g: Graph, W: VertexSet, spec: ExtensionSpec, table: HamTable | None = None
) -> VertexSet | None:
    """An extension set Z (|Z| in S, G[W | Z] Hamiltonian), or None."""
    _check_cycle_set(g, W, table)
    rest = list(bits(g.full & ~W))
    for i in spec:
        if i > len(rest):
            break
        for combo in combinations(rest, i):
            Z = sum(1 << v for v in combo)
            U = W | Z
            # every vertex of Z needs two neighbors on the extended cycle
            if any(popcount(g.adj[v] & U) < 2 for v in combo):
                continue
            if table is not None:
                if table.ham[U]:
                    return Z
            elif is_induced_hamiltonian(g, U):
                return Z
    return None


def is_cycle_extendable(
    g: Graph, cycle: Cycle, spec: ExtensionSpec, table: HamTable | None = None
) -> VertexSet | None:
    if not cycle.is_valid(g):
        raise GraphError("not a cycle of this graph")
    return is_set_extendable(g, cycle.vertex_set, spec, table)


def _superset_reach(table: HamTable, sizes) -> np.ndarray:
    """reach[W] = some Z, |Z| in sizes, Z disjoint from W, has ham(W | Z)."""
    n = table.graph.n
    masks = np.arange(1 << n, dtype=np.uint32)
    level = table.ham
    out = np.zeros(1 << n, dtype=bool)
    for i in range(1, max(sizes) + 1):
        nxt = np.zeros(1 << n, dtype=bool)
        for v in range(n):
            bit = np.uint32(1 << v)
            outside = (masks & bit) == 0
            nxt[outside] |= level[masks[outside] | bit]
        level = nxt
        if i in sizes:
            out |= level
    return out


@dataclass
class ExtendabilityVerdict:
    graph: Graph
    spec: ExtensionSpec
    violations: list = field(default_factory=list)
    cycles_checked: int = 0

    @property
    def status(self) -> str:
        return "VIOLATION" if self.violations else "EXTENDABLE_ALL"

    @property
    def ok(self) -> bool:
        return not self.violations

    def violation_cycles(self, table: HamTable) -> list[Cycle]:
        """Explicit witness cycles for the violating vertex sets."""
        return [table.witness(W) for W in self.violations]


def is_cycle_extendable_graph(
    g: Graph, spec: ExtensionSpec, table: HamTable | None = None
) -> ExtendabilityVerdict:
    """Check every non-Hamiltonian cycle (as a vertex set) for an S-extension."""
    table = HamTable(g) if table is None else table
    if table.graph is not g and table.graph != g:
        raise ValueError("table belongs to another graph")
    sizes = {i for i in spec.S if i < g.n}
    cycle_sets = table.ham.copy()
    cycle_sets[g.full] = False
    if sizes:
        extendable = _superset_reach(table, sizes)
    else:
        extendable = np.zeros_like(cycle_sets)
    bad = np.flatnonzero(cycle_sets & ~extendable)
    return ExtendabilityVerdict(g, spec, [int(W) for W in bad], int(cycle_sets.sum()))


def is_cycle_reducible(g: Graph, table: HamTable) -> bool:
    """Every cycle on more than 3 vertices drops one vertex and stays a cycle."""
    n = g.n
    masks = np.arange(1 << n, dtype=np.uint32)
    reducible = np.zeros(1 << n, dtype=bool)
    for v in range(n):
        bit = np.uint32(1 << v)
        inside = (masks & bit) != 0
        reducible[inside] |= table.ham[masks[inside] ^ bit]
    need = table.ham & (table.popcount > 3)
    return bool(np.all(reducible[need]))


# -- explicit cycles ----------------------------------------------------------------

MAX_ENUMERATION_VERTICES = 18


def cycles_through(g: Graph, required: VertexSet):
    """Every cycle of g containing all of ``required``, as frozensets of edges."""
    if not required:
        raise ValueError("need at least one required vertex")
    adj = g.adj
    start = (required & -required).bit_length() - 1
    found = set()
    path = [start]

    def prune(unvisited_req: VertexSet, unvisited: VertexSet, end: int) -> bool:
        allowed = unvisited | 1 << end | 1 << start
        return any(popcount(adj[r] & allowed) < 2 for r in bits(unvisited_req))

    def dfs(end: int, visited: VertexSet):
        unvisited = g.full & ~visited
        missing = required & unvisited
        if not missing and len(path) >= 3 and adj[end] >> start & 1:
            seq = path
            found.add(frozenset(frozenset((seq[i], seq[(i + 1) % len(seq)]))
                                for i in range(len(seq))))
        if prune(missing, unvisited, end):
            return
        for u in bits(adj[end] & unvisited):
            path.append(u)
            dfs(u, visited | 1 << u)
            path.pop()

    dfs(start, 1 << start)
    return found


def enumerate_cycles(g: Graph, W: VertexSet | None = None) -> list[Cycle]:
    """All cycles of G[W], each once (small graphs only)."""
    W = g.full if W is None else W
    out = []
    for s in bits(W):
        # cycles whose minimum vertex is s; direction fixed by first < last
        allowed = W & ~((1 << s) - 1)
        path = [s]

        def dfs(end: int, visited: VertexSet):
            for u in bits(g.adj[end] & allowed & ~visited):
                path.append(u)
                if len(path) >= 3 and g.adj[u] >> s & 1 and path[1] < u:
                    out.append(Cycle(tuple(path)))
                dfs(u, visited | 1 << u)
                path.pop()

        dfs(s, 1 << s)
    return out


def cycle_is_extendable_explicit(g: Graph, c: Cycle, spec: ExtensionSpec) -> bool:
    """Definition-level check: search explicit cycles C2 with V(C2) = V(C) plus |S|-many vertices."""
    W = c.vertex_set
    rest = g.full & ~W
    for i in spec:
        for combo in combinations(bits(rest), i):
            U = W | sum(1 << v for v in combo)
            if any(cy.vertex_set == U for cy in enumerate_cycles(g, U)):
                return True
    return False


@dataclass
class HeavyEdgeReport:
    cycles_full: int
    cycles_minus: int
    all_contain_heavy: bool
    same_cycles: bool

    @property
    def ok(self) -> bool:
        return self.all_contain_heavy and self.same_cycles


def verify_heavy_edge_lemmas(full, minus) -> HeavyEdgeReport:
    """Enumerate cycles through v1..v5 in both graphs of the pair.

    Checks that each such cycle uses every heavy edge, and that the cycles
    using every heavy edge are the same in both graphs.
    """
    for lg in (full, minus):
        if lg.graph.n > MAX_ENUMERATION_VERTICES:
            raise ValueError(
                f"{lg.graph.n} vertices is too large for explicit cycle enumeration "
                f"(limit {MAX_ENUMERATION_VERTICES})"
            )
    if full.graph.names != minus.graph.names:
        raise ValueError("graphs of the pair must share the vertex list")
    g = full.graph
    required = g.mask(("v1", "v2", "v3", "v4", "v5"))
    heavy = frozenset(frozenset((g.index(u), g.index(v))) for u, v in full.heavy)
    for lg in (full, minus):
        for u, v in lg.heavy:
            if not lg.graph.has_edge(u, v):
                raise ValueError(f"heavy edge {u}{v} missing; no cycle can pass all of v1..v5")
    cyc_full = cycles_through(g, required)
    if not cyc_full:
        raise ValueError("no cycle passes through all of v1..v5")
    cyc_minus = cycles_through(minus.graph, required)
    contain = all(heavy <= c for c in cyc_full) and all(heavy <= c for c in cyc_minus)
    with_heavy_full = {c for c in cyc_full if heavy <= c}
    with_heavy_minus = {c for c in cyc_minus if heavy <= c}
    return HeavyEdgeReport(len(cyc_full), len(cyc_minus), contain,
                           with_heavy_full == with_heavy_minus)
