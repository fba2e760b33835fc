"""Immutable simple undirected graphs with named vertices.

Vertices are addressed by name at every public entry point; internally a
vertex is its index in declaration order and a vertex set is an ``int``
bitmask over those indices (bit ``i`` set means vertex ``i`` is a member).
The bitmask is the canonical, hashable encoding used as a table key.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")

VertexSet = int


class GraphError(ValueError):
    """Invalid vertex, name or vertex set."""


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the member indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


class Graph:
    """A finite simple undirected graph; never mutated after construction."""

    __slots__ = ("names", "adj", "_index", "_hash")

    def __init__(self, names: Sequence[str], edges: Iterable[tuple] = ()):
        names = tuple(names)
        if len(names) > MAX_VERTICES:
            raise GraphError(f"at most {MAX_VERTICES} vertices supported, got {len(names)}")
        index = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise GraphError(f"invalid vertex name {name!r}")
            if name in index:
                raise GraphError(f"duplicate vertex name {name!r}")
            index[name] = i
        self.names = names
        self._index = index
        adj = [0] * len(names)
        for u, v in edges:
            i, j = self.index(u), self.index(v)
            if i == j:
                raise GraphError(f"self-loop at {names[i]!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_adjacency(cls, names: Sequence[str], adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.names = tuple(names)
        g._index = {name: i for i, name in enumerate(g.names)}
        g.adj = tuple(adj)
        g._hash = None
        return g

    # -- identity -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> VertexSet:
        return (1 << len(self.names)) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.names == other.names and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.names, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    # -- addressing ---------------------------------------------------------

    def index(self, v) -> int:
        """Index of vertex ``v`` given by name (or already an index)."""
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise GraphError(f"unknown vertex {v!r}") from None
        if isinstance(v, int) and 0 <= v < len(self.names):
            return v
        raise GraphError(f"unknown vertex {v!r}")

    def mask(self, vertices: Iterable) -> VertexSet:
        m = 0
        for v in vertices:
            m |= 1 << self.index(v)
        return m

    def names_of(self, mask: VertexSet) -> list[str]:
        self.check_mask(mask)
        return [self.names[i] for i in bits(mask)]

    def check_mask(self, mask: VertexSet) -> None:
        if mask < 0 or mask >> len(self.names):
            raise GraphError("vertex set has members outside the graph")

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.names[i], self.names[j]) for i, j in self.edges()]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v) -> int:
        return popcount(self.adj[self.index(v)])


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertex indices in traversal order."""

    seq: tuple[int, ...]

    def __post_init__(self):
        if len(self.seq) < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if len(set(self.seq)) != len(self.seq):
            raise GraphError("cycle repeats a vertex")

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def vertex_set(self) -> VertexSet:
        m = 0
        for i in self.seq:
            m |= 1 << i
        return m

    def edges(self) -> list[tuple[int, int]]:
        s = self.seq
        return [(s[i], s[(i + 1) % len(s)]) for i in range(len(s))]

    def is_valid(self, g: Graph) -> bool:
        if any(not 0 <= i < g.n for i in self.seq):
            return False
        return all(g.adj[u] >> v & 1 for u, v in self.edges())

    def names(self, g: Graph) -> list[str]:
        return [g.names[i] for i in self.seq]

    @classmethod
    def from_names(cls, g: Graph, names: Sequence) -> "Cycle":
        """Build a cycle from vertex names, validating every edge.

        A trailing repeat of the first vertex (``a ... a``) is accepted.
        """
        names = list(names)
        if len(names) > 1 and names[0] == names[-1]:
            names.pop()
        c = cls(tuple(g.index(v) for v in names))
        if not c.is_valid(g):
            bad = [(g.names[u], g.names[v]) for u, v in c.edges() if not g.adj[u] >> v & 1]
            raise GraphError(f"not a cycle: missing edges {bad}")
        return c


# -- operations ---------------------------------------------------------------


def neighbors(g: Graph, v) -> VertexSet:
    return g.adj[g.index(v)]


def closed_neighbors(g: Graph, v) -> VertexSet:
    i = g.index(v)
    return g.adj[i] | 1 << i


def induced_subgraph(g: Graph, W: VertexSet) -> Graph:
    """G[W]; vertices keep their names and relative order."""
    g.check_mask(W)
    members = list(bits(W))
    pos = {old: new for new, old in enumerate(members)}
    adj = []
    for old in members:
        a = 0
        for j in bits(g.adj[old] & W):
            a |= 1 << pos[j]
        adj.append(a)
    return Graph.from_adjacency([g.names[i] for i in members], adj)


def delete_vertices(g: Graph, vertices: Iterable) -> Graph:
    return induced_subgraph(g, g.full & ~g.mask(vertices))


def _with_new_vertex(g: Graph, name: str, nbrs: VertexSet) -> Graph:
    if name in g._index:
        raise GraphError(f"duplicate vertex name {name!r}")
    if not _NAME_RE.match(name):
        raise GraphError(f"invalid vertex name {name!r}")
    if g.n >= MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices supported")
    new = g.n
    adj = [a | (1 << new if nbrs >> i & 1 else 0) for i, a in enumerate(g.adj)]
    adj.append(nbrs)
    return Graph.from_adjacency(g.names + (name,), adj)


def add_true_twin(g: Graph, v, name: str) -> Graph:
    """Add ``name`` with closed neighborhood equal to that of ``v``."""
    return _with_new_vertex(g, name, closed_neighbors(g, v))


def add_universal_vertex(g: Graph, name: str) -> Graph:
    return _with_new_vertex(g, name, g.full)


def add_edges(g: Graph, edges: Iterable[tuple]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        i, j = g.index(u), g.index(v)
        if i == j:
            raise GraphError(f"self-loop at {g.names[i]!r}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph.from_adjacency(g.names, adj)


def remove_edges(g: Graph, edges: Iterable[tuple]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        i, j = g.index(u), g.index(v)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
    return Graph.from_adjacency(g.names, adj)


def is_true_twins(g: Graph, u, v) -> bool:
    i, j = g.index(u), g.index(v)
    if i == j:
        raise GraphError("true twins must be two distinct vertices")
    return closed_neighbors(g, i) == closed_neighbors(g, j)


def is_clique(g: Graph, W: VertexSet) -> bool:
    g.check_mask(W)
    return all(W & ~(1 << i) & ~g.adj[i] == 0 for i in bits(W))


def is_independent(g: Graph, W: VertexSet) -> bool:
    g.check_mask(W)
    return all(g.adj[i] & W == 0 for i in bits(W))


def is_universal(g: Graph, v) -> bool:
    i = g.index(v)
    return g.adj[i] == g.full & ~(1 << i)


def is_simplicial(g: Graph, v) -> bool:
    return is_clique(g, neighbors(g, v))


def is_simple_vertex(g: Graph, v) -> bool:
    """True iff the closed neighborhoods of v's neighbors form a chain."""
    nbrs = sorted(bits(neighbors(g, v)), key=lambda u: popcount(g.adj[u]))
    closed = [g.adj[u] | 1 << u for u in nbrs]
    # sorted by size, so a chain needs each set contained in the next one;
    # equal sizes are then forced to be equal sets
    return all(a & ~b == 0 for a, b in zip(closed, closed[1:]))


def is_simple_vertex_within(adj: Sequence[int], W: VertexSet, i: int) -> bool:
    """Simple-vertex test for vertex ``i`` inside G[W], without building G[W]."""
    nbrs = sorted(bits(adj[i] & W), key=lambda u: popcount(adj[u] & W))
    closed = [(adj[u] & W) | 1 << u for u in nbrs]
    return all(a & ~b == 0 for a, b in zip(closed, closed[1:]))


def connected_components(g: Graph, W: VertexSet | None = None) -> list[VertexSet]:
    """Components of G[W] (default: the whole graph), ordered by lowest member."""
    remaining = g.full if W is None else W
    g.check_mask(remaining)
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= g.adj[i]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph, W: VertexSet | None = None) -> bool:
    return len(connected_components(g, W)) <= 1


def is_k_connected(g: Graph, k: int) -> bool:
    from .recognition import vertex_connectivity

    if k <= 0:
        return True
    if g.n == 1:
        return k <= 0
    if g.n == 0:
        return False
    return vertex_connectivity(g) >= k


# -- small named graphs ---------------------------------------------------------


def complete_graph(n: int, prefix: str = "k") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int, prefix: str = "p") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, zip(names, names[1:]))


def cycle_graph(n: int, prefix: str = "c") -> Graph:
    names = [f"{prefix}{i}" for i in range(n)]
    return Graph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def empty_graph(n: int = 0, prefix: str = "e") -> Graph:
    return Graph([f"{prefix}{i}" for i in range(n)])
