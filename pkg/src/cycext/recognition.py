"""Graph-class predicates: chordal, strongly chordal, connectivity, patterns."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator

import networkx as nx

from .graph import (
    Cycle,
    Graph,
    GraphError,
    VertexSet,
    bits,
    connected_components,
    cycle_graph,
    induced_subgraph,
    is_clique,
    is_connected,
    is_simple_vertex_within,
    is_true_twins,
    popcount,
)


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    kind: str  # "perfect" or "simple"

    def names(self, g: Graph) -> list[str]:
        return [g.names[i] for i in self.order]


# -- chordality ----------------------------------------------------------------


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns vertices in elimination order.

    MCS numbers vertices from n down to 1, so the visit order reversed is the
    candidate perfect elimination ordering.
    """
    weight = [0] * g.n
    unvisited = set(range(g.n))
    visit = []
    while unvisited:
        v = max(unvisited, key=lambda u: (weight[u], -u))
        unvisited.remove(v)
        visit.append(v)
        for u in bits(g.adj[v]):
            if u in unvisited:
                weight[u] += 1
    return visit[::-1]


def is_perfect_elimination_ordering(g: Graph, order) -> bool:
    """Check that each vertex is simplicial among the vertices after it."""
    later = g.full
    for v in order:
        later &= ~(1 << v)
        if not is_clique(g, g.adj[v] & later):
            return False
    return later == 0 and len(order) == g.n


def maximum_cardinality_search(g: Graph) -> EliminationOrdering | None:
    order = _mcs_order(g)
    if not is_perfect_elimination_ordering(g, order):
        return None
    return EliminationOrdering(tuple(order), "perfect")


def is_chordal(g: Graph) -> bool:
    return maximum_cardinality_search(g) is not None


def has_hole_bruteforce(g: Graph) -> bool:
    """Exhaustive hole search over all vertex subsets (small graphs only)."""
    for W in range(1 << g.n):
        k = popcount(W)
        if k < 4:
            continue
        if all(popcount(g.adj[i] & W) == 2 for i in bits(W)) and is_connected(g, W):
            return True
    return False


# -- strong chordality -----------------------------------------------------------


def simple_elimination_ordering(
    g: Graph, rng: random.Random | None = None
) -> EliminationOrdering | None:
    """Greedy simple elimination.

    Picks the simple vertex of least current degree (then least index), or a
    uniformly random simple vertex when ``rng`` is given.
    """
    W = g.full
    order = []
    while W:
        simple = [i for i in bits(W) if is_simple_vertex_within(g.adj, W, i)]
        if not simple:
            return None
        if rng is not None:
            v = rng.choice(simple)
        else:
            v = min(simple, key=lambda i: (popcount(g.adj[i] & W), i))
        order.append(v)
        W &= ~(1 << v)
    return EliminationOrdering(tuple(order), "simple")


def is_simple_elimination_ordering(g: Graph, order) -> bool:
    W = g.full
    for v in order:
        if not W >> v & 1 or not is_simple_vertex_within(g.adj, W, v):
            return False
        W &= ~(1 << v)
    return W == 0


def is_strongly_chordal(g: Graph) -> bool:
    return simple_elimination_ordering(g) is not None


def is_strongly_chordal_bruteforce(g: Graph) -> bool:
    """Chordal and no induced k-sun for every k that fits."""
    if has_hole_bruteforce(g):
        return False
    return all(
        find_induced_pattern_bruteforce(g, k_sun(k)) is None for k in range(3, g.n // 2 + 1)
    )


# -- connectivity ------------------------------------------------------------------


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n - 1 for complete graphs."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least 2 vertices")
    return nx.node_connectivity(to_networkx(g))


def minimum_vertex_cut(g: Graph) -> VertexSet | None:
    """A minimum separating set, or None for complete graphs."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least 2 vertices")
    if g.num_edges() == g.n * (g.n - 1) // 2:
        return None
    if not is_connected(g):
        return 0
    return g.mask(nx.minimum_node_cut(to_networkx(g)))


def vertex_connectivity_bruteforce(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least 2 vertices")
    for k in range(g.n - 1):
        for cut in itertools.combinations(range(g.n), k):
            rest = g.full & ~sum(1 << i for i in cut)
            if popcount(rest) >= 2 and not is_connected(g, rest):
                return k
    return g.n - 1


# -- patterns ------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph = field(compare=False)


def fan(k: int) -> Pattern:
    """Path on k+1 vertices plus a hub adjacent to all of them."""
    names = [f"p{i}" for i in range(k + 1)] + ["hub"]
    edges = list(zip(names[: k], names[1 : k + 1])) + [("hub", p) for p in names[: k + 1]]
    return Pattern(f"{k}-fan", Graph(names, edges))


def k_sun(k: int) -> Pattern:
    if k < 3:
        raise ValueError("suns need k >= 3")
    ys = [f"y{i}" for i in range(1, k + 1)]
    xs = [f"x{i}" for i in range(1, k + 1)]
    edges = [(a, b) for a, b in itertools.combinations(ys, 2)]
    for i in range(k):
        edges += [(xs[i], ys[i]), (xs[i], ys[(i + 1) % k])]
    return Pattern(f"{k}-sun", Graph(ys + xs, edges))


def hole(length: int) -> Pattern:
    return Pattern(f"hole{length}", cycle_graph(length, "h"))


def _a_bar() -> Pattern:
    # complement of the A graph (a 4-cycle with pendants at two adjacent
    # vertices); z and z2 are the two degree-4 vertices
    names = ["x1", "x", "z", "z2", "y", "y1"]
    edges = [("x1", "x"), ("x1", "z"), ("x", "z"), ("x", "z2"), ("z", "z2"),
             ("z", "y"), ("z2", "y"), ("z2", "y1"), ("y", "y1")]
    return Pattern("A-bar", Graph(names, edges))


THREE_FAN = fan(3)
FOUR_FAN = fan(4)
A_BAR = _a_bar()
K5_MINUS_E = Pattern(
    "K5-e",
    Graph(
        ["a", "b", "c", "d", "e"],
        [e for e in itertools.combinations("abcde", 2) if e != ("d", "e")],
    ),
)


def _search_order(p: Graph) -> list[int]:
    # connected-first, high degree first: earlier choices constrain later ones
    order = []
    remaining = set(range(p.n))
    while remaining:
        placed = 0
        for i in order:
            placed |= p.adj[i]
        attached = [i for i in remaining if placed >> i & 1]
        pool = attached or list(remaining)
        v = max(pool, key=lambda i: (popcount(p.adj[i]), -i))
        order.append(v)
        remaining.remove(v)
    return order


def iter_induced_patterns(g: Graph, p: Pattern) -> Iterator[dict[str, str]]:
    """Yield every induced embedding of ``p`` in ``g`` (pattern name -> graph name)."""
    pg = p.graph
    if pg.n > g.n:
        return
    order = _search_order(pg)
    pdeg = [popcount(a) for a in pg.adj]
    gdeg = [popcount(a) for a in g.adj]
    image = [-1] * pg.n

    def extend(depth: int, used: VertexSet) -> Iterator[None]:
        if depth == len(order):
            yield None
            return
        pv = order[depth]
        cand = g.full & ~used
        for prev in order[:depth]:
            gi = image[prev]
            if pg.adj[pv] >> prev & 1:
                cand &= g.adj[gi]
            else:
                cand &= ~g.adj[gi]
        for gv in bits(cand):
            if gdeg[gv] < pdeg[pv]:
                continue
            image[pv] = gv
            yield from extend(depth + 1, used | 1 << gv)
        image[pv] = -1

    for _ in extend(0, 0):
        yield {pg.names[i]: g.names[image[i]] for i in range(pg.n)}


def find_induced_pattern(g: Graph, p: Pattern) -> dict[str, str] | None:
    return next(iter_induced_patterns(g, p), None)


def _isomorphism(a: Graph, b: Graph) -> list[int] | None:
    """Brute-force isomorphism a -> b (small graphs)."""
    if a.n != b.n or a.num_edges() != b.num_edges():
        return None
    da = [popcount(x) for x in a.adj]
    db = [popcount(x) for x in b.adj]
    if sorted(da) != sorted(db):
        return None
    for perm in itertools.permutations(range(b.n)):
        if any(da[i] != db[perm[i]] for i in range(a.n)):
            continue
        if all((a.adj[i] >> j & 1) == (b.adj[perm[i]] >> perm[j] & 1)
               for i in range(a.n) for j in range(i + 1, a.n)):
            return list(perm)
    return None


def find_induced_pattern_bruteforce(g: Graph, p: Pattern) -> dict[str, str] | None:
    """Exhaustive-subset oracle for :func:`find_induced_pattern`."""
    pg = p.graph
    for combo in itertools.combinations(range(g.n), pg.n):
        sub = induced_subgraph(g, sum(1 << i for i in combo))
        perm = _isomorphism(pg, sub)
        if perm is not None:
            return {pg.names[i]: sub.names[perm[i]] for i in range(pg.n)}
    return None


def is_induced_embedding(g: Graph, p: Pattern, occ: dict[str, str]) -> bool:
    pg = p.graph
    if len(set(occ.values())) != pg.n:
        return False
    for a, b in itertools.combinations(pg.names, 2):
        if pg.has_edge(a, b) != g.has_edge(occ[a], occ[b]):
            return False
    return True


def every_k5e_has_true_twins(g: Graph) -> tuple[bool, list[VertexSet]]:
    """Check that each induced K5-e contains a pair of true twins of ``g``.

    Returns the verdict and the vertex sets of the violating occurrences.
    """
    seen = set()
    violations = []
    for occ in iter_induced_patterns(g, K5_MINUS_E):
        W = g.mask(occ.values())
        if W in seen:
            continue
        seen.add(W)
        if not any(is_true_twins(g, u, v) for u, v in itertools.combinations(bits(W), 2)):
            violations.append(W)
    return not violations, violations


@dataclass(frozen=True)
class ClassFlags:
    chordal: bool
    strongly_chordal: bool
    fan3_free: bool
    fan4_free: bool
    abar_free: bool
    k5e_twins_ok: bool
    ptolemaic: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


def class_flags(g: Graph) -> ClassFlags:
    chordal = is_chordal(g)
    fan3_free = find_induced_pattern(g, THREE_FAN) is None
    return ClassFlags(
        chordal=chordal,
        strongly_chordal=is_strongly_chordal(g),
        fan3_free=fan3_free,
        fan4_free=find_induced_pattern(g, FOUR_FAN) is None,
        abar_free=find_induced_pattern(g, A_BAR) is None,
        k5e_twins_ok=every_k5e_has_true_twins(g)[0],
        ptolemaic=chordal and fan3_free,
    )


FILTERS = {
    "chordal": is_chordal,
    "strongly_chordal": is_strongly_chordal,
    "fan3_free": lambda g: find_induced_pattern(g, THREE_FAN) is None,
    "fan4_free": lambda g: find_induced_pattern(g, FOUR_FAN) is None,
    "abar_free": lambda g: find_induced_pattern(g, A_BAR) is None,
    "k5e_twins_ok": lambda g: every_k5e_has_true_twins(g)[0],
}


# -- cycle and separator checks ---------------------------------------------------


def check_lemma_common_neighbor(g: Graph, c: Cycle) -> bool:
    """Every edge uv of the cycle has a common neighbor of u and v on the cycle."""
    if not c.is_valid(g):
        raise GraphError("not a cycle of this graph")
    W = c.vertex_set
    return all(g.adj[u] & g.adj[v] & W for u, v in c.edges())


def check_simplicial_in_components(g: Graph, S: VertexSet) -> bool:
    """Each component of G - S holds a vertex that is simplicial in G."""
    g.check_mask(S)
    if not is_clique(g, S):
        raise GraphError("S must be a clique")
    if not is_connected(g) or not is_chordal(g):
        raise GraphError("graph must be connected and chordal")
    simplicial = sum(1 << v for v in range(g.n) if is_clique(g, g.adj[v]))
    return all(comp & simplicial for comp in connected_components(g, g.full & ~S))


def clique_masks(g: Graph) -> Iterator[VertexSet]:
    """Every nonempty clique, each once."""

    def grow(current: VertexSet, cand: VertexSet):
        yield current
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from grow(current | low, cand & g.adj[v])

    for v in range(g.n):
        yield from grow(1 << v, g.adj[v] & ~((1 << (v + 1)) - 1))

