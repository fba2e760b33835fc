"""Builders for the strongly chordal counterexample family and its witness cycles.

Naming follows the drawings: ``a``..``g`` is the base path, ``u1``..``u3``
the hubs, ``v1``..``v5`` the degree-2 vertices, ``z1``..``z{t-1}`` the
vertices subdividing ``c``-``d``, ``x*``/``y*`` the two sides of the
(k, k)-star and ``v1_t*`` the true twins of ``v1`` used for padding.
``z0`` and ``z{t}`` are aliases of ``c`` and ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .extendability import ExtensionSpec
from .graph import Cycle, Graph, add_true_twin, remove_edges

HEAVY_EDGES = (
    ("a", "v1"), ("v1", "u2"), ("u2", "v2"), ("v2", "g"),
    ("f", "v4"), ("v4", "u3"), ("u3", "v3"), ("v3", "b"),
    ("e", "v5"), ("v5", "u1"),
)
DEGREE_TWO = ("v1", "v2", "v3", "v4", "v5")
HUBS = ("u1", "u2", "u3")

# Hamiltonian cycle of the base 15-vertex graph
H_HAT_HAMILTONIAN = "a v1 u2 v2 g f v4 u3 v3 b c d e v5 u1".split()


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    family: str
    params: dict = field(default_factory=dict)
    roles: dict = field(default_factory=dict)
    heavy: tuple = ()
    aliases: dict = field(default_factory=dict)

    def resolve(self, name: str) -> str:
        return self.aliases.get(name, name)

    def index(self, name: str) -> int:
        return self.graph.index(self.resolve(name))

    def mask(self, names) -> int:
        return self.graph.mask(self.resolve(v) for v in names)

    def cycle(self, names) -> Cycle:
        return Cycle.from_names(self.graph, [self.resolve(v) for v in names])


def _path_names(t: int) -> list[str]:
    return ["a", "b", "c"] + [f"z{i}" for i in range(1, t)] + ["d", "e", "f", "g"]


def build_G(t: int) -> LabeledGraph:
    """Base graph with c-d subdivided into a path of t+1 vertices; t=1 is the 15-vertex base."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    path = _path_names(t)
    names = path + list(HUBS) + list(DEGREE_TWO)
    edges = list(zip(path, path[1:]))
    edges += [(u, w) for u in HUBS for w in path]
    edges += list(combinations(HUBS, 2))
    edges += list(HEAVY_EDGES)
    zs = ["c"] + [f"z{i}" for i in range(1, t)] + ["d"]
    return LabeledGraph(
        Graph(names, edges),
        family="g",
        params={"t": t},
        roles={"path": path, "hubs": list(HUBS), "degree_two": list(DEGREE_TWO), "Z": zs},
        heavy=HEAVY_EDGES,
        aliases={"z0": "c", f"z{t}": "d"},
    )


def _minus(lg: LabeledGraph, family: str) -> LabeledGraph:
    g = lg.graph
    heavy = {frozenset(e) for e in lg.heavy}
    drop = [("u1", "e")]
    for hub in ("u2", "u3"):
        drop += [(hub, w) for w in g.names_of(g.adj[g.index(hub)])
                 if frozenset((hub, w)) not in heavy]
    return LabeledGraph(remove_edges(g, drop), family, dict(lg.params), dict(lg.roles),
                        lg.heavy, dict(lg.aliases))


def build_G_minus(t: int) -> LabeledGraph:
    """build_G(t) without u1-e and without the nonheavy edges at u2 and u3."""
    return _minus(build_G(t), "g_minus")


def build_H_hat() -> LabeledGraph:
    lg = build_G(1)
    return LabeledGraph(lg.graph, "h_hat", {}, lg.roles, lg.heavy, lg.aliases)


def build_H_hat_minus() -> LabeledGraph:
    lg = build_G_minus(1)
    return LabeledGraph(lg.graph, "h_hat_minus", {}, lg.roles, lg.heavy, lg.aliases)


def build_star(p: int, q: int) -> LabeledGraph:
    """Independent set x1..xp completely joined to a clique y1..yq."""
    if p < 1 or q < 1:
        raise ValueError(f"star sides must be positive, got ({p}, {q})")
    xs = [f"x{i}" for i in range(1, p + 1)]
    ys = [f"y{i}" for i in range(1, q + 1)]
    edges = list(combinations(ys, 2)) + [(x, y) for x in xs for y in ys]
    return LabeledGraph(Graph(xs + ys, edges), "star", {"p": p, "q": q}, {"X": xs, "Y": ys})


def build_G_k(t: int, k: int) -> LabeledGraph:
    """build_G(t) joined with a (k, k)-star: Y universal, X attached to u2 and u3."""
    if t < 1 or k < 0:
        raise ValueError(f"need t >= 1 and k >= 0, got t={t}, k={k}")
    base = build_G(t)
    if k == 0:
        return LabeledGraph(base.graph, "g_k", {"t": t, "k": 0}, base.roles, base.heavy,
                            base.aliases)
    star = build_star(k, k)
    g0, s = base.graph, star.graph
    edges = base.graph.edge_names() + star.graph.edge_names()
    edges += [(y, w) for y in star.roles["Y"] for w in g0.names]
    edges += [(hub, x) for hub in ("u2", "u3") for x in star.roles["X"]]
    roles = dict(base.roles, X=star.roles["X"], Y=star.roles["Y"])
    return LabeledGraph(Graph(g0.names + s.names, edges), "g_k", {"t": t, "k": k}, roles,
                        base.heavy, base.aliases)


def pad_with_twins(lg: LabeledGraph, count: int, of: str = "v1") -> LabeledGraph:
    g = lg.graph
    twins = []
    for i in range(1, count + 1):
        name = f"{of}_t{i}"
        g = add_true_twin(g, of, name)
        twins.append(name)
    roles = dict(lg.roles, twins=twins)
    return LabeledGraph(g, lg.family, dict(lg.params, pad=count), roles, lg.heavy, lg.aliases)


def witness_cycle_names(k: int, twins=()) -> list[str]:
    """Non-extendable cycle missing exactly the subdivided path c..d.

    Twins of v1 are threaded right after v1.
    """
    star = []
    for i in range(1, k + 1):
        star += [f"x{i}", f"y{i}"]
    return (["a", "v1", *twins, "u2", *star, "v2", "g", "u1", "v5", "e", "f", "v4", "u3",
             "v3", "b"])


def hamiltonian_cycle_names(t: int, k: int, twins=()) -> list[str]:
    star = []
    for i in range(1, k + 1):
        star += [f"x{i}", f"y{i}"]
    zs = ["c"] + [f"z{i}" for i in range(1, t)] + ["d"]
    return (["a", "v1", *twins, "u2", *star, "v2", "g", "f", "v4", "u3", "v3", "b", *zs, "e",
             "v5", "u1"])


def witness_cycle(lg: LabeledGraph) -> Cycle:
    k = lg.params.get("k", 0)
    return lg.cycle(witness_cycle_names(k, lg.roles.get("twins", ())))


def min_vertices(t: int, k: int) -> int:
    return 14 + t + 2 * k


def counterexample(n: int, k: int, spec) -> tuple[LabeledGraph, Cycle]:
    """A (2+k)-connected Hamiltonian strongly chordal graph on n vertices that
    is not S-cycle extendable, with a cycle that has no S-extension."""
    if not isinstance(spec, ExtensionSpec):
        spec = ExtensionSpec(spec)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    t = spec.t
    need = min_vertices(t, k)
    if n < need:
        raise ValueError(f"n={n} is below the minimum 14 + t + 2k = {need} (t={t}, k={k})")
    lg = pad_with_twins(build_G_k(t, k), n - need)
    lg = LabeledGraph(lg.graph, "counterexample", dict(lg.params, n=n, S=sorted(spec.S)),
                      lg.roles, lg.heavy, lg.aliases)
    return lg, witness_cycle(lg)


FAMILIES = ("h_hat", "h_hat_minus", "g", "g_minus", "g_k", "counterexample", "star")


def build_family(family: str, **params) -> LabeledGraph:
    """Dispatch used by the command line; raises ValueError on bad parameters."""
    if family == "h_hat":
        return build_H_hat()
    if family == "h_hat_minus":
        return build_H_hat_minus()
    if family == "g":
        return build_G(_need(params, "t"))
    if family == "g_minus":
        return build_G_minus(_need(params, "t"))
    if family == "g_k":
        return build_G_k(_need(params, "t"), _need(params, "k"))
    if family == "star":
        return build_star(_need(params, "p"), _need(params, "q"))
    if family == "counterexample":
        spec = params.get("S")
        if spec is None:
            raise ValueError("counterexample needs S")
        return counterexample(_need(params, "n"), params.get("k") or 0, spec)[0]
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _need(params: dict, key: str) -> int:
    value = params.get(key)
    if value is None:
        raise ValueError(f"missing parameter {key}")
    return int(value)

