import pytest

from cycext.constructions import (
    FAMILIES,
    HEAVY_EDGES,
    build_family,
    build_G,
    build_G_k,
    build_G_minus,
    build_H_hat,
    build_H_hat_minus,
    build_star,
    counterexample,
    hamiltonian_cycle_names,
    min_vertices,
    pad_with_twins,
    witness_cycle,
    witness_cycle_names,
)
from cycext.extendability import ExtensionSpec, is_cycle_extendable
from cycext.graph import is_true_twins, neighbors
from cycext.hamiltonicity import HamTable
from cycext.recognition import is_strongly_chordal, vertex_connectivity


def test_H_hat_counts():
    H = build_H_hat().graph
    assert (H.n, H.num_edges()) == (15, 40)
    Hm = build_H_hat_minus().graph
    assert Hm.n == 15 and Hm.num_edges() == 22
    assert Hm.degree("d") == 3 and Hm.degree("u2") == 2
    assert Hm.degree("u3") == 2 and not Hm.has_edge("u1", "e")


def test_heavy_edges_shared():
    H, Hm = build_H_hat(), build_H_hat_minus()
    for u, v in HEAVY_EDGES:
        assert H.graph.has_edge(u, v) and Hm.graph.has_edge(u, v)
    assert set(H.graph.names_of(neighbors(H.graph, "v3"))) == {"u3", "b"}
    for v in ("v1", "v2", "v3", "v4", "v5"):
        assert H.graph.degree(v) == 2


def test_G_family():
    assert build_G(1).graph == build_H_hat().graph
    G3 = build_G(3)
    assert G3.graph.n == 17
    assert G3.roles["Z"] == ["c", "z1", "z2", "d"]
    assert G3.resolve("z0") == "c" and G3.resolve("z3") == "d"
    Gm = build_G_minus(3).graph
    for z in ("z1", "z2"):
        assert Gm.degree(z) == 3  # two path neighbors and u1
    with pytest.raises(ValueError):
        build_G(0)


def test_stars():
    s = build_star(1, 1).graph
    assert (s.n, s.num_edges()) == (2, 1)
    s = build_star(3, 3).graph
    assert (s.n, s.num_edges()) == (6, 3 + 9)
    s = build_star(2, 1).graph
    assert s.num_edges() == 2 and s.degree("y1") == 2  # P3
    with pytest.raises(ValueError):
        build_star(0, 2)


def test_G_k():
    for t, k in [(1, 0), (1, 1), (2, 2), (3, 1)]:
        lg = build_G_k(t, k)
        assert lg.graph.n == min_vertices(t, k)
        assert lg.graph.degree("v1") == 2 + k
    lg = build_G_k(2, 2)
    for y in lg.roles["Y"]:
        assert lg.graph.degree(y) == lg.graph.n - 1


def test_witness_cycles():
    H = build_H_hat()
    assert len(witness_cycle_names(0)) == 13
    assert len(witness_cycle_names(2)) == 17
    for t, k in [(1, 0), (2, 1), (3, 2)]:
        lg = build_G_k(t, k)
        c = witness_cycle(lg)
        assert c.is_valid(lg.graph)
        assert lg.graph.full & ~c.vertex_set == lg.mask(lg.roles["Z"])
        full = lg.cycle(hamiltonian_cycle_names(t, k))
        assert full.vertex_set == lg.graph.full
    assert witness_cycle(H).vertex_set == H.graph.full & ~H.mask(["c", "d"])


def test_padding():
    lg = pad_with_twins(build_G_k(1, 1), 3)
    assert lg.graph.n == min_vertices(1, 1) + 3
    for w in lg.roles["twins"]:
        assert is_true_twins(lg.graph, "v1", w)
    c = witness_cycle(lg)
    assert c.is_valid(lg.graph)
    assert lg.cycle(hamiltonian_cycle_names(1, 1, lg.roles["twins"])).vertex_set == lg.graph.full


def test_counterexample_examples():
    lg, c = counterexample(15, 0, {1})
    assert lg.graph == build_H_hat().graph
    assert c.vertex_set == lg.graph.full & ~lg.mask(["c", "d"])
    lg, c = counterexample(18, 0, {1, 2, 3})
    assert lg.graph.n == 18 and len(lg.roles["twins"]) == 1
    with pytest.raises(ValueError, match="minimum"):
        counterexample(14, 0, {1})
    with pytest.raises(ValueError):
        counterexample(20, -1, {1})


@pytest.mark.parametrize("t,k,extra", [(1, 0, 0), (1, 1, 4), (2, 0, 2), (2, 1, 0), (1, 2, 1)])
def test_counterexample_invariants(t, k, extra):
    spec = ExtensionSpec.upto(t)
    n = min_vertices(t, k) + extra
    lg, c = counterexample(n, k, spec)
    g = lg.graph
    assert g.n == n
    assert is_strongly_chordal(g)
    assert vertex_connectivity(g) == 2 + k
    table = HamTable(g)
    assert table.is_ham(g.full)
    assert c.is_valid(g)
    assert is_cycle_extendable(g, c, spec, table) is None


def test_build_family_dispatch():
    assert build_family("h_hat").graph.n == 15
    assert build_family("g", t=2).graph.n == 16
    assert build_family("star", p=3, q=3).graph.n == 6
    assert build_family("counterexample", n=17, S={1, 2, 3}).graph.n == 17
    assert set(FAMILIES) >= {"h_hat", "g_k", "counterexample"}
    with pytest.raises(ValueError, match="missing parameter"):
        build_family("g")
    with pytest.raises(ValueError, match="unknown family"):
        build_family("petersen")
