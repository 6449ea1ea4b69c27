import networkx as nx
import pytest

from kempelab import tiling as tl
from kempelab.embed.generate import generate_all
from kempelab.embed.maps import named_mpg
from kempelab.errors import InconsistentHolonomy, SizeLimit

import oracles


def semi_faces(Q):
    return [frozenset(Q.faces[f]) for f in Q.internal]


def test_klein_edge_colors():
    assert tl.edge_color(1, 3) == tl.edge_color(2, 4) == "R"
    assert tl.edge_color(1, 4) == tl.edge_color(2, 3) == "G"
    assert tl.edge_color(1, 2) == tl.edge_color(3, 4) == "B"
    for c, pairs in tl.PAIRS.items():
        for u, v in pairs:
            assert tl.edge_color(u, v) == c


# (vertex 4-colorings, RGB-tilings, single-color tilings)
FROZEN = {
    "k4": (24, 6, 3),
    "octahedron": (96, 24, 9),
    "bipyramid5": (120, 30, 11),
    "icosahedron": (240, 60, 36),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_counts(name):
    M = named_mpg(name)
    got = (
        len(tl.enumerate_vertex_colorings(M)),
        len(tl.enumerate_rgb_tilings(M)),
        len(tl.enumerate_mono_tilings(M)),
    )
    assert got == FROZEN[name]


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_counts_against_oracle(n):
    for M in generate_all(n):
        F = oracles.triangle_faces(M.edges)
        assert len(tl.enumerate_vertex_colorings(M)) == oracles.count_colorings(M.edges, M.vertices)
        assert len(tl.enumerate_rgb_tilings(M)) == oracles.count_face_tilings(M.edges, F)
        assert len(tl.enumerate_mono_tilings(M)) == len(oracles.exact_covers(M.edges, F))


def test_semi_counts_against_oracle():
    for M in generate_all(6):
        for e in M.edges:
            Q = M.delete_edges([e])
            F = semi_faces(Q)
            assert len(tl.enumerate_rgb_tilings(Q)) == oracles.count_face_tilings(Q.edges, F)
            assert {m.edges for m in tl.enumerate_mono_tilings(Q)} == {
                frozenset(tuple(sorted(x)) for x in s) for s in oracles.exact_covers(Q.edges, F)
            }


def test_k5_has_no_coloring():
    assert tl.enumerate_vertex_colorings(nx.complete_graph(5)) == []


def test_colorings_lexicographic():
    cols = tl.enumerate_vertex_colorings(named_mpg("k4"))
    assert [c.assignment for c in cols] == sorted(c.assignment for c in cols)


def test_k4_minus_edge():
    Q = named_mpg("k4").delete_edges([(0, 1)])
    assert len(tl.enumerate_rgb_tilings(Q)) == 12
    perfect = tl.enumerate_mono_tilings(Q, perfect_only=True)
    assert len(perfect) == 1
    (m,) = perfect
    assert m.edges == {(2, 3)}
    assert m.perfect


def test_triangle_has_three_mono_tilings():
    # a single internal face: the octahedron minus a vertex's far side is too big,
    # so cut K4 down to one triangle
    K4 = named_mpg("k4")
    Q = K4.delete_vertex(3)
    assert len(Q.internal) == 1
    assert len(tl.enumerate_mono_tilings(Q)) == 3


def test_round_trip_every_base():
    M = named_mpg("octahedron")
    for c in tl.enumerate_vertex_colorings(M):
        t = tl.coloring_to_tiling(c, M)
        assert t.is_valid()
        for v in M.vertices:
            assert tl.tiling_to_coloring(M, t, v, c[v]) == c


def test_four_colorings_per_tiling():
    M = named_mpg("bipyramid5")
    seen = {}
    for c in tl.enumerate_vertex_colorings(M):
        seen.setdefault(tl.coloring_to_tiling(c, M), []).append(c)
    assert all(len(v) == 4 for v in seen.values())


def test_inconsistent_holonomy():
    M = named_mpg("k4")
    bad = tl.RGBTiling(("R",) * len(M.edges), M)
    assert not bad.is_valid()
    with pytest.raises(InconsistentHolonomy):
        tl.tiling_to_coloring(M, bad, 0, 1)


def test_tiling_accessors_and_json():
    M = named_mpg("k4")
    t = tl.enumerate_rgb_tilings(M)[0]
    assert t[(0, 1)] == t.color(1, 0)
    assert sum(len(t.edges_of(c)) for c in tl.COLORS) == 6
    assert tl.RGBTiling.from_json(t.to_json(), M) == t
    assert t.restrict("R").is_valid()
    c = tl.enumerate_vertex_colorings(M)[0]
    assert tl.VertexColoring.from_json(c.to_json(), graph=M) == c


def test_extension_counts_k4():
    M = named_mpg("k4")
    for m in tl.enumerate_mono_tilings(M):
        assert len(tl.extend_mono_to_rgb(M, m)) == 2
    Q = M.delete_edges([(0, 1)])
    counts = sorted(len(tl.extend_mono_to_rgb(Q, m)) for m in tl.enumerate_mono_tilings(Q))
    assert 4 in counts


@pytest.mark.parametrize("n", [5, 6])
def test_extensions_against_oracle(n):
    for M in generate_all(n):
        for Q in [M, M.delete_edges([M.edges[0]])]:
            F = semi_faces(Q)
            for m in tl.enumerate_mono_tilings(Q):
                ext = tl.extend_mono_to_rgb(Q, m)
                members = {frozenset(e) for e in m.edges}
                assert len(ext) == oracles.tilings_with_class(Q.edges, F, members)
                N = len(tl.canal_objects_of(Q, m))
                assert len(ext) in (0, 2**N)
                assert N == oracles.canal_count(F, [e for e in Q.edges if e not in m.edges])


def test_odd_ring_gives_no_extension():
    M = named_mpg("bipyramid5")
    zero = [m for m in tl.enumerate_mono_tilings(M) if not tl.extend_mono_to_rgb(M, m)]
    assert len(zero) == 1
    for m in zero:
        assert not tl.is_bipartite_edges(m.edges)


THETA = {
    "v0": 0, "v1": 1, "v2": 2, "vc": 3, "v7": 4, "v5": 5, "v6": 6, "va": 7,
}


def theta_edges():
    c1 = ["v0", "v1", "v2", "vc", "v7"]
    c2 = ["v5", "v6", "v7", "vc", "va"]
    es = set()
    for cyc in (c1, c2):
        for i in range(len(cyc)):
            u, v = THETA[cyc[i]], THETA[cyc[(i + 1) % len(cyc)]]
            es.add((min(u, v), max(u, v)))
    return sorted(es)


def test_theta_fixture():
    es = theta_edges()
    assert len(es) == 9
    st = tl.odd_cycle_stats(es)
    assert (st.odd_count, st.even_count) == (2, 1)
    assert st.oc == 1
    assert (st.odd_count, st.even_count) == oracles.odd_even_simple_cycles(es)
    assert st.oc == oracles.min_odd_transversal(es)


def test_odd_cycle_cap():
    es = list(nx.complete_graph(7).edges())
    with pytest.raises(SizeLimit):
        tl.odd_cycle_stats(es, cap=10)


def test_oc_against_oracle_on_mono_sets():
    for M in generate_all(7):
        for m in tl.enumerate_mono_tilings(M):
            st = tl.odd_cycle_stats(m.edges)
            assert st.oc == oracles.min_odd_transversal(m.edges)
            assert (st.oc == 0) == tl.is_bipartite_edges(m.edges)


def test_boundary_signature_k4_minus_edge():
    M = named_mpg("k4")
    Q = M.delete_edges([(0, 1)])
    for t in tl.enumerate_rgb_tilings(Q):
        sig = tl.boundary_signature(Q, t)
        assert len(sig.walks[0]) == 4
        assert sum(sig.counts().values()) == 4
        # a closed walk around the hole returns to the start color: even parities per color pair
        assert sum(sig.parities().values()) % 2 == 0
