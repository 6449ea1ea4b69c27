import pytest

from kempelab.embed.maps import (
    DIRECTIONS,
    PlanarTriangulation,
    SemiMPG,
    build_mpg,
    diamond_of,
    diamond_of_semi,
    dual,
    four_cycles,
    from_faces,
    named_mpg,
)
from kempelab.errors import (
    Disconnected,
    DisconnectedResult,
    EdgeAbsent,
    EdgeCountMismatch,
    InvalidMap,
    MultipleFacets,
    NotFourGon,
    NotSimple,
    NotTriangulation,
    OmegaNotCycle,
)

import oracles


def test_k4_basics():
    K4 = named_mpg("k4")
    assert K4.vertex_count == 4
    assert len(K4.edges) == 6
    assert len(K4.faces) == 4
    assert all(len(f) == 3 for f in K4.faces)
    assert K4.outer == ()


@pytest.mark.parametrize("name,n", [("k4", 4), ("octahedron", 6), ("bipyramid5", 7), ("icosahedron", 12)])
def test_named_graphs_are_triangulations(name, n):
    M = named_mpg(name)
    assert M.vertex_count == n
    assert len(M.edges) == 3 * n - 6
    assert len(M.faces) == 2 * n - 4
    assert {frozenset(f) for f in M.faces} == set(oracles.triangle_faces(M.edges))


def test_rotation_convention_face_left_of_dart():
    M = named_mpg("octahedron")
    for u in M.vertices:
        for i, v in enumerate(M.rotations[u]):
            f = M.faces[M.face_of(u, v)]
            # the face left of u->v holds the next neighbor counterclockwise
            assert set(f) == {u, v, M.rotations[u][(i + 1) % len(M.rotations[u])]}


def test_face_ids_start_at_smallest_vertex():
    M = named_mpg("icosahedron")
    assert M.face_of(0, M.rotations[0][0]) == 0


def test_invalid_inputs():
    with pytest.raises(InvalidMap):
        PlanarTriangulation([])
    with pytest.raises(NotSimple):
        PlanarTriangulation([[1, 1], [0], [], []])
    with pytest.raises(InvalidMap):
        PlanarTriangulation([[1], [], [], []])
    # a 4-cycle is not a triangulation
    with pytest.raises(NotTriangulation):
        build_mpg([[1, 3], [2, 0], [3, 1], [0, 2]])
    # two disjoint triangles
    with pytest.raises(InvalidMap):
        build_mpg([[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]])
    with pytest.raises(NotTriangulation):
        build_mpg([[1, 2], [2, 0], [0, 1]])


def test_error_types_are_distinct():
    assert issubclass(NotSimple, InvalidMap)
    assert issubclass(EdgeCountMismatch, InvalidMap)
    assert issubclass(Disconnected, InvalidMap)


def test_semi_mpg_delete_edge():
    K4 = named_mpg("k4")
    Q = K4.delete_edges([(0, 1)])
    assert isinstance(Q, SemiMPG)
    assert len(Q.edges) == 5
    assert len(Q.internal) == 2
    assert len(Q.outer) == 1
    assert len(Q.outer_facets[0]) == 4
    assert Q.is_one_piece


def test_semi_mpg_delete_vertex():
    M = named_mpg("icosahedron")
    Q = M.delete_vertex(0)
    assert len(Q.outer_facets) == 1
    assert len(Q.outer_facets[0]) == 5
    assert len(Q.internal) == len(M.faces) - 5


def test_semi_mpg_errors():
    K4 = named_mpg("k4")
    with pytest.raises(EdgeAbsent):
        K4.delete_edges([(0, 7)])
    O = named_mpg("octahedron")
    # two disjoint holes
    with pytest.raises(MultipleFacets):
        O.delete_edges([O.edges[0], _far_edge(O, O.edges[0])])
    Q = O.delete_edges([O.edges[0], _far_edge(O, O.edges[0])], multi_facet=True)
    assert len(Q.outer) == 2
    with pytest.raises(DisconnectedResult):
        K4.delete_edges([(0, 1), (0, 2), (0, 3)])


def _far_edge(M, e):
    touching = {f for f in M.edge_faces[M.edge_index[e]]}
    for g in M.edges:
        if not touching & set(M.edge_faces[M.edge_index[g]]):
            return g
    raise AssertionError


def test_semi_equality():
    M = named_mpg("octahedron")
    assert M.delete_edges([(0, 1)]) == M.delete_edges([(1, 0)])
    assert M.delete_edges([(0, 1)]) != M.delete_edges([(0, 4)])


def test_diamond_of():
    M = named_mpg("octahedron")
    for e in M.edges:
        d = diamond_of(M, e)
        assert (d.a, d.b) == e
        assert M.has_edge(d.a, d.N) and M.has_edge(d.b, d.N)
        assert M.has_edge(d.a, d.S) and M.has_edge(d.b, d.S)
        assert d.N != d.S
        assert set(M.faces[M.face_of(d.a, d.b)]) == {d.a, d.b, d.N}
        Q = M.delete_edges([e])
        assert diamond_of_semi(Q) == d
        assert set(Q.outer_facets[0]) == set(d.omega)


def test_diamond_pairs():
    d = diamond_of(named_mpg("k4"), (0, 1))
    assert len(DIRECTIONS) == 6
    pairs = {frozenset(d.pair(x)) for x in DIRECTIONS}
    assert len(pairs) == 6
    assert d.pair("^") == d.pair("∧")
    assert d.pair("\\") == d.pair("\\\\")


def test_diamond_of_semi_errors():
    M = named_mpg("octahedron")
    with pytest.raises(NotFourGon):
        diamond_of_semi(M.delete_vertex(0))


def test_dual_degrees():
    M = named_mpg("octahedron")
    D = dual(M)
    assert len(D.nodes) == 8
    assert all(D.degree(f) == 3 for f in D.nodes)
    Q = M.delete_edges([(0, 1)])
    DQ = dual(Q)
    assert [DQ.degree(f) for f in DQ.outer_nodes] == [4]
    G = D.to_networkx()
    assert G.number_of_edges() == 12


def test_from_faces_orientation_free():
    faces = [(0, 1, 2), (2, 0, 3), (0, 1, 3), (1, 2, 3)]
    M = from_faces(4, faces)
    assert len(M.edges) == 6


def test_split_by_cycle():
    M = named_mpg("octahedron")
    d = diamond_of(M, M.edges[0])
    left, right = M.split_by_cycle(d.omega)
    assert len(left) + len(right) == len(M.faces)
    with pytest.raises(OmegaNotCycle):
        M.split_by_cycle((0, 1))


def test_four_cycles_octahedron():
    M = named_mpg("octahedron")
    kinds = [k for _, k in four_cycles(M)]
    # the three equators are chordless and separate the two poles
    assert kinds.count("nontrivial-chordless") == 3
    assert kinds.count("trivial") == 12
