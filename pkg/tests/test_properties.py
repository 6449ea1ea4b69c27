"""Randomized invariants over the desk-scale corpus."""

from hypothesis import assume, given
from hypothesis import strategies as st

from kempelab import blockgraph as bgm
from kempelab import diamond as dm
from kempelab import kempe as km
from kempelab import relations as rel
from kempelab import tiling as tl
from kempelab.embed.generate import canonical_code, from_code, generate_codes
from kempelab.embed.io import from_json, read_planar_code, to_json, write_planar_code
from kempelab.embed.maps import PlanarTriangulation

CODES = [c for n in range(4, 9) for c in generate_codes(n)]


@st.composite
def mpgs(draw):
    return from_code(draw(st.sampled_from(CODES)))


@st.composite
def one_piece(draw):
    M = draw(mpgs())
    kind = draw(st.sampled_from(["M", "e", "v"]))
    if kind == "e":
        return M.delete_edges([draw(st.sampled_from(M.edges))])
    if kind == "v":
        return M.delete_vertex(draw(st.sampled_from(M.vertices)))
    return M


@st.composite
def tiled(draw):
    Q = draw(one_piece())
    tils = tl.enumerate_rgb_tilings(Q)
    return Q, draw(st.sampled_from(tils))


@given(mpgs(), st.randoms(use_true_random=False))
def test_canonical_code_is_label_free(M, rnd):
    perm = list(range(M.n))
    rnd.shuffle(perm)
    rot = [None] * M.n
    for v in range(M.n):
        rot[perm[v]] = [perm[u] for u in M.rotations[v]]
    M2 = PlanarTriangulation(rot)
    assert canonical_code(M2) == canonical_code(M)
    mirror = PlanarTriangulation([list(reversed(r)) for r in M.rotations])
    assert canonical_code(mirror) == canonical_code(M)


@given(mpgs())
def test_serialization_round_trips(M):
    assert from_json(to_json(M)) == M
    assert list(read_planar_code(write_planar_code([M]))) == [M]


@given(mpgs())
def test_euler(M):
    assert len(M.vertices) - len(M.edges) + len(M.faces) == 2


@given(tiled())
def test_tiling_gives_four_colorings(pair):
    Q, t = pair
    v = Q.vertices[0]
    cols = {tl.tiling_to_coloring(Q, t, v, k) for k in (1, 2, 3, 4)}
    assert len(cols) == 4
    for c in cols:
        assert c.is_proper(Q)
        assert tl.coloring_to_tiling(c, Q) == t


@given(tiled(), st.sampled_from(tl.COLORS), st.data())
def test_ecs_involution(pair, color, data):
    Q, t = pair
    canals = km.canal_objects(Q, t, color)
    assume(canals)
    c = data.draw(st.sampled_from(canals))
    t2 = km.ecs(t, c)
    assert t2.is_valid()
    assert km.ecs(t2, c) == t
    assert t2.edges_of(color) == t.edges_of(color)


@given(tiled(), st.sampled_from(tl.COLORS))
def test_block_graph_tree(pair, color):
    Q, t = pair
    bg = bgm.build_block_graph(Q, t, color)
    assert bg.is_tree
    assert sum(len(b) for b in bg.blocks) == len(Q.vertices)


@given(tiled(), st.sampled_from(tl.COLORS), st.data())
def test_block_fire_then_fire_again(pair, color, data):
    Q, t = pair
    bg = bgm.build_block_graph(Q, t, color)
    b = data.draw(st.integers(0, len(bg.blocks) - 1))
    plan = bgm.FiringPlan(bg, blocks=frozenset([b]))
    t2 = bgm.apply_firing(Q, t, plan)
    assert t2.is_valid()
    bg2 = bgm.build_block_graph(Q, t2, color)
    assert bgm.apply_firing(Q, t2, bgm.FiringPlan(bg2, blocks=frozenset([b]))) == t
    assert bgm.apply_firing(Q, t, bgm.firing_plan_block(bg, b)) == t2


@given(tiled(), st.permutations(tl.COLORS))
def test_synonyms_stay_valid(pair, perm):
    Q, t = pair
    s = t.relabel(dict(zip(tl.COLORS, perm)))
    assert s.is_valid()
    assert s in rel.synonym_orbit(t)


@given(tiled())
def test_mono_restrictions_extend_back(pair):
    Q, t = pair
    for color in tl.COLORS:
        m = t.restrict(color)
        assert m.is_valid()
        exts = tl.extend_mono_to_rgb(Q, m)
        assert t in exts
        assert len(exts) == 2 ** len(tl.canal_objects_of(Q, m))


@given(mpgs(), st.data())
def test_diamond_type_total(M, data):
    e = data.draw(st.sampled_from(M.edges))
    A = dm.analyze(M, e)
    kinds = {A.type_of(t).kind for t in A.tilings}
    assert kinds <= {"A", "B", "C", "D"}
    assert dm.four_color_iff(M, e).holds
    dm.analyze.cache_clear()


@given(mpgs(), st.data())
def test_vcs_matches_block_fire(M, data):
    cols = tl.enumerate_vertex_colorings(M)
    c = data.draw(st.sampled_from(cols))
    v = data.draw(st.sampled_from(M.vertices))
    other = data.draw(st.sampled_from(sorted({1, 2, 3, 4} - {c[v]})))
    comp = km.kempe_component(c, v, (c[v], other), M)
    c2 = km.vcs(c, comp, M)
    assert c2.is_proper(M)
    t = tl.coloring_to_tiling(c, M)
    bg = bgm.build_block_graph(M, t, tl.edge_color(c[v], other))
    b = bgm.block_containing(bg, comp.vertices)
    assert bgm.apply_firing(M, t, bgm.FiringPlan(bg, blocks=frozenset([b]))) == tl.coloring_to_tiling(c2, M)
