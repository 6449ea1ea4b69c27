"""Kempe components, chains, the two switching moves, and degree-5 analysis."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .canals import CanalObject, trace_canals
from .embed.maps import PlaneMap, PlanarTriangulation, SemiMPG
from .errors import ColorNotInPair, DegreeNot5, NotMaximal, PreconditionUnmet, StaleCanal
from .tiling import RGBTiling, VertexColoring, edge_color, other_colors


@dataclass(frozen=True)
class KempeComponent:
    color_pair: frozenset[int]
    vertices: frozenset[int]
    anchor: int


@dataclass(frozen=True)
class Chain:
    """One shortest witness path inside a color class."""

    color: str
    path: tuple[int, ...]

    @property
    def length(self) -> int:
        return max(len(self.path) - 1, 0)

    @property
    def parity(self) -> str:
        return "even" if self.length % 2 == 0 else "odd"


def _graph_of(c: VertexColoring, G: PlaneMap | None) -> PlaneMap:
    G = G or c.graph
    if G is None:
        raise ValueError("coloring carries no graph; pass one explicitly")
    return G


def kempe_component(c: VertexColoring, v: int, pair: Iterable[int], G: PlaneMap | None = None) -> KempeComponent:
    pair = frozenset(pair)
    if c[v] not in pair:
        raise ColorNotInPair(f"vertex {v} has color {c[v]}, not in {sorted(pair)}")
    G = _graph_of(c, G)
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in G.rotations[x]:
            if y not in seen and c[y] in pair:
                seen.add(y)
                stack.append(y)
    return KempeComponent(pair, frozenset(seen), v)


def vcs(c: VertexColoring, comp: KempeComponent, G: PlaneMap | None = None) -> VertexColoring:
    """Swap the two pair colors on a maximal Kempe component."""
    G = _graph_of(c, G)
    pair = comp.color_pair
    x, y = sorted(pair)
    for v in comp.vertices:
        if c[v] not in pair:
            raise NotMaximal(f"vertex {v} is not colored within {sorted(pair)}")
        for u in G.rotations[v]:
            if u not in comp.vertices and c[u] in pair:
                raise NotMaximal(f"component can be extended by vertex {u}")
    if kempe_component(c, comp.anchor, pair, G).vertices != comp.vertices:
        raise NotMaximal("vertex set is not a single connected component")
    col = list(c.assignment)
    for v in comp.vertices:
        col[v] = y if col[v] == x else x
    return VertexColoring(tuple(col), c.graph)


def canal_objects(Q: PlaneMap, t: RGBTiling, avoided_color: str) -> list[CanalObject]:
    idx = [i for i, col in enumerate(t.colors) if col == avoided_color]
    return trace_canals(Q, idx, avoided_color)


def ecs(t: RGBTiling, canal: CanalObject) -> RGBTiling:
    """Swap the two non-avoided colors on every edge the canal crosses."""
    a = canal.avoided_color
    for e in canal.left_bank | canal.right_bank:
        if t[e] != a:
            raise StaleCanal(f"bank edge {e} is not {a}")
    x, y = other_colors(a)
    changes = {}
    prev = None
    for e in canal.edges:
        col = t[e]
        if col == a or col == prev:
            raise StaleCanal(f"crossed edge {e} does not alternate {x}/{y}")
        prev = col
        changes[e] = y if col == x else x
    if canal.kind == "ring" and len(canal.edges) > 1 and t[canal.edges[0]] == prev:
        raise StaleCanal("ring does not alternate around its closing edge")
    return t.with_colors(changes)


def chain(t: RGBTiling, color: str, u: int, v: int) -> Chain | None:
    """Shortest ``u``-``v`` path using only ``color`` edges, or None."""
    Q = t.graph
    if u == v:
        return Chain(color, (u,))
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in Q.rotations[x]:
            if y in parent or t.colors[Q.index(x, y)] != color:
                continue
            parent[y] = x
            if y == v:
                path = [v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return Chain(color, tuple(reversed(path)))
            queue.append(y)
    return None


def chains_intersect(p: Chain, q: Chain, ignore: Iterable[int] = ()) -> bool:
    skip = set(ignore)
    return bool((set(p.path) & set(q.path)) - skip)


# -- degree-5 configurations ----------------------------------------------------

@dataclass(frozen=True)
class Deg5Report:
    """Kempe-chain data around a degree-5 vertex ``v0``.

    ``order`` is ``(v1, .., v5)`` counterclockwise, normalized so that
    ``v2`` and ``v5`` share a color when four colors appear. Chains are
    named by the neighbor indices they join: ``K13`` is the Kempe chain of
    colors ``{c1, c3}`` from ``v1`` to ``v3``, and so on.
    """

    v0: int
    order: tuple[int, ...]
    colors: tuple[int, ...]
    four_colors: bool
    pattern: tuple[str, ...] = ()
    K13: bool = False
    K24: bool = False
    K14: bool = False
    K35: bool = False

    @property
    def exclusive_13_24(self) -> bool:
        return self.K13 != self.K24

    @property
    def exclusive_14_35(self) -> bool:
        return self.K14 != self.K35

    @property
    def never_both(self) -> bool:
        return not (self.K13 and self.K24) and not (self.K14 and self.K35)


def _punctured(M: PlanarTriangulation, v0: int, c: VertexColoring) -> tuple[SemiMPG, VertexColoring]:
    G = M.delete_vertex(v0)
    col = list(c.assignment)
    col[v0] = 0
    return G, VertexColoring(tuple(col), G)


def _same_component(c: VertexColoring, G: PlaneMap, u: int, v: int) -> bool:
    pair = {c[u], c[v]}
    return v in kempe_component(c, u, pair, G).vertices


def analyze_deg5(M: PlanarTriangulation, v0: int, c: VertexColoring) -> Deg5Report:
    """Colors and Kempe chains among the five neighbors of ``v0`` in ``M - v0``."""
    rot = M.rotations[v0]
    if len(rot) != 5:
        raise DegreeNot5(f"vertex {v0} has degree {len(rot)}")
    G, cc = _punctured(M, v0, c)
    cols = [cc[u] for u in rot]
    if len(set(cols)) < 4:
        return Deg5Report(v0, tuple(rot), tuple(cols), False)
    # the repeated color sits at positions k+1 and k-1 around v1 = rot[k]
    k = next(i for i in range(5) if cols[(i + 1) % 5] == cols[(i - 1) % 5])
    order = tuple(rot[(k + i) % 5] for i in range(5))
    ocols = tuple(cc[u] for u in order)
    v1, v2, v3, v4, v5 = order
    pattern = tuple(edge_color(ocols[i], ocols[(i + 1) % 5]) for i in range(5))
    return Deg5Report(
        v0,
        order,
        ocols,
        True,
        pattern,
        K13=_same_component(cc, G, v1, v3),
        K24=_same_component(cc, G, v2, v4),
        K14=_same_component(cc, G, v1, v4),
        K35=_same_component(cc, G, v3, v5),
    )


@dataclass(frozen=True)
class TangleReport:
    """Outcome of the two single switches at ``v2`` and at ``v5``.

    ``A``/``B`` refer to the switch at ``v2``: (A) the ``v1``-``v4`` chain is
    gone, (B) a ``v3``-``v5`` chain appears. ``A5``/``B5`` are the mirror
    statements for the switch at ``v5``.
    """

    base: Deg5Report
    A: bool
    B: bool
    A5: bool
    B5: bool
    intersect: bool
    after_v2: Deg5Report = field(repr=False)
    after_v5: Deg5Report = field(repr=False)

    @property
    def holds_v2(self) -> bool:
        return self.A and self.B

    @property
    def holds_v5(self) -> bool:
        return self.A5 and self.B5

    @property
    def holds(self) -> bool:
        return self.holds_v2


def _requantify(M: PlanarTriangulation, v0: int, cc: VertexColoring, order: tuple[int, ...]) -> Deg5Report:
    G = cc.graph
    v1, v2, v3, v4, v5 = order
    cols = tuple(cc[u] for u in order)
    return Deg5Report(
        v0, order, cols, len(set(cols)) == 4, (),
        K13=cols[0] != cols[2] and _same_component(cc, G, v1, v3),
        K24=cols[1] != cols[3] and _same_component(cc, G, v2, v4),
        K14=cols[0] != cols[3] and _same_component(cc, G, v1, v4),
        K35=cols[2] != cols[4] and _same_component(cc, G, v3, v5),
    )


def check_tangling(M: PlanarTriangulation, v0: int, c: VertexColoring) -> TangleReport:
    rep = analyze_deg5(M, v0, c)
    if not (rep.four_colors and rep.K13 and rep.K14):
        raise PreconditionUnmet("needs four colors around v0 with both v1-v3 and v1-v4 chains")
    G, cc = _punctured(M, v0, c)
    v1, v2, v3, v4, v5 = rep.order
    c1, c2, c3, c4, c5 = rep.colors

    s2 = vcs(cc, kempe_component(cc, v2, (c2, c4), G), G)
    after2 = _requantify(M, v0, s2, rep.order)
    s5 = vcs(cc, kempe_component(cc, v5, (c5, c3), G), G)
    after5 = _requantify(M, v0, s5, rep.order)

    t = _tiling_of(G, cc)
    p = chain(t, edge_color(c1, c3), v1, v3)
    q = chain(t, edge_color(c1, c4), v1, v4)
    return TangleReport(
        base=rep,
        A=not after2.K14,
        B=after2.K35,
        A5=not after5.K13,
        B5=after5.K24,
        intersect=chains_intersect(p, q, {v1}),
        after_v2=after2,
        after_v5=after5,
    )


def _tiling_of(G: PlaneMap, c: VertexColoring) -> RGBTiling:
    return RGBTiling(tuple(edge_color(c[u], c[v]) for u, v in G.edges), G)


@dataclass(frozen=True)
class ReplayResult:
    success: bool
    step: str
    coloring: VertexColoring | None


def kempe_replay(M: PlanarTriangulation, v0: int, c: VertexColoring) -> ReplayResult:
    """Try to extend a coloring of ``M - v0`` to ``M`` with Kempe's switches.

    Steps, in order: color ``v0`` directly; switch at ``v1`` on ``{c1, c3}``;
    switch at ``v1`` on ``{c1, c4}``; finally the double switch at ``v2`` and
    ``v5``, which fails when the first switch links ``v3`` to ``v5``.
    """
    rep = analyze_deg5(M, v0, c)
    G, cc = _punctured(M, v0, c)

    def finish(col: VertexColoring, step: str) -> ReplayResult:
        used = {col[u] for u in M.rotations[v0]}
        free = [k for k in (1, 2, 3, 4) if k not in used]
        if not free:
            return ReplayResult(False, step, None)
        out = list(col.assignment)
        out[v0] = free[0]
        final = VertexColoring(tuple(out), M)
        return ReplayResult(final.is_proper(M), step, final)

    if not rep.four_colors:
        return finish(cc, "direct")
    v1, v2, v3, v4, v5 = rep.order
    c1, c2, c3, c4, c5 = rep.colors
    if not rep.K13:
        return finish(vcs(cc, kempe_component(cc, v1, (c1, c3), G), G), "switch13")
    if not rep.K14:
        return finish(vcs(cc, kempe_component(cc, v1, (c1, c4), G), G), "switch14")
    s = vcs(cc, kempe_component(cc, v2, (c2, c4), G), G)
    comp5 = kempe_component(s, v5, (c5, c3), G)
    if v3 in comp5.vertices:
        return ReplayResult(False, "double", None)
    return finish(vcs(s, comp5, G), "double")
