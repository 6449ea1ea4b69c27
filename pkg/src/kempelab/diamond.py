"""Diamond types around a removed edge, tiling families on ``M - e``, and the
checks built on them.

Throughout, ``Q = M - e`` with ``e = ab`` and boundary ``N-a-S-b``. Single
color tilings are color-agnostic edge sets, so a family such as the perfect
odd-cycle-free tilings is the same set whichever color it is painted.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .embed.generate import canonical_code
from .embed.maps import (
    DIRECTIONS,
    Diamond,
    Edge,
    PlanarTriangulation,
    SemiMPG,
    diamond_of,
    edge_key,
    from_faces,
)
from .errors import EmptyFamily, NoRedChain, NotFourGon, NSAdjacent
from .kempe import chain, kempe_component, vcs
from .tiling import (
    COLORS,
    MonoTiling,
    RGBTiling,
    VertexColoring,
    enumerate_mono_tilings,
    enumerate_rgb_tilings,
    enumerate_vertex_colorings,
    extend_mono_to_rgb,
    is_bipartite_edges,
    odd_cycle_stats,
    other_colors,
    tiling_to_coloring,
)

COLOR_NAMES = {"R": "red", "G": "green", "B": "blue"}


@dataclass(frozen=True)
class DiamondType:
    """``kind`` in A/B/C/D; ``direction`` is the pair carrying the lower of
    the two boundary colors (R < G < B); ``colors`` maps each boundary edge
    name (aN, aS, bN, bS) to its color."""

    kind: str
    direction: str | None
    colors: tuple[tuple[str, str], ...]

    @property
    def label(self) -> str:
        if self.kind == "A":
            return f"A-{COLOR_NAMES[self.colors[0][1]]}"
        low = min((c for _, c in self.colors), key=COLORS.index)
        return f"{self.kind}-{COLOR_NAMES[low]}-{self.direction}"



def semi_of(M: PlanarTriangulation, e: Edge) -> SemiMPG:
    return M.delete_edges([edge_key(*e)])


def _diamond(Q: SemiMPG) -> Diamond:
    if not isinstance(Q, SemiMPG) or len(Q.removed_edges) != 1 or Q.removed_vertices:
        raise NotFourGon("expected M - e for a single edge e")
    if len(Q.outer) != 1 or len(Q.outer_facets[0]) != 4:
        raise NotFourGon("outer facet is not a 4-gon")
    (e,) = Q.removed_edges
    return diamond_of(Q.base, e)


def boundary_colors(d: Diamond, t: RGBTiling) -> dict[str, str]:
    a, b, N, S = d.a, d.b, d.N, d.S
    return {"aN": t.color(a, N), "aS": t.color(a, S), "bN": t.color(b, N), "bS": t.color(b, S)}


def classify_diamond(Q: SemiMPG, t: RGBTiling) -> DiamondType:
    d = _diamond(Q)
    bc = boundary_colors(d, t)
    cols = tuple(sorted(bc.items()))
    aN, aS, bN, bS = bc["aN"], bc["aS"], bc["bN"], bc["bS"]
    if aN == aS == bN == bS:
        return DiamondType("A", None, cols)
    low = min(bc.values(), key=COLORS.index)
    if aN == bN and aS == bS:
        return DiamondType("B", "∧" if aN == low else "∨", cols)
    if aN == aS and bN == bS:
        return DiamondType("C", "<" if aN == low else ">", cols)
    if aN == bS and aS == bN:
        return DiamondType("D", "//" if aN == low else "\\\\", cols)
    raise ValueError(f"boundary colors {bc} have an odd color count")


# -- per-(M, e) analysis ----------------------------------------------------------

def mono_direction(d: Diamond, edges: frozenset[Edge]) -> str | None:
    """Which boundary pair a two-edge boundary intersection forms."""
    on = {e for e in d.boundary if e in edges}
    if len(on) != 2:
        return None
    for name in DIRECTIONS:
        if set(d.pair(name)) == on:
            return name
    return None


@dataclass
class DiamondAnalysis:
    """Everything enumerated once for ``Q = M - e``."""

    M: PlanarTriangulation
    e: Edge
    Q: SemiMPG
    d: Diamond
    tilings: list[RGBTiling]
    mono: list[frozenset[Edge]]
    bipartite: dict[frozenset[Edge], bool]
    types: dict[RGBTiling, DiamondType] = field(default_factory=dict)

    def on_omega(self, s: frozenset[Edge]) -> int:
        return sum(e in s for e in self.d.boundary)

    @property
    def rt0(self) -> list[frozenset[Edge]]:
        return [s for s in self.mono if self.bipartite[s] and self.on_omega(s) == 0]

    @property
    def gt2(self) -> list[frozenset[Edge]]:
        return [s for s in self.mono if self.bipartite[s] and self.on_omega(s) == 2]

    def gt2_dir(self, direction: str) -> list[frozenset[Edge]]:
        return [s for s in self.gt2 if mono_direction(self.d, s) == direction]

    @property
    def bt4(self) -> list[frozenset[Edge]]:
        return [s for s in self.mono if self.bipartite[s] and self.on_omega(s) == 4]

    def extensions(self, s: frozenset[Edge], color: str) -> list[RGBTiling]:
        """Tilings whose ``color`` class is exactly ``s``."""
        return self._by_restriction[color].get(s, [])

    def extensions_via_canals(self, s: frozenset[Edge], color: str) -> list[RGBTiling]:
        return extend_mono_to_rgb(self.Q, MonoTiling(color, s, self.Q))

    def type_of(self, t: RGBTiling) -> DiamondType:
        if t not in self.types:
            self.types[t] = classify_diamond(self.Q, t)
        return self.types[t]

    def __post_init__(self) -> None:
        groups: dict[str, dict[frozenset[Edge], list[RGBTiling]]] = {c: defaultdict(list) for c in COLORS}
        for t in self.tilings:
            for c in COLORS:
                groups[c][frozenset(t.edges_of(c))].append(t)
        self._by_restriction = {c: dict(g) for c, g in groups.items()}


@lru_cache(maxsize=256)
def analyze(M: PlanarTriangulation, e: Edge) -> DiamondAnalysis:
    e = edge_key(*e)
    Q = semi_of(M, e)
    d = _diamond(Q)
    mono = [m.edges for m in enumerate_mono_tilings(Q)]
    bip = {s: is_bipartite_edges(s) for s in mono}
    return DiamondAnalysis(M, e, Q, d, enumerate_rgb_tilings(Q), mono, bip)


# -- census ------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyCensus:
    """Sizes of the single-color families on ``M - e`` and of their extensions.

    ``rt0``, ``gt2`` and ``bt4`` count odd-cycle-free single-color tilings
    with 0, 2 or 4 member edges on the boundary; ``gt2_dir`` splits ``gt2``
    by boundary pair. ``ext0[c]`` counts RGB-tilings with no ``c`` edge on
    the boundary, ``ext2[c]`` those with exactly two, ``ext4[c]`` those with
    all four, and ``ext2_dir[c][x]`` those whose two ``c`` edges form pair
    ``x``. ``types`` counts RGB-tilings by diamond kind.
    """

    rt0: int
    gt2: int
    gt2_dir: dict[str, int]
    bt4: int
    ext0: dict[str, int]
    ext2: dict[str, int]
    ext4: dict[str, int]
    ext2_dir: dict[str, dict[str, int]]
    types: dict[str, int]
    total: int

    def as_dict(self) -> dict:
        return {
            "RT0r": self.rt0,
            "GT2g": self.gt2,
            "GT2g_dir": self.gt2_dir,
            "BT4b": self.bt4,
            "RGBT0": self.ext0,
            "RGBT2": self.ext2,
            "RGBT4": self.ext4,
            "RGBT2_dir": self.ext2_dir,
            "types": self.types,
            "tilings": self.total,
        }


def family_census(Q_or_M, e: Edge | None = None) -> FamilyCensus:
    A = _analysis(Q_or_M, e)
    d = A.d
    ext0 = {c: 0 for c in COLORS}
    ext2 = {c: 0 for c in COLORS}
    ext4 = {c: 0 for c in COLORS}
    ext2_dir = {c: {x: 0 for x in DIRECTIONS} for c in COLORS}
    types = {k: 0 for k in "ABCD"}
    for t in A.tilings:
        for c in COLORS:
            s = frozenset(t.edges_of(c))
            k = A.on_omega(s)
            if k == 0:
                ext0[c] += 1
            elif k == 2:
                ext2[c] += 1
                ext2_dir[c][mono_direction(d, s)] += 1
            elif k == 4:
                ext4[c] += 1
        types[A.type_of(t).kind] += 1
    return FamilyCensus(
        rt0=len(A.rt0),
        gt2=len(A.gt2),
        gt2_dir={x: len(A.gt2_dir(x)) for x in DIRECTIONS},
        bt4=len(A.bt4),
        ext0=ext0,
        ext2=ext2,
        ext4=ext4,
        ext2_dir=ext2_dir,
        types=types,
        total=len(A.tilings),
    )


def _analysis(Q_or_M, e: Edge | None) -> DiamondAnalysis:
    if isinstance(Q_or_M, SemiMPG):
        _diamond(Q_or_M)
        (edge,) = Q_or_M.removed_edges
        return analyze(Q_or_M.base, edge)
    if e is None:
        raise ValueError("pass an edge together with an MPG")
    return analyze(Q_or_M, e)


def orbit_extensions(A: DiamondAnalysis, family: str) -> set[RGBTiling]:
    """RGB-tilings extending some member of the synonym closure of a family.

    ``family`` is ``RT0``, ``BT4``, or ``GT2:<direction>``.
    """
    out: set[RGBTiling] = set()
    if family == "RT0":
        sets = A.rt0
    elif family == "BT4":
        sets = A.bt4
    elif family.startswith("GT2:"):
        sets = A.gt2_dir(family[4:])
    else:
        raise KeyError(family)
    for s in sets:
        for c in COLORS:
            out.update(A.extensions(s, c))
    return out


def partition_identity(M: PlanarTriangulation, e: Edge) -> dict[str, bool]:
    """Checks that the diamond kinds are exactly the family closures:
    A from all-four-boundary tilings, B from the north/south pairs, C from
    east/west and D from the diagonals, and that these cover every tiling."""
    A = analyze(M, e)
    by_kind = {k: {t for t in A.tilings if A.type_of(t).kind == k} for k in "ABCD"}
    B_ext = orbit_extensions(A, "GT2:∧") | orbit_extensions(A, "GT2:∨")
    C_ext = orbit_extensions(A, "GT2:<") | orbit_extensions(A, "GT2:>")
    D_ext = orbit_extensions(A, "GT2:" + "//") | orbit_extensions(A, "GT2:\\\\")
    every = set(A.tilings)
    return {
        "A": by_kind["A"] == orbit_extensions(A, "BT4"),
        "B": by_kind["B"] == B_ext,
        "C": by_kind["C"] == C_ext,
        "D": by_kind["D"] == D_ext,
        "RT0_covers_all": orbit_extensions(A, "RT0") == every,
        "AB_only": orbit_extensions(A, "RT0") == by_kind["A"] | by_kind["B"],
    }


# -- four-colorability and witnesses ---------------------------------------------------

def find_coloring(M: PlanarTriangulation) -> VertexColoring | None:
    cols = enumerate_vertex_colorings(M)
    return cols[0] if cols else None


@lru_cache(maxsize=1024)
def is_four_colorable(M: PlanarTriangulation) -> bool:
    return bool(enumerate_rgb_tilings(M))


def coloring_witness(A: DiamondAnalysis, t: RGBTiling) -> VertexColoring | None:
    """A proper coloring of ``M`` derived from a tiling of ``M - e``.

    The induced coloring already works when ``a`` and ``b`` differ; otherwise
    a Kempe switch at ``a`` succeeds for any color class not joining ``a``
    to ``b``.
    """
    a, b = A.d.a, A.d.b
    c = tiling_to_coloring(A.Q, t, a, 1)
    if c[a] != c[b]:
        return _lift(A, c)
    for other in (2, 3, 4):
        comp = kempe_component(c, a, (1, other), A.Q)
        if b not in comp.vertices:
            return _lift(A, vcs(c, comp, A.Q))
    return None


def _lift(A: DiamondAnalysis, c: VertexColoring) -> VertexColoring | None:
    out = VertexColoring(c.assignment, A.M)
    return out if out.is_proper(A.M) else None


@dataclass(frozen=True)
class IffVerdict:
    four_colorable: bool
    gt_nonempty: bool
    lt_count: int
    slash_count: int

    @property
    def holds(self) -> bool:
        return self.four_colorable == self.gt_nonempty


def four_color_iff(M: PlanarTriangulation, e: Edge) -> IffVerdict:
    """``M`` is 4-colorable exactly when some odd-cycle-free single-color
    tiling of ``M - e`` uses the east pair ``{aN, aS}`` or the diagonal
    ``{aN, bS}`` and no other boundary edge."""
    A = analyze(M, e)
    lt = len(A.gt2_dir("<"))
    sl = len(A.gt2_dir("//"))
    return IffVerdict(is_four_colorable(M), lt + sl > 0, lt, sl)


# -- necessary conditions -------------------------------------------------------------

@dataclass(frozen=True)
class ClauseResult:
    holds: bool
    witness: VertexColoring | None = None
    detail: str = ""

    @property
    def witness_ok(self) -> bool:
        return self.holds or self.witness is not None


@dataclass(frozen=True)
class NecessaryReport:
    a: ClauseResult
    b: ClauseResult
    c: ClauseResult
    d: ClauseResult
    b_crosscheck: bool
    two_chains_even: bool

    @property
    def clauses(self) -> dict[str, ClauseResult]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


def _any_witness(A: DiamondAnalysis, tilings: Iterable[RGBTiling]) -> VertexColoring | None:
    for t in tilings:
        w = coloring_witness(A, t)
        if w is not None:
            return w
    return None


def _even_path(edges: Iterable[Edge], a: int, b: int) -> bool:
    """True if the shortest a-b path inside ``edges`` exists and has even length."""
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = {a: 0}
    frontier = [a]
    while frontier and b not in dist:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return b in dist and dist[b] % 2 == 0


def _even_chain(t: RGBTiling, color: str, a: int, b: int) -> bool:
    ch = chain(t, color, a, b)
    return ch is not None and ch.length % 2 == 0


def check_necessary(M: PlanarTriangulation, e: Edge) -> NecessaryReport:
    """Evaluate clauses (a)-(d) on ``M - e``; every failing clause carries a
    proper 4-coloring of ``M`` built from the tiling that broke it."""
    A = analyze(M, e)
    a, b = A.d.a, A.d.b

    # (a) three families nonempty, east/west and diagonal families empty
    cd = A.gt2_dir("<") + A.gt2_dir(">") + A.gt2_dir("//") + A.gt2_dir("\\\\")
    holds_a = bool(A.rt0) and bool(A.gt2_dir("∧")) and bool(A.bt4) and not cd
    wa = None if holds_a else _any_witness(A, A.tilings)
    res_a = ClauseResult(holds_a, wa, f"RT0={len(A.rt0)} GT2^={len(A.gt2_dir('∧'))} BT4={len(A.bt4)} CD={len(cd)}")

    # (b) every perfect tiling has an even a-b path
    bad_b = None
    for s in A.rt0:
        if not _even_path(s, a, b):
            bad_b = s
            break
    wb = None
    if bad_b is not None:
        wb = _any_witness(A, A.extensions(bad_b, "R"))
    crosscheck = (bad_b is not None) == any(is_bipartite_edges(set(s) | {A.e}) for s in A.rt0)
    res_b = ClauseResult(bad_b is None, wb, "")

    # (c) for north-pair tilings, every extension with a blue south pair
    # has an even red a-b path (and symmetrically with red and blue swapped)
    bad_c = None
    seen_blue_south = True
    for s in A.gt2_dir("∧"):
        exts = A.extensions(s, "G")
        if not any(t.color(a, A.d.S) == "B" for t in exts):
            seen_blue_south = False
            bad_c = next(iter(exts), None)
            break
        for t in exts:
            absent = "R" if t.color(a, A.d.S) == "B" else "B"
            if not _even_chain(t, absent, a, b):
                bad_c = t
                break
        if bad_c is not None:
            break
    holds_c = bad_c is None and seen_blue_south and bool(A.gt2_dir("∧"))
    wc = None
    if not holds_c:
        wc = coloring_witness(A, bad_c) if bad_c is not None else _any_witness(A, A.tilings)
    res_c = ClauseResult(holds_c, wc, "" if A.gt2_dir("∧") else "no north-pair tilings")

    # (d) every extension of every all-four tiling has even red and green a-b paths
    bad_d = None
    unextended = False
    for s in A.bt4:
        exts = A.extensions(s, "B")
        if not exts:
            unextended = True
            break
        for t in exts:
            if not (_even_chain(t, "R", a, b) and _even_chain(t, "G", a, b)):
                bad_d = t
                break
        if bad_d is not None:
            break
    holds_d = bad_d is None and not unextended and bool(A.bt4)
    wd = None
    if not holds_d:
        wd = coloring_witness(A, bad_d) if bad_d is not None else _any_witness(A, A.tilings)
    res_d = ClauseResult(holds_d, wd, "" if A.bt4 else "no all-four tilings")

    return NecessaryReport(res_a, res_b, res_c, res_d, crosscheck, two_chains_even(A))


def two_chains_even(A: DiamondAnalysis) -> bool:
    """Whenever a tiling of ``M - e`` has both a red and a green a-b path,
    the shortest ones have even length."""
    a, b = A.d.a, A.d.b
    for t in A.tilings:
        for x, y in (("R", "G"), ("R", "B"), ("G", "B")):
            p, q = chain(t, x, a, b), chain(t, y, a, b)
            if p is not None and q is not None and (p.length % 2 or q.length % 2):
                return False
    return True


# -- sufficient conditions ----------------------------------------------------------

@dataclass(frozen=True)
class SufficientReport:
    i: bool
    ii: bool
    ii_prime: bool

    @property
    def any_true(self) -> bool:
        return self.i or self.ii or self.ii_prime

    @property
    def agree(self) -> bool:
        return self.ii == self.ii_prime


def check_sufficient(M: PlanarTriangulation, e: Edge, bound: int | None = None) -> SufficientReport:
    """Predicates (i), (ii), (ii') on ``M - e``. Any of them being true would
    certify that ``M`` cannot be 4-colored."""
    if bound is not None and M.vertex_count > bound:
        raise ValueError(f"graph order {M.vertex_count} exceeds bound {bound}")
    A = analyze(M, e)
    a, b = A.d.a, A.d.b
    if not A.rt0:
        raise EmptyFamily(f"no perfect odd-cycle-free tiling on M - {A.e}")
    if not A.gt2:
        raise EmptyFamily(f"no two-edge odd-cycle-free tiling on M - {A.e}")

    i = all(_even_path(s, a, b) for s in A.rt0)

    ii = True
    ii_prime = True
    for s in A.gt2:
        for t in A.extensions(s, "G"):
            present = {c for c in boundary_colors(A.d, t).values()}
            absent = next(c for c in COLORS if c not in present)
            if not _even_chain(t, absent, a, b):
                ii = False
            if A.type_of(t).kind != "B" or chain(t, absent, a, b) is None:
                ii_prime = False
    return SufficientReport(i, ii, ii_prime)


# -- region switching ---------------------------------------------------------------

def region_swap(Q: SemiMPG, t: RGBTiling, path: tuple[int, ...], color: str) -> RGBTiling:
    """Swap the two colors other than ``color`` on every edge strictly inside
    the region bounded by ``path`` (an a-b path) and the removed edge, on the
    side of the face ``abN``."""
    M = Q.base
    (e,) = Q.removed_edges
    d = diamond_of(M, e)
    a, b = d.a, d.b
    cyc = tuple(path) if path[0] == a else tuple(reversed(path))
    left, right = M.split_by_cycle(cyc)
    north = M.face_of(a, b)
    region = left if north in left else right
    walls = {edge_key(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    inside = {M.edges[i] for f in region for i in M.face_edges[f]} - walls
    x, y = other_colors(color)
    changes = {}
    for u, v in inside:
        col = t.color(u, v)
        if col == x:
            changes[(u, v)] = y
        elif col == y:
            changes[(u, v)] = x
    return t.with_colors(changes)


def typeA_to_typeB(Q: SemiMPG, t: RGBTiling) -> RGBTiling:
    d = _diamond(Q)
    kind = classify_diamond(Q, t)
    if kind.kind != "A":
        raise ValueError(f"tiling is type {kind.kind}, not A")
    x = kind.colors[0][1]
    for c in COLORS:
        if c == x:
            continue
        ch = chain(t, c, d.a, d.b)
        if ch is not None:
            return region_swap(Q, t, ch.path, c)
    raise NoRedChain("no a-b chain in either non-boundary color")


# -- adding the other diagonal ------------------------------------------------------

def flip_edge(M: PlanarTriangulation, e: Edge) -> PlanarTriangulation:
    """``M - e + NS``; raises :class:`NSAdjacent` if ``NS`` is already an edge."""
    d = diamond_of(M, edge_key(*e))
    if M.has_edge(d.N, d.S):
        raise NSAdjacent(f"N={d.N} and S={d.S} are adjacent")
    faces = [f for f in M.faces if not ({d.a, d.b} <= set(f))]
    faces += [(d.N, d.a, d.S), (d.N, d.S, d.b)]
    return from_faces(M.n, faces)


@dataclass(frozen=True)
class AugmentVerdict:
    flipped: PlanarTriangulation = field(repr=False)
    ns_color: str
    tiling_valid: bool
    bipartite: bool
    colorable: bool
    chain_ab: bool


def ns_augment(Q: SemiMPG, t: RGBTiling) -> AugmentVerdict:
    """Give ``NS`` the color missing from a Type B boundary and check the result."""
    d = _diamond(Q)
    kind = classify_diamond(Q, t)
    if kind.kind != "B":
        raise ValueError(f"tiling is type {kind.kind}, not B")
    M2 = flip_edge(Q.base, d.e)
    present = {c for _, c in kind.colors}
    ns_color = next(c for c in COLORS if c not in present)
    cols = []
    for u, v in M2.edges:
        cols.append(ns_color if (u, v) == edge_key(d.N, d.S) else t.color(u, v))
    t2 = RGBTiling(tuple(cols), M2)
    red = t2.edges_of(ns_color)
    return AugmentVerdict(
        flipped=M2,
        ns_color=ns_color,
        tiling_valid=t2.is_valid(),
        bipartite=is_bipartite_edges(red),
        colorable=find_coloring(M2) is not None,
        chain_ab=chain(t, ns_color, d.a, d.b) is not None,
    )


def edge_flips(M: PlanarTriangulation) -> Iterator[tuple[Edge, PlanarTriangulation | None]]:
    """Each edge with its flipped graph, or None when ``NS`` already exists."""
    for e in M.edges:
        try:
            yield e, flip_edge(M, e)
        except NSAdjacent:
            yield e, None


def has_separating_triangle(M: PlanarTriangulation) -> bool:
    faces = {frozenset(f) for f in M.faces}
    adj = M.adjacency
    for u, v in M.edges:
        for w in adj[u] & adj[v]:
            if w > v and frozenset((u, v, w)) not in faces:
                return True
    return False


def min_oc_through(M: PlanarTriangulation, e: Edge) -> int:
    """Smallest odd-cycle count over single-color tilings of ``M`` containing ``e``."""
    e = edge_key(*e)
    best = None
    for m in enumerate_mono_tilings(M):
        if e in m.edges:
            oc = odd_cycle_stats(m.edges).oc
            best = oc if best is None else min(best, oc)
    return best if best is not None else -1


# -- counterexample hunt ------------------------------------------------------------

@dataclass(frozen=True)
class HuntHit:
    M: PlanarTriangulation = field(repr=False)
    e: Edge
    bt4: int
    extensions: int
    witness: RGBTiling = field(repr=False)

    @property
    def code(self) -> bytes:
        return canonical_code(self.M)


def all_four_premise(A: DiamondAnalysis) -> tuple[bool, int]:
    """True if all-four tilings exist and every extension of every one of
    them carries even a-b paths in both non-boundary colors."""
    if not A.bt4:
        return False, 0
    a, b = A.d.a, A.d.b
    count = 0
    for s in A.bt4:
        exts = A.extensions(s, "B")
        if not exts:
            return False, 0
        for t in exts:
            count += 1
            if not (_even_chain(t, "R", a, b) and _even_chain(t, "G", a, b)):
                return False, 0
    return True, count


def red_e_witness(M: PlanarTriangulation, e: Edge) -> RGBTiling | None:
    """An RGB-tiling of ``M`` with ``e`` red, if ``M`` has any tiling."""
    tilings = enumerate_rgb_tilings(M)
    if not tilings:
        return None
    t = tilings[0]
    c = t.color(*e)
    swap = {k: k for k in COLORS}
    swap[c], swap["R"] = "R", c
    return t.relabel(swap)


def hunt_counterexamples(corpus: Iterable[PlanarTriangulation], bound: int | None = None) -> list[HuntHit]:
    """Instances meeting the all-four premise that are nonetheless 4-colorable."""
    hits = []
    for M in corpus:
        if bound is not None and M.vertex_count > bound:
            continue
        hits.extend(hunt_graph(M))
    return hits


def hunt_graph(M: PlanarTriangulation) -> list[HuntHit]:
    hits = []
    for e in M.edges:
        A = analyze(M, e)
        ok, count = all_four_premise(A)
        if not ok:
            continue
        w = red_e_witness(M, e)
        if w is not None:
            hits.append(HuntHit(M, e, len(A.bt4), count, w))
    return hits
