"""Corpus handling, named verification suites, and export."""

from __future__ import annotations

import json
import multiprocessing as mp
import time
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import blockgraph as bgm
from . import diamond as dm
from . import kempe as km
from . import relations as rel
from . import tiling as tl
from .embed.generate import canonical_code, from_code, generate_codes
from .embed.io import from_json, read_planar_code, to_dot, to_json, write_planar_code
from .embed.maps import PlaneMap, PlanarTriangulation, edge_key, four_cycles, named_mpg
from .errors import CorpusUnavailable, UnknownSuite, UnsupportedFormat

# class counts of triangulations on n = 4..11 vertices
KNOWN_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249}


# -- corpus -----------------------------------------------------------------------

@dataclass(frozen=True)
class Corpus:
    """Either every triangulation with ``n_min <= n <= n_max`` or the records of a planar_code file."""

    n_min: int = 4
    n_max: int = 8
    path: str | None = None

    @property
    def descriptor(self) -> str:
        return f"file:{self.path}" if self.path else f"n={self.n_min}..{self.n_max}"

    def codes(self) -> list[bytes]:
        if self.path:
            p = Path(self.path)
            if not p.is_file():
                raise CorpusUnavailable(f"corpus file {self.path} not found")
            graphs = read_planar_code(p.read_bytes())
            return [canonical_code(M) for M in graphs if self.n_min <= M.vertex_count <= self.n_max]
        out: list[bytes] = []
        for n in range(self.n_min, self.n_max + 1):
            out.extend(generate_codes(n))
        return out

    def graphs(self) -> Iterator[PlanarTriangulation]:
        for code in self.codes():
            yield from_code(code)


def one_piece_instances(M: PlanarTriangulation, vertices: bool = True) -> Iterator[PlaneMap]:
    """``M`` itself, every ``M - e`` and (optionally) every ``M - v``."""
    yield M
    for e in M.edges:
        yield M.delete_edges([e])
    if vertices:
        for v in M.vertices:
            yield M.delete_vertex(v)


# -- reports ------------------------------------------------------------------------

@dataclass
class Tally:
    counts: dict[str, dict[str, int]] = field(default_factory=lambda: defaultdict(lambda: {"pass": 0, "fail": 0, "vacuous": 0}))
    failures: list[dict] = field(default_factory=list)
    info: dict[str, int] = field(default_factory=lambda: defaultdict(int))

    def check(self, name: str, ok: bool, payload: Callable[[], dict] | None = None) -> None:
        self.counts[name]["pass" if ok else "fail"] += 1
        if not ok and len(self.failures) < 50:
            self.failures.append({"check": name, **(payload() if payload else {})})

    def record(self, payload: dict) -> None:
        if len(self.failures) < 50:
            self.failures.append(payload)

    def vacuous(self, name: str) -> None:
        self.counts[name]["vacuous"] += 1

    def note(self, key: str, k: int = 1) -> None:
        self.info[key] += k

    def merge(self, part: tuple[dict, list, dict]) -> None:
        counts, failures, info = part
        for name, c in counts.items():
            for k, v in c.items():
                self.counts[name][k] += v
        room = 50 - len(self.failures)
        self.failures.extend(failures[:max(room, 0)])
        for k, v in info.items():
            self.info[k] += v

    def plain(self) -> tuple[dict, list, dict]:
        return (
            {k: dict(v) for k, v in sorted(self.counts.items())},
            list(self.failures),
            dict(sorted(self.info.items())),
        )


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    corpus: str
    graphs: int
    checks: dict[str, dict[str, int]]
    counterexamples: list[dict]
    info: dict[str, int]
    wall_clock: float = field(compare=False)

    @property
    def failures(self) -> int:
        return sum(c["fail"] for c in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "corpus": self.corpus,
            "graphs": self.graphs,
            "ok": self.ok,
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "info": self.info,
        }
        if timing:
            d["wall_clock"] = round(self.wall_clock, 3)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), sort_keys=True)


# -- per-graph suite bodies -------------------------------------------------------------

def _code(M: PlanarTriangulation) -> str:
    return canonical_code(M).hex()


def suite_tait(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for Q in one_piece_instances(M, vertices=False):
        cols = tl.enumerate_vertex_colorings(Q)
        tils = tl.enumerate_rgb_tilings(Q)
        T.check("count_4x", len(cols) == 4 * len(tils), lambda: {"graph": _code(M), "instance": repr(Q)})
        T.check("tait_equivalence", bool(cols) == bool(tils))
        v0 = Q.vertices[0]
        ok = True
        for c in cols:
            t = tl.coloring_to_tiling(c, Q)
            if not t.is_valid() or tl.tiling_to_coloring(Q, t, v0, c[v0]) != c:
                ok = False
                break
        T.check("round_trip", ok, lambda: {"graph": _code(M), "instance": repr(Q)})


def suite_twoN(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for Q in one_piece_instances(M, vertices=False):
        tils = tl.enumerate_rgb_tilings(Q)
        groups: dict[frozenset, int] = defaultdict(int)
        for t in tils:
            groups[frozenset(t.edges_of("R"))] += 1
        for m in tl.enumerate_mono_tilings(Q, "R"):
            canals = tl.canal_objects_of(Q, m)
            ext = tl.extend_mono_to_rgb(Q, m)
            N = len(canals)
            T.check("count_in_0_or_2N", len(ext) in (0, 2**N), lambda: {"graph": _code(M), "mono": sorted(m.edges)})
            T.check("matches_enumeration", len(ext) == groups.get(m.edges, 0))
            bip = tl.is_bipartite_edges(m.edges)
            T.check("bipartite_iff_2N", (len(ext) == 2**N) == bip and (len(ext) == 0) == (not bip))
            T.check("extensions_valid", all(t.is_valid() and t.restrict("R").edges == m.edges for t in ext))


def suite_tree(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for Q in one_piece_instances(M):
        for t in tl.enumerate_rgb_tilings(Q):
            for color in tl.COLORS:
                bg = bgm.build_block_graph(Q, t, color, require_tree=False)
                T.check("tree", bg.is_tree, lambda: {"graph": _code(M), "instance": repr(Q), "color": color})
                T.check("blocks_minus_links", len(bg.blocks) - len(bg.links) == 1)
                T.check("canal_partition", _partition_ok(Q, t, color, bg))


def _partition_ok(Q: PlaneMap, t: tl.RGBTiling, color: str, bg: bgm.BlockGraph) -> bool:
    crossed = [e for l in bg.links for e in l.canal.edges]
    expected = {e for e, c in zip(Q.edges, t.colors) if c != color}
    banks_ok = all(l.canal.left_bank or l.canal.right_bank for l in bg.links)
    return len(crossed) == len(set(crossed)) and set(crossed) == expected and banks_ok


def suite_vcsecs(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for Q in one_piece_instances(M, vertices=False):
        for c in tl.enumerate_vertex_colorings(Q):
            t = tl.coloring_to_tiling(c, Q)
            bgs = {col: bgm.build_block_graph(Q, t, col) for col in tl.COLORS}
            seen = set()
            for v in Q.vertices:
                for other in (1, 2, 3, 4):
                    if other == c[v]:
                        continue
                    comp = km.kempe_component(c, v, (c[v], other), Q)
                    key = (comp.color_pair, comp.vertices)
                    if key in seen:
                        continue
                    seen.add(key)
                    direct = tl.coloring_to_tiling(km.vcs(c, comp, Q), Q)
                    bg = bgs[tl.edge_color(c[v], other)]
                    b = bgm.block_containing(bg, comp.vertices)
                    fired = bgm.apply_firing(Q, t, bgm.firing_plan_block(bg, b))
                    T.check("vcs_as_ecs", fired == direct, lambda: {"graph": _code(M), "vertex": v, "pair": [c[v], other]})
        for t in tl.enumerate_rgb_tilings(Q):
            for col in tl.COLORS:
                bg = bgm.build_block_graph(Q, t, col)
                for k, link in enumerate(bg.links):
                    direct = km.ecs(t, link.canal)
                    left = bgm.apply_firing(Q, t, bgm.firing_plan_link(bg, k, "left"))
                    right = bgm.apply_firing(Q, t, bgm.firing_plan_link(bg, k, "right"))
                    T.check("ecs_as_vcs", left == direct, lambda: {"graph": _code(M), "link": k})
                    T.check("either_side_same_result", right == left)


def suite_iff(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        v = dm.four_color_iff(M, e)
        T.check("biconditional", v.holds, lambda: {"graph": _code(M), "edge": list(e)})
        T.note("four_colorable", int(v.four_colorable))


def suite_r0exist(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        A = dm.analyze(M, e)
        T.check("RT0r_nonempty", bool(A.rt0), lambda: {"graph": _code(M), "edge": list(e)})
        T.check("GT2g_nonempty", bool(A.gt2), lambda: {"graph": _code(M), "edge": list(e)})
        T.note("BT4b_empty", int(not A.bt4))


def suite_necessary(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        r = dm.check_necessary(M, e)
        for name, cl in r.clauses.items():
            T.note(f"clause_{name}_fails", int(not cl.holds))
            T.check(f"clause_{name}_witness", cl.witness_ok, lambda: {"graph": _code(M), "edge": list(e), "clause": name})
        T.check("clause_b_crosscheck", r.b_crosscheck)


def suite_sufficient(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        s = dm.check_sufficient(M, e)
        payload = lambda: {"graph": _code(M), "edge": list(e), "i": s.i, "ii": s.ii, "ii'": s.ii_prime}
        T.check("i_false", not s.i, payload)
        T.check("ii_false", not s.ii, payload)
        T.check("ii_prime_false", not s.ii_prime, payload)
        T.check("ii_iff_ii_prime", s.agree, payload)


def suite_twochains(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        A = dm.analyze(M, e)
        a, b = A.d.a, A.d.b
        for t in A.tilings:
            p, q = km.chain(t, "R", a, b), km.chain(t, "G", a, b)
            if p is None or q is None:
                T.vacuous("both_even")
                continue
            T.check("both_even", p.length % 2 == 0 and q.length % 2 == 0, lambda: {"graph": _code(M), "edge": list(e)})


def suite_tangle(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for v0 in M.vertices:
        if M.degree(v0) != 5:
            continue
        G = M.delete_vertex(v0)
        for c in tl.enumerate_vertex_colorings(G):
            rep = km.analyze_deg5(M, v0, c)
            if not rep.four_colors:
                T.vacuous("exclusive")
                r = km.kempe_replay(M, v0, c)
                T.check("replay_direct", r.success)
                continue
            payload = lambda: {"graph": _code(M), "v0": v0, "coloring": list(c.assignment)}
            T.check("exclusive", rep.exclusive_13_24 and rep.exclusive_14_35, payload)
            replay = km.kempe_replay(M, v0, c)
            if rep.K13 and rep.K14:
                tr = km.check_tangling(M, v0, c)
                T.note("tangling_holds", int(tr.holds))
                T.note("tangling_fails", int(not tr.holds))
                T.check("tangle_fail_iff_replay", (not tr.holds) == replay.success, payload)
                if not tr.intersect:
                    T.check("disjoint_chains_break_A", not tr.A, payload)
            else:
                T.check("replay_single_switch", replay.success, payload)
            if replay.success:
                T.check("replay_proper", replay.coloring.is_proper(M), payload)


def suite_hunt(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for hit in dm.hunt_graph(M):
        T.note("hits")
        w = hit.witness
        ok = w.is_valid() and w.color(*hit.e) == "R"
        c = tl.tiling_to_coloring(M, w, 0, 1)
        T.check("hit_witness", ok and c.is_proper(M), lambda: {"graph": _code(M), "edge": list(hit.e)})
        T.check("hit_not_sufficient_i", not dm.check_sufficient(M, hit.e).i)
        T.record({"hit": _code(M), "edge": list(hit.e), "bt4": len(dm.analyze(M, hit.e).bt4), "extensions": hit.extensions})


def suite_fourcycle(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    cyc = four_cycles(M)
    chordless = [c for c, kind in cyc if kind == "nontrivial-chordless"]
    for c, kind in cyc:
        a, b, cc, d = c
        chord = M.has_edge(a, cc) or M.has_edge(b, d)
        T.check("trivial_has_chord", kind != "trivial" or chord)
    if chordless:
        T.check("chordless_implies_colorable", dm.is_four_colorable(M), lambda: {"graph": _code(M)})
    else:
        T.vacuous("chordless_implies_colorable")


def suite_partition(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        p = dm.partition_identity(M, e)
        for k in ("A", "B", "C", "D", "RT0_covers_all"):
            T.check(f"kind_{k}", p[k], lambda: {"graph": _code(M), "edge": list(e)})
        T.note("types_CD_present", int(not p["AB_only"]))
        A = dm.analyze(M, e)
        for s in A.mono:
            ok = sorted(A.extensions(s, "R"), key=lambda t: t.colors) == sorted(A.extensions_via_canals(s, "R"), key=lambda t: t.colors)
            T.check("extensions_two_routes", ok)


def suite_typeab(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for e in M.edges:
        A = dm.analyze(M, e)
        n_a = n_b = 0
        for t in A.tilings:
            kind = A.type_of(t).kind
            n_a += kind == "A"
            n_b += kind == "B"
            if kind != "A":
                continue
            try:
                out = dm.typeA_to_typeB(A.Q, t)
            except dm.NoRedChain:
                T.vacuous("region_swap_gives_B")
                continue
            T.check("region_swap_gives_B", out.is_valid() and A.type_of(out).kind == "B", lambda: {"graph": _code(M), "edge": list(e)})
            x = A.type_of(t).colors[0][1]
            ch = next(km.chain(t, c, A.d.a, A.d.b) for c in tl.COLORS if c != x and km.chain(t, c, A.d.a, A.d.b))
            back = dm.region_swap(A.Q, out, ch.path, ch.color)
            T.check("region_swap_involution", back == t)
            canal = next(cn for cn in km.canal_objects(A.Q, t, ch.color) if edge_key(A.d.a, A.d.N) in cn.edges)
            T.check("one_ecs_gives_B", A.type_of(km.ecs(t, canal)).kind == "B")
        T.note("equal_A_B_counts", int(n_a == n_b))
        T.note("unequal_A_B_counts", int(n_a != n_b))


def suite_flips(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    flips = list(dm.edge_flips(M))
    good = [M2 for _, M2 in flips if M2 is not None]
    sep = dm.has_separating_triangle(M)
    T.note("flips", len(good))
    T.note("blocked_flips", len(flips) - len(good))
    for e, M2 in flips:
        if M2 is None:
            low = min(M.degree(e[0]), M.degree(e[1])) == 3
            T.check("blocked_flip_explained", sep or low, lambda: {"graph": _code(M), "edge": list(e)})
    for M2 in good:
        T.check("flip_colorable", dm.is_four_colorable(M2))
    for e in M.edges:
        A = dm.analyze(M, e)
        for t in A.tilings:
            if A.type_of(t).kind != "B":
                continue
            try:
                v = dm.ns_augment(A.Q, t)
            except dm.NSAdjacent:
                T.vacuous("augment")
                break
            T.check("augment", v.tiling_valid and v.bipartite and v.colorable, lambda: {"graph": _code(M), "edge": list(e)})


def _omega_links(Q: PlaneMap, t: tl.RGBTiling, color: str, omega: tuple[int, ...], drop: frozenset[int]) -> dict:
    adj: dict[int, list[int]] = defaultdict(list)
    for (u, v), c in zip(Q.edges, t.colors):
        if c == color and u not in drop and v not in drop:
            adj[u].append(v)
            adj[v].append(u)
    root: dict[int, int] = {}
    for s in omega:
        if s in root:
            continue
        root[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in root:
                    root[y] = s
                    stack.append(y)
    return {v: root[v] for v in omega}


def suite_skeleton(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    """Ring switches on M - e against the diamond skeleton.

    A ring's link splits the block graph; the side without diamond vertices
    is the enclosed part. When neither before nor after the switch any
    diamond-to-diamond chain needs that part, the skeleton must not move.
    """
    for e in M.edges:
        A = dm.analyze(M, e)
        Q, om = A.Q, A.d.omega
        for t in A.tilings:
            base = rel.skeleton(Q, t, om, "inside")
            for col in tl.COLORS:
                bg = bgm.build_block_graph(Q, t, col)
                for k, link in enumerate(bg.links):
                    if link.canal.kind != "ring":
                        continue
                    sides = [bgm.firing_plan_link(bg, k, s).blocks for s in ("left", "right")]
                    enclosed = next(
                        (frozenset().union(*(bg.blocks[j] for j in sd)) for sd in sides
                         if not any(set(om) & bg.blocks[j] for j in sd)),
                        None,
                    )
                    if enclosed is None:
                        T.vacuous("local_ring_keeps_skeleton")
                        continue
                    t2 = km.ecs(t, link.canal)
                    after = rel.skeleton(Q, t2, om, "inside")
                    T.note("ring_switches")
                    T.note("ring_switches_skeleton_moved", int(after != base))
                    local = all(
                        _omega_links(Q, x, c, om, enclosed) == _omega_links(Q, x, c, om, frozenset())
                        for x in (t, t2) for c in tl.other_colors(col)
                    )
                    if local:
                        T.check("local_ring_keeps_skeleton", after == base, lambda: {"graph": _code(M), "edge": list(e)})
                    else:
                        T.vacuous("local_ring_keeps_skeleton")


def suite_congruence(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    for v0 in M.vertices:
        if M.degree(v0) != 5:
            continue
        Q = M.delete_vertex(v0)
        census = rel.congruence_census(Q, cap=cap)
        T.note(f"classes_{census.count}")
        T.check("classes_partition", sum(len(c) for c in census.classes) == len(tl.enumerate_rgb_tilings(Q)))


def suite_oc(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    colorable = dm.is_four_colorable(M)
    for e in M.edges:
        oc = dm.min_oc_through(M, e)
        T.check("min_oc_zero_when_colorable", not colorable or oc == 0, lambda: {"graph": _code(M), "edge": list(e), "oc": oc})


def suite_generate(M: PlanarTriangulation, T: Tally, cap: int) -> None:
    T.check("edge_count", len(M.edges) == 3 * M.vertex_count - 6)
    T.check("triangular_faces", all(len(f) == 3 for f in M.faces))
    T.note(f"n{M.vertex_count}")


SUITES: dict[str, tuple[Callable[[PlanarTriangulation, Tally, int], None], int]] = {
    "tait": (suite_tait, 8),
    "twoN": (suite_twoN, 8),
    "tree": (suite_tree, 8),
    "vcsecs": (suite_vcsecs, 8),
    "iff": (suite_iff, 9),
    "r0exist": (suite_r0exist, 9),
    "necessary": (suite_necessary, 9),
    "sufficient": (suite_sufficient, 9),
    "twochains": (suite_twochains, 9),
    "tangle": (suite_tangle, 9),
    "hunt": (suite_hunt, 9),
    "fourcycle": (suite_fourcycle, 10),
    "partition": (suite_partition, 9),
    "typeab": (suite_typeab, 9),
    "flips": (suite_flips, 9),
    "skeleton": (suite_skeleton, 8),
    "congruence": (suite_congruence, 8),
    "oc": (suite_oc, 8),
    "generate": (suite_generate, 10),
}


def _run_one(args: tuple[str, bytes, int]) -> tuple[dict, list, dict]:
    suite, code, cap = args
    M = from_code(code)
    T = Tally()
    SUITES[suite][0](M, T, cap)
    dm.analyze.cache_clear()
    return T.plain()


def run_suite(
    suite: str,
    corpus: Corpus | None = None,
    jobs: int = 1,
    cap: int = rel.DEFAULT_STATE_CAP,
) -> SuiteReport:
    """Run one named suite over a corpus; results merge in corpus order."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    corpus = corpus or Corpus(n_max=SUITES[suite][1])
    start = time.perf_counter()
    codes = corpus.codes()
    work = [(suite, c, cap) for c in codes]
    total = Tally()
    if jobs > 1 and len(work) > 1:
        with mp.get_context("fork").Pool(jobs) as pool:
            for part in pool.imap(_run_one, work, chunksize=1):
                total.merge(part)
    else:
        for w in work:
            total.merge(_run_one(w))
    if suite == "hunt":
        total.check("at_least_one_hit", total.info.get("hits", 0) > 0)
    if suite == "generate" and not corpus.path:
        for n in range(corpus.n_min, corpus.n_max + 1):
            total.check(f"class_count_n{n}", total.info.get(f"n{n}", 0) == KNOWN_COUNTS.get(n, -1))
    checks, failures, info = total.plain()
    return SuiteReport(suite, corpus.descriptor, len(codes), checks, failures, info, time.perf_counter() - start)


# -- export ------------------------------------------------------------------------

def export(obj, fmt: str) -> bytes:
    """Serialize a map, tiling, coloring or block graph."""
    if fmt == "json":
        if isinstance(obj, PlaneMap):
            return to_json(obj).encode()
        if isinstance(obj, (tl.RGBTiling, tl.VertexColoring)):
            return obj.to_json().encode()
        if isinstance(obj, SuiteReport):
            return obj.to_json().encode()
    elif fmt == "dot":
        if isinstance(obj, bgm.BlockGraph):
            return obj.to_dot().encode()
        if isinstance(obj, PlaneMap):
            return to_dot(obj).encode()
        if isinstance(obj, tl.RGBTiling):
            return to_dot(obj.graph, obj.as_dict()).encode()
    elif fmt == "planar_code":
        if isinstance(obj, PlanarTriangulation):
            return write_planar_code([obj])
        if isinstance(obj, Iterable):
            return write_planar_code(list(obj))
    raise UnsupportedFormat(f"cannot export {type(obj).__name__} as {fmt}")


def resolve_graph(ref: str) -> PlanarTriangulation:
    """A named graph (``k4``, ``octahedron``, ``icosahedron``, ``bipyramidK``),
    ``gen:N:K`` for the K-th generated class on N vertices, or a ``.json`` /
    planar_code file with an optional ``@K`` record index."""
    if ref.startswith("gen:"):
        _, n, k = ref.split(":")
        return from_code(generate_codes(int(n))[int(k)])
    path, _, idx = ref.partition("@")
    p = Path(path)
    if p.is_file():
        data = p.read_bytes()
        if data.lstrip().startswith(b"{"):
            return from_json(data.decode())
        graphs = list(read_planar_code(data))
        return graphs[int(idx) if idx else 0]
    return named_mpg(ref)
