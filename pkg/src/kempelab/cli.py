"""Command line front end.

Exit codes: 0 success, 1 a checked invariant failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from pathlib import Path

from . import blockgraph as bgm
from . import diamond as dm
from . import harness
from . import kempe as km
from . import relations as rel
from . import tiling as tl
from .embed.generate import generate_all
from .embed.io import to_json, write_planar_code
from .embed.maps import PlaneMap, SemiMPG
from .errors import KempelabError, StateSpaceLimit

log = logging.getLogger("kempelab")


class InvariantFailure(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _write(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="k4, octahedron, icosahedron, bipyramidK, gen:N:K, or a .json/planar_code file[@K]")
    p.add_argument("--delete-edge", nargs=2, type=int, action="append", default=[], metavar=("U", "V"))
    p.add_argument("--delete-vertex", type=int, action="append", default=[], metavar="V")


def _instance(args) -> PlaneMap:
    M = harness.resolve_graph(args.graph)
    if args.delete_edge or args.delete_vertex:
        return SemiMPG(M, [tuple(e) for e in args.delete_edge], args.delete_vertex)
    return M


def _tiling(Q: PlaneMap, k: int) -> tl.RGBTiling:
    tils = tl.enumerate_rgb_tilings(Q)
    if not tils:
        raise KempelabError("the map has no RGB-tiling")
    if not 0 <= k < len(tils):
        raise KempelabError(f"tiling index {k} out of range 0..{len(tils) - 1}")
    return tils[k]


def _edge_colors(t: tl.RGBTiling) -> dict[str, str]:
    return json.loads(t.to_json())


# -- subcommands ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    graphs = list(generate_all(args.n, cap=args.cap))
    if args.format == "count":
        _emit({"n": args.n, "count": len(graphs)})
    elif args.format == "json":
        for M in graphs:
            print(to_json(M))
    else:
        _write(write_planar_code(graphs), args.out)
    return 0


def cmd_tilings(args) -> int:
    Q = _instance(args)
    if args.mono:
        monos = tl.enumerate_mono_tilings(Q, args.mono, perfect_only=args.perfect)
        if args.list:
            for m in monos:
                _emit({"color": m.color, "edges": sorted(m.edges), "perfect": m.perfect})
        else:
            _emit({"mono": len(monos), "color": args.mono})
        return 0
    tils = tl.enumerate_rgb_tilings(Q)
    if args.list:
        for t in tils:
            _emit(_edge_colors(t))
    elif args.colorings:
        for c in tl.enumerate_vertex_colorings(Q):
            _emit({str(v): col for v, col in c.as_dict().items()})
    else:
        _emit({"tilings": len(tils), "colorings": len(tl.enumerate_vertex_colorings(Q))})
    return 0


def cmd_kempe(args) -> int:
    Q = _instance(args)
    if args.chain:
        color, u, v = args.chain
        t = _tiling(Q, args.tiling)
        ch = km.chain(t, color, int(u), int(v))
        _emit({"color": color, "path": list(ch.path) if ch else None,
               "length": ch.length if ch else None, "parity": ch.parity if ch else None})
    elif args.ecs is not None:
        t = _tiling(Q, args.tiling)
        canals = km.canal_objects(Q, t, args.color)
        if not 0 <= args.ecs < len(canals):
            raise KempelabError(f"canal id {args.ecs} out of range 0..{len(canals) - 1}")
        canal = canals[args.ecs]
        t2 = km.ecs(t, canal)
        _emit({"canal": {"kind": canal.kind, "edges": [list(e) for e in canal.edges]},
               "tiling": _edge_colors(t2), "valid": t2.is_valid()})
    elif args.vcs:
        v, pair = int(args.vcs[0]), [int(x) for x in args.vcs[1].split(",")]
        cols = tl.enumerate_vertex_colorings(Q)
        c = cols[args.coloring]
        comp = km.kempe_component(c, v, pair, Q)
        c2 = km.vcs(c, comp, Q)
        _emit({"component": sorted(comp.vertices), "coloring": c2.as_dict(), "proper": c2.is_proper(Q)})
    elif args.tangle is not None:
        M = harness.resolve_graph(args.graph)
        v0 = args.tangle
        failed = 0
        for i, c in enumerate(tl.enumerate_vertex_colorings(M.delete_vertex(v0))):
            rep = km.analyze_deg5(M, v0, c)
            row = {"coloring": i, "order": list(rep.order), "colors": list(rep.colors), "four_colors": rep.four_colors}
            if rep.four_colors:
                row.update(K13=rep.K13, K24=rep.K24, K14=rep.K14, K35=rep.K35,
                           exclusive=rep.exclusive_13_24 and rep.exclusive_14_35)
                failed += not row["exclusive"]
            replay = km.kempe_replay(M, v0, c)
            row["replay"] = {"success": replay.success, "step": replay.step}
            if rep.four_colors and rep.K13 and rep.K14:
                tr = km.check_tangling(M, v0, c)
                row["tangling"] = {"A": tr.A, "B": tr.B, "holds": tr.holds, "intersect": tr.intersect}
                failed += tr.holds == replay.success
            _emit(row)
        if failed:
            raise InvariantFailure(f"{failed} colorings broke exclusivity or the tangling/replay coincidence")
    else:
        raise KempelabError("choose one of --chain, --ecs, --vcs, --tangle")
    return 0


def cmd_blockgraph(args) -> int:
    Q = _instance(args)
    t = _tiling(Q, args.tiling)
    bg = bgm.build_block_graph(Q, t, args.color)
    plan = None
    if args.fire_block is not None:
        plan = bgm.firing_plan_block(bg, args.fire_block)
    elif args.fire_link is not None:
        plan = bgm.firing_plan_link(bg, args.fire_link, args.side)
    if args.dot:
        print(bgm.mark(bg, plan).to_dot() if plan else bg.to_dot(), end="")
        return 0
    out = {
        "color": bg.color,
        "tree": bg.is_tree,
        "blocks": [sorted(b) for b in bg.blocks],
        "links": [{"left": l.left, "right": l.right, "kind": l.canal.kind} for l in bg.links],
    }
    if plan:
        out["result"] = _edge_colors(bgm.apply_firing(Q, t, plan))
    _emit(out)
    return 0


def cmd_relations(args) -> int:
    Q = _instance(args)
    if args.orbit:
        t = _tiling(Q, args.tiling)
        for s in sorted(rel.synonym_orbit(t), key=lambda x: x.colors):
            _emit(_edge_colors(s))
    elif args.skeleton:
        omega = [int(x) for x in args.skeleton.split(",")]
        sk = rel.skeleton(Q, _tiling(Q, args.tiling), omega, args.side)
        _emit({"omega": list(sk.omega), "boundary": list(sk.boundary_coloring),
               "connected": [[u, v, c] for (u, v, c), bit in sk.connectivity if bit]})
    elif args.census:
        try:
            census = rel.congruence_census(Q, cap=args.cap)
        except StateSpaceLimit:
            _emit({"status": f"undecided at cap {args.cap}"})
            return 0
        _emit({"classes": census.count, "sizes": [len(c) for c in census.classes]})
    else:
        raise KempelabError("choose one of --orbit, --skeleton, --census")
    return 0


def cmd_diamond(args) -> int:
    if args.hunt:
        corpus = harness.Corpus(n_max=args.n_max, path=args.corpus)
        hits = dm.hunt_counterexamples(corpus.graphs())
        for h in hits:
            _emit({"graph": h.code.hex(), "edge": list(h.e), "extensions": h.extensions})
        _emit({"hits": len(hits), "corpus": corpus.descriptor})
        return 0
    if not args.graph:
        raise KempelabError("a graph is required unless --hunt is given")
    M = harness.resolve_graph(args.graph)
    edges = [tuple(args.edge)] if args.edge else list(M.edges)
    failed = 0
    for e in edges:
        row: dict = {"edge": list(e)}
        if args.classify or not (args.census or args.iff or args.necessary or args.sufficient):
            A = dm.analyze(M, e)
            row["types"] = dict(Counter(A.type_of(t).label for t in A.tilings))
        if args.census:
            row["census"] = dm.family_census(M, e).as_dict()
        if args.iff:
            v = dm.four_color_iff(M, e)
            row["iff"] = {"four_colorable": v.four_colorable, "gt_nonempty": v.gt_nonempty, "holds": v.holds}
            failed += not v.holds
        if args.necessary:
            r = dm.check_necessary(M, e)
            row["necessary"] = {k: {"holds": c.holds, "witness_ok": c.witness_ok} for k, c in r.clauses.items()}
            failed += not all(c.witness_ok for c in r.clauses.values())
        if args.sufficient:
            s = dm.check_sufficient(M, e)
            row["sufficient"] = {"i": s.i, "ii": s.ii, "ii_prime": s.ii_prime}
            failed += s.any_true or not s.agree
        _emit(row)
    if failed:
        raise InvariantFailure(f"{failed} edges failed a checked statement")
    return 0


def cmd_verify(args) -> int:
    suites = list(harness.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in suites:
        default_max = harness.SUITES[name][1] if name in harness.SUITES else 8
        corpus = harness.Corpus(n_min=args.n_min, n_max=args.n_max or default_max, path=args.corpus)
        r = harness.run_suite(name, corpus, jobs=args.jobs, cap=args.cap)
        ok &= r.ok
        if args.json:
            print(r.to_json(timing=not args.no_timing))
        else:
            print(f"{'PASS' if r.ok else 'FAIL'} {name} [{r.corpus}, {r.graphs} graphs, {r.wall_clock:.1f}s]")
            for check, c in r.checks.items():
                print(f"  {check}: pass={c['pass']} fail={c['fail']} vacuous={c['vacuous']}")
            for k, v in r.info.items():
                print(f"  ({k} = {v})")
    return 0 if ok else 1


def cmd_export(args) -> int:
    Q = _instance(args)
    obj = Q
    if args.blockgraph:
        obj = bgm.build_block_graph(Q, _tiling(Q, args.tiling), args.blockgraph)
    elif args.with_tiling:
        obj = _tiling(Q, args.tiling)
    _write(harness.export(obj, args.format), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kempelab", description="RGB-tilings and Kempe switching on planar triangulations")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate every triangulation on N vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["planar_code", "json", "count"], default="count")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=11, help="largest vertex count allowed")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tilings", help="count or list tilings and colorings")
    _graph_args(p)
    p.add_argument("--list", action="store_true")
    p.add_argument("--colorings", action="store_true")
    p.add_argument("--mono", choices=tl.COLORS)
    p.add_argument("--perfect", action="store_true")
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("kempe", help="chains, switches and degree-5 analysis")
    _graph_args(p)
    p.add_argument("--tiling", type=int, default=0)
    p.add_argument("--coloring", type=int, default=0)
    p.add_argument("--color", choices=tl.COLORS, default="R")
    p.add_argument("--chain", nargs=3, metavar=("COLOR", "U", "V"))
    p.add_argument("--ecs", type=int, metavar="CANAL_ID")
    p.add_argument("--vcs", nargs=2, metavar=("VERTEX", "PAIR"), help="PAIR like 1,3")
    p.add_argument("--tangle", type=int, metavar="V0")
    p.set_defaults(func=cmd_kempe)

    p = sub.add_parser("blockgraph", help="block graph of one color class")
    _graph_args(p)
    p.add_argument("--tiling", type=int, default=0)
    p.add_argument("--color", choices=tl.COLORS, default="R")
    p.add_argument("--fire-block", type=int)
    p.add_argument("--fire-link", type=int)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_blockgraph)

    p = sub.add_parser("relations", help="synonyms, skeletons and congruence classes")
    _graph_args(p)
    p.add_argument("--tiling", type=int, default=0)
    p.add_argument("--orbit", action="store_true")
    p.add_argument("--skeleton", metavar="OMEGA", help="comma separated cycle")
    p.add_argument("--side", choices=["inside", "outside", "whole"], default="inside")
    p.add_argument("--census", action="store_true")
    p.add_argument("--cap", type=int, default=rel.DEFAULT_STATE_CAP)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("diamond", help="per-edge diamond analysis")
    p.add_argument("graph", nargs="?")
    p.add_argument("--edge", nargs=2, type=int, metavar=("U", "V"))
    for flag in ("classify", "census", "iff", "necessary", "sufficient", "hunt"):
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--corpus")
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=[*harness.SUITES, "all"])
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int)
    p.add_argument("--corpus")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=rel.DEFAULT_STATE_CAP)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit wall clock from JSON output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a graph, tiling or block graph")
    _graph_args(p)
    p.add_argument("--format", required=True)
    p.add_argument("--tiling", type=int, default=0)
    p.add_argument("--with-tiling", action="store_true")
    p.add_argument("--blockgraph", choices=tl.COLORS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InvariantFailure as exc:
        log.error("%s", exc)
        return 1
    except (KempelabError, ValueError, KeyError, IndexError, FileNotFoundError) as exc:
        print(f"kempelab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
