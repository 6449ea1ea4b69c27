import json

import pydot
import pytest

from kempelab import blockgraph as bgm
from kempelab import harness
from kempelab import tiling as tl
from kempelab.cli import main
from kempelab.embed.generate import canonical_code
from kempelab.embed.io import read_planar_code
from kempelab.embed.maps import named_mpg
from kempelab.errors import CorpusUnavailable, UnknownSuite, UnsupportedFormat


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        harness.run_suite("nope")


def test_missing_corpus(tmp_path):
    with pytest.raises(CorpusUnavailable):
        harness.run_suite("tait", harness.Corpus(path=str(tmp_path / "none.pc")))


def test_tree_suite_small():
    r = harness.run_suite("tree", harness.Corpus(n_max=6))
    assert r.ok
    assert r.graphs == 4
    assert r.checks["tree"]["fail"] == 0


def test_report_deterministic_across_jobs():
    c = harness.Corpus(n_max=7)
    r1 = harness.run_suite("twoN", c, jobs=1)
    r2 = harness.run_suite("twoN", c, jobs=2)
    assert r1 == r2
    assert r1.to_json(timing=False) == r2.to_json(timing=False)


def test_file_corpus(data_dir):
    c = harness.Corpus(n_max=7, path=str(data_dir / "plantri_n7.pc"))
    r = harness.run_suite("iff", c)
    assert r.ok and r.graphs == 5
    assert r.corpus.startswith("file:")


def test_hunt_suite_records_hits():
    r = harness.run_suite("hunt", harness.Corpus(n_max=7))
    assert r.ok
    assert r.info["hits"] == 6
    assert len(r.counterexamples) == 6


def test_export_round_trips():
    K4 = named_mpg("k4")
    back = list(read_planar_code(harness.export(K4, "planar_code")))
    assert canonical_code(back[0]) == canonical_code(K4)
    t = tl.enumerate_rgb_tilings(K4)[0]
    assert tl.RGBTiling.from_json(harness.export(t, "json").decode(), K4) == t
    bg = bgm.build_block_graph(K4, t, "R")
    assert pydot.graph_from_dot_data(harness.export(bg, "dot").decode())
    with pytest.raises(UnsupportedFormat):
        harness.export(K4, "xml")


def test_resolve_graph(tmp_path):
    assert harness.resolve_graph("octahedron").vertex_count == 6
    assert harness.resolve_graph("gen:7:4").vertex_count == 7
    p = tmp_path / "g.pc"
    p.write_bytes(harness.export([named_mpg("k4"), named_mpg("octahedron")], "planar_code"))
    assert harness.resolve_graph(f"{p}@1").vertex_count == 6
    j = tmp_path / "g.json"
    j.write_bytes(harness.export(named_mpg("k4"), "json"))
    assert harness.resolve_graph(str(j)) == named_mpg("k4")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_gen_and_tilings(capsys):
    code, out = run(capsys, "gen", "--n", "9")
    assert code == 0 and json.loads(out)["count"] == 50
    code, out = run(capsys, "tilings", "k4", "--delete-edge", "0", "1")
    assert json.loads(out) == {"tilings": 12, "colorings": 48}
    code, out = run(capsys, "tilings", "k4", "--mono", "R", "--list")
    assert len(out.splitlines()) == 3


def test_cli_kempe(capsys):
    code, out = run(capsys, "kempe", "octahedron", "--chain", "R", "0", "1")
    assert code == 0 and "parity" in out
    code, out = run(capsys, "kempe", "octahedron", "--ecs", "0")
    assert json.loads(out)["valid"]
    code, out = run(capsys, "kempe", "octahedron", "--vcs", "0", "1,2")
    assert code == 0 and json.loads(out)["proper"]
    code, out = run(capsys, "kempe", "icosahedron", "--tangle", "0")
    ico = named_mpg("icosahedron")
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert len(rows) == len(tl.enumerate_vertex_colorings(ico.delete_vertex(0)))
    assert all(r["replay"]["success"] for r in rows)


def test_cli_blockgraph_relations_diamond(capsys):
    code, out = run(capsys, "blockgraph", "octahedron", "--color", "G", "--dot")
    assert code == 0 and out.startswith("graph")
    code, out = run(capsys, "blockgraph", "octahedron", "--fire-link", "0")
    assert json.loads(out)["tree"]
    code, out = run(capsys, "relations", "octahedron", "--orbit")
    assert len(out.splitlines()) == 6
    code, out = run(capsys, "relations", "octahedron", "--delete-edge", "0", "1", "--skeleton", "4,0,5,1")
    assert json.loads(out)["omega"] == [4, 0, 5, 1]
    code, out = run(capsys, "relations", "octahedron", "--delete-vertex", "0", "--census")
    assert json.loads(out)["classes"] >= 1
    code, out = run(capsys, "diamond", "octahedron", "--iff", "--sufficient", "--necessary", "--census")
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(rows) == 12
    assert all(r["iff"]["holds"] for r in rows)
    code, out = run(capsys, "diamond", "--hunt", "--n-max", "6")
    assert json.loads(out.splitlines()[-1])["hits"] == 1


def test_cli_verify_and_exit_codes(capsys, tmp_path):
    code, out = run(capsys, "verify", "tree", "--n-max", "6")
    assert code == 0 and out.startswith("PASS tree")
    code, out = run(capsys, "verify", "iff", "--n-max", "6", "--json", "--no-timing")
    assert json.loads(out)["ok"]
    assert main(["verify", "tree", "--corpus", str(tmp_path / "missing.pc")]) == 2
    assert main(["export", "k4", "--format", "xml"]) == 2
    assert main(["kempe", "k4", "--tangle", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_cli_export(capsys, tmp_path):
    out = tmp_path / "k4.pc"
    assert main(["export", "k4", "--format", "planar_code", "--out", str(out)]) == 0
    assert list(read_planar_code(out.read_bytes()))[0] == named_mpg("k4")
    code, text = run(capsys, "export", "octahedron", "--format", "dot", "--with-tiling")
    assert "color=" in text
