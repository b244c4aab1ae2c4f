import json
import subprocess
import sys

import pytest

from isola.cli import main
from isola.io import graph_from_json, map_from_json, one_from_json, poset_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def js(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_check_example(capsys):
    assert run(capsys, "check", "--graph", "n=4; edges=1-2,2-3,3-4") == (0, '{"cograph":false}\n')
    assert run(capsys, "check", "--graph", "n=4; edges=1-2,2-3") == (0, '{"cograph":true}\n')


def test_enumerate_example(capsys):
    assert run(capsys, "enumerate", "--n", "4", "--flavor", "irr", "--count") == (0, '{"count":10}\n')
    code, d = js(capsys, "enumerate", "--n", "3", "--flavor", "any")
    assert d["count"] == 20 and len(d["cographs"]) == 20
    assert run(capsys, "enumerate", "--n", "3", "--method", "filter", "--count")[1] == '{"count":4}\n'


def test_line_dot_example(capsys):
    code, out = run(capsys, "line", "--graph", "n=2; edges=", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("[label=") == 3


def test_line_json_round_trips(capsys):
    code, d = js(capsys, "line", "--graph", "n=3; edges=")
    assert d["size"] == 13
    p = poset_from_json(d)
    assert len(p) == 13


def test_tensor_power_of_the_line(capsys):
    code, d = js(capsys, "line", "--graph", "n=2; edges=1-2", "--dim", "2")
    assert d["size"] == 8


def test_graph_outputs_round_trip(capsys):
    code, d = js(capsys, "neg", "--graph", "n=3; edges=1-2; loops=3")
    g = graph_from_json(d)
    assert g.n == 3 and g.loops() == [0, 1]
    code, out = run(capsys, "neg", "--graph", json.dumps(d), "--format", "text")
    assert out.strip() == "n=3; edges=1-2; loops=3"  # negation is an involution


def test_sum_and_paws(capsys):
    code, d = js(capsys, "sum", "--kind", "csum", "--graph", "n=1", "--graph", "n=1", "--graph", "n=1")
    assert d == {"n": 3, "edges": [[1, 2], [1, 3], [2, 3]], "loops": []}
    assert run(capsys, "paws", "--k", "3", "--format", "text")[1] == "n=3; edges=1-2\n"
    code, d = js(capsys, "depth", "--graph", "n=3; edges=1-2")
    assert d["depth"] == 3
    assert js(capsys, "paws", "--k", "0")[0] == 1


def test_canon_and_iso(capsys):
    code, d = js(capsys, "canon", "--graph", "n=3; edges=2-3")
    assert d["key"] == "(.[..])"
    assert run(capsys, "canon", "--graph", "(.[..])", "--format", "text")[1] == "(.[..])\n"
    code, d = js(capsys, "iso", "--graph", "n=3; edges=2-3", "--other", "n=3; edges=1-3")
    assert d == {"isomorphic": True}


def test_hom_and_factor(capsys):
    code, d = js(capsys, "hom", "--src", "n=2", "--tgt", "n=1", "--count")
    assert d == {"count": 1}
    code, d = js(capsys, "hom", "--src", "n=2; edges=1-2", "--tgt", "n=2; edges=1-2")
    assert d["maps"] == [[1, 2], [2, 1]]
    code, d = js(capsys, "hom", "--src", "n=2", "--tgt", "n=1", "--kind", "vop")
    assert d["count"] == 1 and d["spans"][0]["forward"] == [1, 1]
    assert js(capsys, "hom", "--src", "n=2", "--tgt", "n=2", "--kind", "hop", "--count")[1]["count"] >= 1
    m = '{"src":{"n":2,"edges":[],"loops":[]},"tgt":{"n":1,"edges":[],"loops":[1]},"f":[1,1]}'
    code, d = js(capsys, "factor", "--map", m)
    assert code == 0
    disp, accr = map_from_json(d["dispersive"]), map_from_json(d["accretive"])
    assert disp.tgt == accr.src


def test_one_structures(capsys):
    code, d = js(capsys, "one-structures", "--graph", "n=3; edges=1-2,1-3,2-3")
    assert d["count"] == 6
    assert all(one_from_json(s).n == 3 for s in d["structures"])
    assert run(capsys, "one-structures", "--graph", "n=2; edges=1-2", "--count")[1] == '{"count":2}\n'


def test_carriers(capsys):
    code, d = js(capsys, "points", "--graph", "n=2; edges=1-2", "--points", "2")
    assert d["configs"] == [[1, 2], [2, 1]]
    assert js(capsys, "points", "--graph", "n=2; edges=1-2", "--points", "2", "--subsets", "--count")[1]["count"] == 9
    code, d = js(capsys, "skeleton", "--graph", "n=3; edges=1-2", "--k", "2", "--points", "2", "--subsets", "--count")
    # the full object has 9 * 4 = 36; the 2-skeleton loses ({1},{2},{1,2}) and ({2},{1},{1,2})
    assert d["count"] == 34
    assert js(capsys, "tensor", "--graph", "n=2; edges=1-2", "--points", "2", "--other", "2", "--count")[1]["count"] == 12


def test_posets_and_categories(capsys, tmp_path):
    png = tmp_path / "k.png"
    code, out = run(capsys, "kposet", "--graph", "n=3; edges=1-2", "--format", "text", "--png", str(png))
    assert code == 0 and out.startswith("4 elements") and png.exists()
    code, d = js(capsys, "ran", "--n", "2")
    assert d["hom_counts"][2] == [1, 2, 3, 3]
    code, d = js(capsys, "ran", "--n", "1", "--family", "points", "--points", "2", "--table")
    assert len(d["objects"]) == 3 and d["composition"]


def test_hecke_and_grass(capsys):
    assert js(capsys, "hecke", "--graph", "n=1", "--points", "2", "--fiber", "2", "--count")[1]["count"] == 16
    assert js(capsys, "grass", "--graph", "n=1", "--points", "2", "--fiber", "2", "--count")[1]["count"] == 4
    code, d = js(capsys, "grass", "--graph", "n=1", "--points", "2", "--fiber", "2", "--section", "z,z")
    assert code == 1 and "error" in d


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--graph", "n=2; edges=1-9"],
        ["canon", "--graph", "n=4; edges=1-2,2-3,3-4"],
        ["enumerate", "--n", "-1"],
        ["enumerate", "--n", "3", "--flavor", "odd"],
        ["factor", "--map", "{"],
        ["nonsense"],
        ["points", "--graph", "n=1; loops=1", "--points", "2"],
        ["verify", "--laws", "NOPE"],
        ["verify", "--laws", ""],
        ["verify", "--jobs", "0", "--laws", "ONE-PAW"],
    ],
)
def test_errors_exit_1_with_error_object(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 1
    assert "error" in json.loads(out)


def test_error_messages_use_one_based_vertices(capsys):
    code, d = js(capsys, "canon", "--graph", "n=4; edges=1-2,2-3,3-4")
    assert "1-2-3-4" in d["error"] or "4-3-2-1" in d["error"]


def test_verify_pass_and_reports(capsys, tmp_path):
    code, d = js(capsys, "verify", "--laws", "CG-PAW-DEPTH,ONE-*", "--report-dir", str(tmp_path))
    assert code == 0 and d["passed"]
    report = json.loads((tmp_path / "report.json").read_text())
    assert {r["id"] for r in report["laws"]} == {r["id"] for r in d["laws"]}
    assert all("runtime" in r for r in report["laws"])
    assert "passed" in (tmp_path / "report.txt").read_text()
    assert (tmp_path / "law_runtimes.png").read_bytes()[:4] == b"\x89PNG"


def test_verify_failure_exits_2(capsys):
    code, d = js(capsys, "verify", "--laws", "ONE-COUNT", "--mutate", "1")
    assert code == 2 and not d["passed"]
    assert d["laws"][0]["witness"]


def test_verify_bounds_from_environment(capsys, tmp_path, monkeypatch):
    p = tmp_path / "bounds.json"
    p.write_text('{"CG-PAW-DEPTH": {"k": 2}}')
    monkeypatch.setenv("ISOLA_BOUNDS", str(p))
    code, d = js(capsys, "verify", "--laws", "CG-PAW-DEPTH")
    assert d["laws"][0]["bound"] == {"k": 2} and d["laws"][0]["checked"] == 2
    p.write_text("[1]")
    assert js(capsys, "verify", "--laws", "CG-PAW-DEPTH")[0] == 1


def test_verify_figures_only(capsys, tmp_path):
    code, out = run(capsys, "verify", "--laws", "ONE-PAW", "--figures", str(tmp_path / "f"), "--format", "text")
    assert code == 0 and "1 passed" in out
    assert (tmp_path / "f" / "law_runtimes.png").exists()


def test_output_is_deterministic():
    cmds = [
        ["enumerate", "--n", "4", "--flavor", "any"],
        ["line", "--graph", "n=3; edges=1-2", "--format", "dot"],
        ["verify", "--laws", "CG-PAW-DEPTH,ONE-PAW,ISO-BASIC", "--jobs", "2"],
    ]
    for argv in cmds:
        outs = {subprocess.run([sys.executable, "-m", "isola.cli", *argv], capture_output=True).stdout for _ in range(2)}
        assert len(outs) == 1


def test_console_script_is_installed():
    res = subprocess.run(["isola", "check", "--graph", "n=1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == '{"cograph":true}\n'
