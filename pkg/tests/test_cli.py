from __future__ import annotations

import json

import pytest

from voltgraph.cli import main
from voltgraph.io import parse

from .conftest import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_derive_then_iso_cycle(tmp_path, capsys):
    lift = tmp_path / "c.vg"
    assert run(capsys, "derive", FIXTURES / "single_loop_z5.vg", "-o", lift)[0] == 0
    code, out, _ = run(capsys, "iso", lift, FIXTURES / "cycle5.vg")
    assert code == 0 and out.startswith("isomorphic")


def test_dumbbell_is_petersen(tmp_path, capsys):
    lift = tmp_path / "p.vg"
    run(capsys, "derive", FIXTURES / "dumbbell_z5.vg", "-o", lift)
    code, out, _ = run(capsys, "info", lift)
    assert code == 0
    assert "vertices: 10" in out and "edges: 15" in out and "regular: 3" in out and "diameter: 2" in out
    assert run(capsys, "iso", lift, FIXTURES / "petersen.vg")[0] == 0


def test_not_isomorphic_exit_code(capsys):
    code, out, _ = run(capsys, "iso", FIXTURES / "cycle5.vg", FIXTURES / "petersen.vg")
    assert code == 1 and out.strip() == "not isomorphic"


def test_derive_output_passes_check(tmp_path, capsys):
    for name in ["semiedge_z2.vg", "product_z2xz3.vg", "table_s3.vg"]:
        lift = tmp_path / name
        assert run(capsys, "derive", FIXTURES / name, "-o", lift)[0] == 0
        code, out, _ = run(capsys, "check", lift)
        assert code == 0 and "covering: yes" in out


def test_lift_via_pullback_and_label_to_voltage(capsys):
    code, out, _ = run(capsys, "lift-via-pullback", FIXTURES / "dumbbell_z5.vg")
    assert code == 0 and parse(out).graph.vertex_count == 10
    code, out, _ = run(capsys, "label-to-voltage", FIXTURES / "labeled_z3.lg")
    assert code == 0 and "link u v 1" in out


def test_product_and_dot(capsys):
    code, out, _ = run(capsys, "product", FIXTURES / "single_loop_z5.vg", FIXTURES / "semiedge_z2.vg")
    assert code == 0 and parse(out).group.order == 10
    code, out, _ = run(capsys, "export-dot", FIXTURES / "semiedge_z2.vg")
    assert code == 0 and out.startswith('graph "G" {')


def test_errors_go_to_stderr(tmp_path, capsys):
    code, out, err = run(capsys, "info", tmp_path / "missing.vg")
    assert code == 2 and out == "" and "no such file" in err
    bad = tmp_path / "bad.vg"
    bad.write_text("group cyclic 3\nvertex u\nsemiedge u 1\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "derive", FIXTURES / "labeled_z3.lg")
    assert code == 2 and "labels" in err
    assert run(capsys, "frobnicate")[0] == 2


def test_laws_json_deterministic(tmp_path, capsys):
    args = ["laws", "--seed", "42", "--iterations", "5", "--json", "--no-timing"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    assert len(out1.splitlines()) == 7


def test_laws_mutation_and_replay(tmp_path, capsys):
    report = tmp_path / "r.jsonl"
    code, _, _ = run(capsys, "laws", "--iterations", "5", "--mutation", "broken_lambda", "--json", "-o", report)
    assert code == 1
    failing = next(line for line in report.read_text().splitlines() if '"fail"' in line)
    cx = tmp_path / "cx.json"
    cx.write_text(failing)
    code, out, _ = run(capsys, "laws", "--replay", cx)
    assert code == 1 and "reproduced" in out
    clean = json.loads(failing)["counterexample"]
    clean["mutation"] = None
    cx.write_text(json.dumps(clean))
    assert run(capsys, "laws", "--replay", cx)[0] == 0


@pytest.mark.parametrize("groups", ["", "Q8"])
def test_laws_bad_groups(groups, capsys):
    assert run(capsys, "laws", "--groups", groups)[0] == 2
