"""Command-line driver: spec strings, determinism, caps, exit codes."""

import io
import json
import subprocess
import sys

import pytest

from hopfcycl import HomologyModule, QQ
from hopfcycl.cli import build_parser, carrier_cap, emit_report, run


def run_cli(argv):
    stream = io.StringIO()
    code = run(argv, stream)
    return code, stream.getvalue()


def test_hc_cyclic_group_over_z_torsion_row():
    code, out = run_cli(
        ["hc", "--group", "cyclic:2", "--ring", "Z", "--pi", "0",
         "--alpha", "eps", "--beta", "eps", "--max-degree", "3",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][1]["value"] == "Z/2"
    assert doc["rows"][1]["provenance"] == "computed-bicomplex"
    assert doc["rows"][3]["torsion"] == [2, 2]


def test_cm_hc_taft_compare_closed():
    code, out = run_cli(
        ["cm-hc", "--taft", "2", "--ring", "Q(zeta2)", "--pi", "1",
         "--alpha", "0", "--beta", "0", "--max-degree", "4",
         "--compare", "closed", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"]
    assert [r["free_rank"] for r in doc["rows"]] == [1, 0, 2, 0, 3]
    assert all(c["pass"] for c in doc["comparisons"])


def test_verify_taft_all_triples():
    code, out = run_cli(["verify", "--taft", "2", "--max-degree", "2"])
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("PASSED")


def test_verify_group_module():
    code, out = run_cli(
        ["verify", "--group", "cyclic:3", "--pi", "1", "--max-degree", "2",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] and len(doc["rows"]) == 2


def test_hh_quiver_graded_rows():
    code, out = run_cli(
        ["hh", "--quiver", "crown:2", "--truncation", "2", "--max-degree", "2",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert [r["free_rank"] for r in doc["rows"]] == [2, 1, 1]
    assert doc["rows"][0]["graded"]["0"]["free_rank"] == 2


def test_hc_quiver_compare_closed():
    code, out = run_cli(
        ["hc", "--quiver", "crown:2", "--truncation", "2", "--max-degree", "3",
         "--compare", "closed", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert [r["free_rank"] for r in doc["rows"]] == [2, 1, 2, 1]
    assert doc["passed"]


def test_report_command():
    code, out = run_cli(
        ["report", "--group", "cyclic:2", "--pi", "1", "--max-degree", "2",
         "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"verify", "hh", "hc", "comparisons", "passed"}
    assert doc["passed"]


def test_trivial_source():
    code, out = run_cli(["hc", "--trivial", "--max-degree", "2", "--format", "json"])
    assert code == 0
    assert [r["free_rank"] for r in json.loads(out)["rows"]] == [1, 0, 1]


def test_json_output_is_deterministic():
    argv = ["hc", "--group", "cyclic:3", "--pi", "1", "--max-degree", "2",
            "--compare", "closed", "--format", "json"]
    _, first = run_cli(argv)
    _, second = run_cli(argv)
    assert first == second


def test_group_and_quiver_files(tmp_path):
    gf = tmp_path / "group.json"
    gf.write_text(json.dumps({"cyclic": 2}))
    code, out = run_cli(["hc", "--group-file", str(gf), "--max-degree", "1",
                         "--format", "json"])
    assert code == 0
    qf = tmp_path / "quiver.json"
    qf.write_text(json.dumps({"crown": 2}))
    code, out = run_cli(["hh", "--quiver-file", str(qf), "--max-degree", "1",
                         "--format", "json"])
    assert code == 0


def test_parse_errors_exit_2():
    for argv in (
        ["hc", "--group", "cyclic:2", "--ring", "GF(7)"],
        ["hc", "--group", "dihedral:4"],
        ["hc", "--max-degree", "2"],  # no source
        ["hh", "--quiver", "wheel:3"],
    ):
        code, out = run_cli(argv)
        assert code == 2, argv
        assert "error:" in out


def test_invalid_triple_exit_2_and_allow_invalid():
    argv = ["hc", "--taft", "2", "--pi", "1", "--alpha", "1", "--beta", "1",
            "--max-degree", "1"]
    code, out = run_cli(argv)
    assert code == 2 and "PreconditionFailed" in out
    code, out = run_cli(argv + ["--allow-invalid"])
    assert code == 0


def test_resource_cap(monkeypatch):
    monkeypatch.setenv("HOPFCYCL_MAX_CARRIER", "10")
    assert carrier_cap() == 10
    code, out = run_cli(["hc", "--group", "cyclic:4", "--max-degree", "3"])
    assert code == 2 and "ResourceCap" in out
    monkeypatch.setenv("HOPFCYCL_MAX_CARRIER", "abc")
    code, out = run_cli(["hc", "--group", "cyclic:2", "--max-degree", "1"])
    assert code == 2 and "ParseError" in out
    monkeypatch.setenv("HOPFCYCL_MAX_CARRIER", "0")
    with pytest.raises(Exception):
        carrier_cap()


def test_mismatch_prints_diff_and_exits_1(monkeypatch):
    import hopfcycl.cli as cli

    monkeypatch.setattr(cli, "_closed_hc", lambda source, ring, n: HomologyModule(ring, 99))
    code, out = run_cli(
        ["hc", "--group", "cyclic:2", "--pi", "0", "--max-degree", "1",
         "--compare", "closed"]
    )
    assert code == 1
    assert "FAIL" in out and "computed:" in out and "closed:" in out
    assert out.strip().endswith("FAILED")


def test_emit_report_empty_table():
    stream = io.StringIO()
    emit_report({}, "json", stream)
    assert json.loads(stream.getvalue()) == {}


def test_parser_rejects_negative_degree():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])  # a subcommand is required
    stream = io.StringIO()
    with pytest.raises(SystemExit):
        run(["hc", "--group", "cyclic:2", "--max-degree", "-1"], stream)


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfcycl.cli", "hc", "--trivial",
         "--max-degree", "1", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rows"][0]["free_rank"] == 1
