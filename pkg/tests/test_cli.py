import io
import json
import subprocess
import sys

import pytest

from g2series.cli import SCHEMA_VERSION, main, run_report, run_verify

HONEST_FAILURES = {"so4.dual.Case 2: ([s_Q,s_tau],[u,I])", "so4.dual.Case 3: ([s_tau,s_Q],[I,u])"}


def test_verify_case_passes(capsys):
    assert main(["verify", "--case", "iwahori"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "10/10 checks passed"
    assert "FAIL" not in out


def test_verify_all_reports_exactly_the_component_group_failures():
    stream = io.StringIO()
    assert run_verify("all", stream=stream) == 1
    lines = stream.getvalue().splitlines()
    failed = {line[5:].split(":", 2)[0] + ":" + line[5:].split(":", 2)[1]
              for line in lines if line.startswith("FAIL ")}
    assert failed == HONEST_FAILURES
    assert lines[-2] == "74/76 checks passed"
    assert lines[-1].startswith("failing: so4.dual.Case 2")


@pytest.mark.parametrize("argv", [
    ["verify", "--case", "nonsense"],
    ["report"],
    ["report", "--case", "iwahori", "--format", "pdf"],
    ["verify", "--degree", "0"],
    ["verify", "--case", "sl3", "--ramified-order-modulus", "4"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2


def test_json_report_schema(capsys):
    assert main(["report", "--case", "so4", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == SCHEMA_VERSION == 1
    assert doc["case"] == "so4"
    ranks = next(s for s in doc["sections"] if s["title"] == "evaluation ranks")["rows"][0]
    assert (ranks["origin"], ranks["generic"], ranks["degree"]) == (8, 16, 4)
    assert {c["name"] for c in doc["checks"] if not c["pass"]} == HONEST_FAILURES


def test_markdown_report_lists_sl3_points(capsys):
    assert main(["report", "--case", "sl3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# Report: sl3")
    for tag in ("pt_1", "pt_2", "pt_3", "line_a", "surface"):
        assert f"| {tag} |" in out


def test_report_is_deterministic(tmp_path):
    paths = [tmp_path / f"r{k}.json" for k in range(2)]
    for p in paths:
        assert main(["report", "--case", "iwahori", "--format", "json", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert run_report("iwahori") == json.loads(paths[0].read_text())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "g2series", "verify", "--case", "gl2-chi1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.rstrip().endswith("checks passed")
