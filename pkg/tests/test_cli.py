import json
import os

import pytest

from btkit import cli


def run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_relations_suite_passes(capsys):
    code, out = run_cli(["relations", "--n", "3", "--format", "json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["summary"]["failed"] == 0
    assert report["summary"]["total"] > 50


def test_quotient_suite_reports_structural_failures(capsys):
    code, out = run_cli(["quotient", "--n", "3", "--format", "json"], capsys)
    assert code == 1
    report = json.loads(out)
    failed = {c["id"] for c in report["checks"] if c["status"] == "fail"}
    assert failed == {"spanning-rank-equals-quotient-dim",
                      "quot-F-sandwich", "quot-L-sandwich"}
    block = report["quotient"][0]
    assert block["ideal_dim"] == 1
    assert block["quotient_dim"] == 29
    assert block["conjectured_dim"] == 25
    assert block["spanning_rank"] == 25
    assert block["steinberg_quotient_dim"] == 19
    assert {"n", "ideal_dim", "quotient_dim", "conjectured_dim",
            "spanning_rank", "presentation_checks",
            "specialization_points"} <= set(block)


def test_trace_suite(capsys):
    code, out = run_cli(["trace", "--n", "2", "--n-max", "3",
                         "--format", "json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["failed"] == 0
    ids = {c["id"] for c in report["checks"]}
    assert "trace-ideal-value-polynomial" in ids
    assert "trace-vanishing-lines" in ids
    tables = {b["n"]: b for b in report["trace"]}
    assert tables[2]["table"]["0,1 2,1"] == "A"
    assert "factorization" in tables[3]


def test_rank_suite(capsys):
    code, out = run_cli(["rank", "--n", "2", "--format", "json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["ranks"][0]["rank"] == 4


def test_suite_flag_alias(capsys):
    code1, out1 = run_cli(["--suite", "rank", "--n", "2", "--format", "json"],
                          capsys)
    code2, out2 = run_cli(["rank", "--n", "2", "--format", "json"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_determinism_byte_identical(capsys):
    args = ["relations", "--n", "2", "--seed", "7", "--format", "json"]
    _, out1 = run_cli(args, capsys)
    _, out2 = run_cli(args, capsys)
    assert out1 == out2
    args_md = ["quotient", "--n", "3", "--seed", "7"]
    _, md1 = run_cli(args_md, capsys)
    _, md2 = run_cli(args_md, capsys)
    assert md1 == md2


def test_markdown_format(capsys):
    code, out = run_cli(["relations", "--n", "2"], capsys)
    assert code == 0
    assert out.startswith("# btkit relations report")
    assert "| id | instance | status |" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(["rank", "--n", "2", "--format", "json",
                         "--out", str(path)], capsys)
    assert code == 0
    assert out == ""
    report = json.loads(path.read_text())
    assert report["suite"] == "rank"


def test_usage_errors(capsys):
    assert cli.main([]) == 2
    assert cli.main(["rank", "--n", "9"]) == 2
    assert cli.main(["rank", "--n", "3", "--n-max", "1"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_jobs_do_not_change_output(capsys):
    base = ["relations", "--n", "2", "--format", "json"]
    _, out1 = run_cli(base + ["--jobs", "1"], capsys)
    _, out2 = run_cli(base + ["--jobs", "2"], capsys)
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["checks"] == r2["checks"]


def test_export_ops(tmp_path, capsys):
    code, _ = run_cli(["rank", "--n", "2", "--format", "json",
                       "--export-ops", str(tmp_path / "ops")], capsys)
    assert code == 0
    files = sorted(os.listdir(tmp_path / "ops"))
    assert files == ["n2_E1.txt", "n2_T1.txt"]
    body = (tmp_path / "ops" / "n2_T1.txt").read_text()
    assert body.strip()
    for line in body.strip().split("\n"):
        row, col, scalar = line.split(None, 2)
        int(row), int(col)
        assert scalar
