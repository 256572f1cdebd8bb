import json
from importlib import resources

import pytest

from cyclrc.cli import main

GRID = str(resources.files("cyclrc").joinpath("golden/search_nondividing.json"))


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_optimal_exit0(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "C44", "--q", "19", "--n", "18",
        "--t", "1", "--b", "1", "--m", "5", "--tail", "8", "--delta", "4",
        "--format", "pretty",
    )
    assert code == 0
    assert "[18, 8, 8]" in out and "(7, 4)-locality" in out and "optimal" in out
    assert "generator:" in out and "defining exponents:" in out


def test_construct_not_optimal_exit2(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "--family", "T48", "--q", "31", "--n", "30",
        "--delta", "2", "--m", "2", "--format", "pretty",
    )
    assert code == 2
    assert "not optimal" in out


def test_construct_hypothesis_violation_exit1(capsys):
    code, _, err = run_cli(
        capsys, "construct", "--family", "C52", "--case", "1", "--q", "64",
        "--n", "65", "--r", "2", "--delta", "4", "--i", "1", "--ell", "3",
    )
    assert code == 1
    assert "floor((r-1)/2)" in err


def test_construct_missing_flag_exit1(capsys):
    code, _, err = run_cli(capsys, "construct", "--family", "C44", "--q", "19")
    assert code == 1
    assert "usage" in err.lower()


def test_construct_json_deterministic(capsys, tmp_path):
    argv = ["construct", "--family", "P49", "--q", "19", "--n", "18",
            "--delta", "4", "--format", "json"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    cert = json.loads(out1)
    assert cert["schema"] == 1
    assert cert["optimality"]["optimal"] is True
    assert cert["locality"]["dA_perp"] == 9 and cert["locality"]["dB"] == 4


def test_verify_roundtrip_and_tamper(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run_cli(
        capsys, "construct", "--family", "C44", "--q", "19", "--n", "18",
        "--t", "1", "--m", "5", "--tail", "8", "--delta", "3",
        "--format", "json", "-o", str(path),
    )
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert "disagree" not in out

    cert = json.loads(path.read_text())
    cert["code"]["k"] = cert["code"]["k"] + 1
    path.write_text(json.dumps(cert))
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "disagree" in out and "dimension" in out


def test_verify_malformed_exit1(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 1 and "malformed" in err


def test_search_headline_grid(capsys):
    code, out, _ = run_cli(capsys, "search", "--grid", GRID)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,q,n,r,delta,k,d,optimal,divides"
    rows = [dict(zip(lines[0].split(","), ln.split(","))) for ln in lines[1:]]
    nondiv_optimal = [r for r in rows if r["optimal"] == "True" and r["divides"] == "False"]
    assert len(nondiv_optimal) >= 5
    assert any(r["n"] == "18" and r["k"] == "12" and r["d"] == "6" and r["r"] == "9" for r in rows)
    assert any(r["n"] == "17" and r["k"] == "8" and r["d"] == "8" and r["r"] == "7" for r in rows)


def test_search_empty_grid(capsys, tmp_path):
    grid = tmp_path / "empty.json"
    grid.write_text(json.dumps({"grids": []}))
    code, out, _ = run_cli(capsys, "search", "--grid", str(grid))
    assert code == 0
    assert out.strip() == "family,q,n,r,delta,k,d,optimal,divides"


def test_search_invalid_grid(capsys, tmp_path):
    grid = tmp_path / "bad.json"
    grid.write_text("[]")
    code, _, err = run_cli(capsys, "search", "--grid", str(grid))
    assert code == 1 and "invalid grid" in err


def test_table_renders_rows(capsys, tmp_path):
    rows = tmp_path / "rows.json"
    code, _, _ = run_cli(capsys, "search", "--grid", GRID, "--format", "json", "-o", str(rows))
    assert code == 0
    code, out, _ = run_cli(capsys, "table", str(rows))
    assert code == 0
    assert out.splitlines()[0].split()[:3] == ["family", "q", "n"]
    assert "C511" in out


def test_budget_floor_rejected(capsys):
    code, _, err = run_cli(
        capsys, "construct", "--family", "P49", "--q", "19", "--n", "18",
        "--delta", "4", "--budget", "10",
    )
    assert code == 1
    assert "budget" in err


def test_corrupted_corpus_identified(tmp_path):
    from cyclrc.golden import run_corpus

    bad = tmp_path / "corpus.json"
    bad.write_text("{\"schema\": 1")
    results = run_corpus(path=str(bad))
    assert len(results) == 1 and not results[0].ok
    assert "corpus.json" in results[0].detail


def test_verify_sandwich_certificate(capsys, tmp_path):
    # a non-optimal build whose distance stays a sandwich still verifies
    path = tmp_path / "sandwich.json"
    code, _, _ = run_cli(
        capsys, "construct", "--family", "T51", "--q", "64", "--n", "65",
        "--delta", "4", "--t", "49", "--m", "33",
        "--tail", "36", "--tail", "41", "--tail", "46",
        "--tail", "51", "--tail", "56", "--tail", "61",
        "--format", "json", "-o", str(path),
    )
    assert code == 2
    cert = json.loads(path.read_text())
    assert cert["optimality"]["d_exact"] is None
    assert (cert["optimality"]["d_lower"], cert["optimality"]["d_upper"]) == (36, 39)
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0 and "disagree" not in out
