import json
import os

import pytest

from backend import config
from backend.reports import Report

def test_stats_perm(cli):
    """Test the statistics of a permutation"""
    code, out, _ = cli("stats", "perm", "3142")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "D:     [1,2,1]"
    assert lines[1] == "Rec:   [2,2]"
    assert lines[2] == "GC:    [2,1,1]"
    assert lines[3] == "GDes:  {3,4}"
    assert lines[4] == "WC:    [1,1,1,1]"

def test_stats_word(cli):
    """Test the statistics of a packed word"""
    code, out, _ = cli("stats", "word", "1543421323")
    assert code == 0
    assert "WC:    [2,3,2,2,1]" in out
    assert "Last:  {2,5,7,9,10}" in out
    assert "Pack:  1543421323" in out

def test_stats_rejects_non_permutation(cli):
    """Test that invalid words exit with a usage error"""
    code, _, err = cli("stats", "perm", "3143")
    assert code == 2
    assert err.startswith("error:")

def test_matrix_matches_golden(cli, golden_dir):
    """Test that the matrix command prints the published matrix"""
    code, out, _ = cli("matrix", "RPsi", "3")
    assert code == 0
    with open(os.path.join(golden_dir, "M3_RPsi.txt")) as handle:
        assert out == handle.read()

def test_matrix_json(cli):
    """Test JSON output of the matrix command"""
    code, out, _ = cli("matrix", "RL", "3", "--format", "json", "--layout", "theorem")
    assert code == 0
    record = json.loads(out)
    assert record["layout"] == "theorem"
    assert record["entries"][1] == [0, 2, 0, 0]

def test_matrix_cap(cli):
    """Test that degrees above --cap exit with a usage error"""
    code, _, err = cli("matrix", "RL", "6", "--cap", "5")
    assert code == 2
    assert "error:" in err

def test_expand(cli):
    """Test expansion in a basis"""
    code, out, _ = cli("expand", "R[2,2]", "--in", "L")
    assert code == 0
    assert out == "2*L[3,1] + 2*L[2,2] + 1*L[2,1,1]\n"

def test_expand_json(cli):
    """Test JSON output of an expansion"""
    code, out, _ = cli("expand", "T[1]*T[1]", "--in", "T", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["basis"] == "T"
    assert record["terms"] == [
        {"index": "[2]", "coefficient": "1"},
        {"index": "[1,1]", "coefficient": "1"},
    ]

def test_expand_syntax_error(cli):
    """Test that syntax errors carry the column"""
    code, _, err = cli("expand", "R[2,1)*", "--in", "L")
    assert code == 2
    assert "column 6" in err

def test_product(cli):
    """Test products in both quotients"""
    assert cli("product", "T", "[1]", "[1]")[:2] == (0, "1*T[2] + 1*T[1,1]\n")
    assert cli("product", "U", "1", "1", "--brute")[:2] == (0, "1*U[2] + 2*U[1,1]\n")

def test_product_of_worked_examples(cli):
    """Test that products of degree 9 run under the default cap"""
    code, out, _ = cli("product", "T", "221", "13", "--cap", "8")
    assert code == 0
    assert "6*T[4,2,1,1,1]" in out
    code, out, _ = cli("product", "U", "221", "13", "--brute", "--cap", "8")
    assert code == 0
    assert "4*U[4,1,1,3]" in out
    code, out, _ = cli("expand", "T[2,2,1]*T[1,3]", "--in", "T", "--cap", "8")
    assert code == 0
    assert "6*T[4,2,1,1,1]" in out

def test_genocchi(cli):
    """Test the Genocchi table"""
    code, out, _ = cli("genocchi", "5")
    assert code == 0
    assert "MISMATCH" not in out
    assert len(out.splitlines()) == 6

def test_verify_tables(cli, golden_dir):
    """Test the tables suite against the golden files"""
    code, out, _ = cli("verify", "tables", "--golden", golden_dir)
    assert code == 0
    assert "FAIL" not in out
    assert out.rstrip().endswith("-- verified")

def test_verify_products_notes_erratum(cli):
    """Test that the products suite passes with a NOTE line"""
    code, out, _ = cli("verify", "products", "--max-degree", "4")
    assert code == 0
    assert "NOTE U[4,1,1,3] coefficient erratum" in out

def test_verify_failure_exit_code(cli, monkeypatch):
    """Test that a failed check exits with 1"""
    failing = Report("sequences")
    failing.check("always fails", False)
    monkeypatch.setattr("services.cli.run_suite", lambda *args: failing)
    code, out, _ = cli("verify", "sequences")
    assert code == 1
    assert "FAIL always fails" in out

@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["matrix", "XY", "3"],
    ["matrix", "RL", "3", "--workers", "0"],
    ["expand", "R[1]"],
])
def test_usage_errors(cli, argv):
    """Test that malformed command lines exit with 2"""
    code, _, err = cli(*argv)
    assert code == 2
    assert err

def test_options_do_not_leak(cli):
    """Test that --cap and --workers only apply to the command they are given to"""
    before = config.MAX_DEGREE, config.WORKERS
    cli("matrix", "RL", "3", "--cap", "4", "--workers", "1")
    assert (config.MAX_DEGREE, config.WORKERS) == before
