"""
Integration test for the betti command line.
Runs main() end to end and checks stdout, stderr and exit codes.
"""

import json

import pytest

from rect_betti.cli import TRANSPOSE_NOTICE, main
from rect_betti.engines.oracle.cache import ResultCache

GOLDEN_PRETTY = """\
       0  1 2 3
total: 9 16 9 1
    2: 9 16 9 -
    3: -  - - 1
"""


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("BETTI_CACHE_DIR", "BETTI_CELL_BUDGET", "BETTI_WORKERS"):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def report_of(err):
    # log lines may precede the JSON error report on stderr
    return json.loads(err[err.index("{"):])


# ============================================================================
# Betti tables
# ============================================================================


def test_formula_table(capsys):
    code, out, _ = run(capsys, "formula", "-a", "1", "-b", "2", "-m", "2", "-n", "2")
    assert code == 0
    assert out.endswith(GOLDEN_PRETTY)


def test_principal_determinant(capsys):
    code, out, _ = run(
        capsys, "formula", "-a", "2", "-b", "1", "-m", "2", "-n", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["tables"]["formula"] == [{"i": 0, "j": 2, "value": 1}]


def test_maximal_ideal(capsys):
    code, out, _ = run(
        capsys, "formula", "-a", "1", "-b", "1", "-m", "2", "-n", "2", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[1:] == [
        "formula,0,1,4",
        "formula,1,2,6",
        "formula,2,3,4",
        "formula,3,4,1",
    ]


def test_compare_agrees(capsys):
    code, out, _ = run(
        capsys, "compare", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--format", "json"
    )
    assert code == 0
    content = json.loads(out)
    assert content["match"] is True
    assert content["tables"]["formula"] == content["tables"]["oracle"]


def test_table_with_explicit_mode(capsys):
    code, out, _ = run(
        capsys, "table", "--mode", "oracle", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
        "--max-i", "1", "--max-j", "3",
    )
    assert code == 0
    assert "oracle:" in out
    assert "formula:" not in out


def test_json_output_is_deterministic(capsys):
    argv = ("formula", "-a", "1", "-b", "2", "-m", "3", "-n", "2", "--format", "json",
            "--equivariant")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert "equivariant" in json.loads(first)


def test_transposed_shape_notice(capsys):
    code, out, err = run(
        capsys, "formula", "-a", "1", "-b", "2", "-m", "2", "-n", "3", "--format", "json"
    )
    assert code == 0
    assert TRANSPOSE_NOTICE in err
    _, transposed, _ = run(
        capsys, "formula", "-a", "1", "-b", "2", "-m", "3", "-n", "2", "--format", "json"
    )
    assert json.loads(out)["tables"] == json.loads(transposed)["tables"]


# ============================================================================
# Failures and exit codes
# ============================================================================


def test_mismatch_exit_code(capsys, tmp_path):
    """A tampered cache entry makes the oracle disagree with the formula."""
    cache = ResultCache(tmp_path, 1, 2, 2, 2)
    cache.put_betti(0, 2, 10)
    cache.save()

    code, _, err = run(
        capsys, "compare", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
        "--cache-dir", str(tmp_path),
    )
    assert code == 1
    report = report_of(err)
    assert report["message"] == "Formula and oracle disagree"
    assert report["data"]["differences"] == [{"i": 0, "j": 2, "formula": 9, "oracle": 10}]


def test_zero_ideal_is_invalid(capsys):
    code, out, err = run(capsys, "formula", "-a", "3", "-b", "1", "-m", "2", "-n", "2")
    assert code == 2
    assert out == ""
    report = report_of(err)
    assert report["code"] == 2
    assert "the ideal is zero" in report["data"]["errors"][0]["msg"]


def test_bad_partition_is_invalid(capsys):
    code, _, err = run(capsys, "dim", "2,3", "2")
    assert code == 2
    assert "Not a partition" in report_of(err)["message"]


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("BETTI_CELL_BUDGET", "1")
    code, _, err = run(capsys, "oracle", "-a", "1", "-b", "2", "-m", "2", "-n", "2")
    assert code == 3
    report = report_of(err)
    assert report["message"] == "Resource budget exceeded"
    assert report["data"]["budget"] == 1


# ============================================================================
# Helpers
# ============================================================================


def test_gauss(capsys):
    code, out, _ = run(capsys, "gauss", "2", "2")
    assert code == 0
    assert out == "1 + w + 2w^2 + w^3 + w^4\n"

    _, out, _ = run(capsys, "gauss", "2", "2", "--format", "json")
    assert json.loads(out)["coefficients"] == [1, 1, 2, 1, 1]


def test_dim(capsys):
    assert run(capsys, "dim", "3,3", "2")[1] == "1\n"
    assert run(capsys, "dim", "2,1", "3")[1] == "8\n"


def test_pdreg(capsys):
    code, out, _ = run(capsys, "pdreg", "-a", "1", "-b", "2", "-m", "2", "-n", "2")
    assert code == 0
    assert out == "pd=3 reg=3\n"


def test_hrect(capsys):
    code, out, _ = run(
        capsys, "hrect", "-r", "1", "-s", "2", "-m", "2", "-n", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["terms"][0] == {"row": [2], "col": [2], "z": 2, "w": 0, "mult": 1}


def test_xhom(capsys):
    assert run(capsys, "xhom", "-r", "1", "-s", "1", "-m", "2", "-n", "2", "-k", "1")[1] == "0\n"
    code, out, _ = run(capsys, "xhom", "-r", "1", "-s", "2", "-m", "2", "-n", "2", "-k", "2")
    assert code == 0
    assert out == "1*I_{2x3}\n"


def test_hilbert_compare(capsys, tmp_path):
    code, out, _ = run(
        capsys, "hilbert", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--dmax", "4",
        "--compare", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert out.splitlines() == [
        "0: 0 (formula 0)",
        "1: 0 (formula 0)",
        "2: 9 (formula 9)",
        "3: 20 (formula 20)",
        "4: 35 (formula 35)",
    ]
    assert ResultCache(tmp_path, 1, 2, 2, 2).get_hilbert(3) == 20


def test_hilbert_accepts_engine_settings(capsys):
    """hilbert accepts the engine flags, even a cell budget of 1."""
    code, out, _ = run(
        capsys, "hilbert", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--dmax", "3",
        "--cell-budget", "1", "--workers", "2", "--format", "json",
    )
    assert code == 0
    assert [row["value"] for row in json.loads(out)["hilbert"]] == [0, 0, 9, 20]


def test_pdreg_transposed_shape(capsys):
    code, out, err = run(capsys, "pdreg", "-a", "1", "-b", "2", "-m", "2", "-n", "3")
    assert code == 0
    assert TRANSPOSE_NOTICE in err
    assert out == run(capsys, "pdreg", "-a", "1", "-b", "2", "-m", "3", "-n", "2")[1]
