import io
import json
import subprocess
import sys

import pytest

from macfold.cli import (
    EXIT_INVARIANT,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    EXIT_VERIFY,
    parse_table,
    render_schur,
    run,
)
from macfold.core import SchurExpansion
from macfold.macdonald import kostka_macdonald_oracle


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_stats_json():
    code, out, _ = call("stats", "--mu", "4,2,2,1", "--word", "583691724", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["maj"], data["inv"], data["ides"]) == (7, 2, [2, 4, 7])
    assert [c["entry"] for c in data["descent_cells"]] == [8, 6, 9]
    assert data["inversion_pairs"] == [[7, 2], [7, 4], [8, 3], [9, 1]]


def test_stats_text():
    code, out, _ = call("stats", "--mu", "4,2,2,1", "--word", "583691724")
    assert code == EXIT_OK and "maj              7" in out and "{2,4,7}" in out


def test_fold_trace():
    code, out, _ = call("fold", "--mu", "4,2,2,1", "--word", "841567392", "--trace", "--format", "json")
    steps = json.loads(out)
    assert code == EXIT_OK
    assert steps[-1]["word"] == "845163279"
    assert [(s["inv"], s["maj"]) for s in steps[-3:]] == [(4, 3), (3, 3), (2, 5)]
    assert all(s["ides"] == [2, 3, 7] for s in steps)
    code, out, _ = call("fold", "--mu", "4,2,2,1", "--word", "841567392")
    assert out == "845163279\n"


def test_kostka_both():
    code, out, _ = call("kostka", "--mu", "2,1", "--method", "both")
    assert code == EXIT_OK
    assert out.splitlines() == ["lambda  coeff", "3       1", "2 1     t + q", "1 1 1   q*t"]


def test_kostka_csv_and_latex():
    _, out, _ = call("kostka", "--mu", "1,1", "--format", "csv")
    assert out == "lambda,coeff\n2,1\n1 1,t\n"
    _, out, _ = call("kostka", "--mu", "2,1", "--format", "latex")
    assert out.startswith("\\begin{tabular}{ll}") and "$2 1$ & $t + q$ \\\\" in out
    assert out.rstrip().endswith("\\end{tabular}")


def test_empty_table_has_header():
    assert render_schur(SchurExpansion(3), "csv") == "lambda,coeff\n"
    assert render_schur(SchurExpansion(3), "text") == "lambda  coeff\n"


def test_json_round_trip():
    table = kostka_macdonald_oracle((3, 2))
    assert parse_table(render_schur(table.entries, "json")) == table.entries


def test_hmu_and_schur_pipeline():
    _, fund, _ = call("hmu", "--mu", "2,1", "--basis", "fundamental", "--format", "json")
    code, out, _ = call("schur", "--decompose", fund.strip(), "--format", "json")
    assert code == EXIT_OK
    assert SchurExpansion.from_json(json.loads(out)) == kostka_macdonald_oracle((2, 1)).entries
    _, out, _ = call("schur", "--syt", "3,1")
    assert [line.split()[0] for line in out.splitlines()[1:]] == ["2134", "3124", "4123"]


def test_classes(tmp_path):
    dot = tmp_path / "c.dot"
    code, out, _ = call("classes", "--n", "4", "--kind", "mu", "--mu", "3,1", "--dot", str(dot),
                        "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert sum(c["size"] for c in data) == 24
    assert all(len(c["weights"]) == 1 for c in data)
    assert dot.read_text().startswith("graph classes {")


def test_superstandard():
    _, out, _ = call("superstandard", "--lam", "3,1", "--format", "json")
    assert json.loads(out) == {"lambda": [3, 1], "perms": ["1243", "1423", "4123"]}


def test_exit_codes():
    assert call("fold", "--mu", "3,3", "--word", "123456")[0] == EXIT_UNSUPPORTED
    assert call("stats", "--mu", "3,x", "--word", "12")[0] == EXIT_USAGE
    assert call("stats", "--mu", "2,1", "--word", "12")[0] == EXIT_USAGE
    assert call("bogus")[0] == EXIT_USAGE
    assert call("kostka", "--mu", "4,2", "--method", "both")[0] == EXIT_INVARIANT
    assert call("hmu", "--mu", "5,5")[0] == EXIT_USAGE


def test_verify():
    code, out, _ = call("verify", "--suite", "examples")
    assert code == EXIT_OK and out.splitlines()[0].startswith("[examples] PASS worked examples")
    code, out, _ = call("verify", "--suite", "folding", "--max-n", "6")
    assert code == EXIT_VERIFY and out.splitlines()[-1].startswith("FAIL overall")


def test_output_independent_of_threads():
    a = call("hmu", "--mu", "3,2,1", "--threads", "1", "--format", "json")[1]
    b = call("hmu", "--mu", "3,2,1", "--threads", "3", "--format", "json")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "macfold", "stats", "--mu", "2,1", "--word", "213"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "iDes" in proc.stdout
