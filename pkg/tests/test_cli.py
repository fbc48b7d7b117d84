"""End-to-end command behavior: formats, exit codes, determinism."""

import dataclasses
import io
import json

import jsonschema
import pytest

import brimlab.corpus as corpus_mod
from brimlab.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main
from brimlab.report import REPORT_SCHEMA, from_csv, from_json

GOOD = corpus_mod.by_name("E4").text
INFINITE_CASE = (
    "ring { p = 101 vars = [x, y] }\n"
    "module { rank = 1 matrix = [[x]] }\n"
)


@pytest.fixture
def problem(tmp_path):
    def write(text, name="problem.brim"):
        f = tmp_path / name
        f.write_text(text)
        return str(f)

    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(problem, capsys):
    code, out, _ = run(capsys, ["analyze", problem(GOOD)])
    assert code == EXIT_OK
    assert "e_0 = 2" in out and "verdicts" in out
    assert "l(F/N) = 4" in out and "l(A/I(N)) = 3" in out


def test_analyze_json_validates(problem, capsys):
    code, out, _ = run(capsys, ["analyze", problem(GOOD), "--format", "json"])
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    again = from_json(out)
    assert again == doc
    assert doc["multiplicity"]["e0"] == 2
    assert doc["lengths"] == {"F_mod_N": 4, "A_mod_IN": 3}
    assert doc["ring"]["dim"] == 1
    assert [row["t"] for row in doc["chi"]["per_t"]] == [-1, 0, 1]


def test_analyze_csv_round_trip(problem, capsys):
    code, out, _ = run(capsys, ["analyze", problem(GOOD), "--format", "csv"])
    assert code == EXIT_OK
    row = from_csv(out)
    assert row["e0"] == "2" and row["len_F_mod_N"] == "4"
    assert row["lambda"] == "4 9 16 25 36" and row["parameter"] == "true"


def test_analyze_infinite_is_reported_not_fatal(problem, capsys):
    code, out, _ = run(capsys, ["analyze", problem(INFINITE_CASE)])
    assert code == EXIT_OK
    assert "INFINITE" in out
    code, out, _ = run(capsys, ["analyze", problem(INFINITE_CASE), "--format", "json"])
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["lengths"]["F_mod_N"] == "INFINITE"
    assert doc["multiplicity"] is None


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, ["analyze", "/nonexistent/nope.brim"])
    assert code == EXIT_INPUT and "input error" in err


def test_analyze_stdin(problem, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(GOOD))
    code, out, _ = run(capsys, ["analyze", "-"])
    assert code == EXIT_OK and "e0" in out


def test_analyze_dimension_zero(problem, capsys):
    bad = ("ring { p = 101 vars = [x] ideal = [x^3] }\n"
           "module { rank = 1 matrix = [[x]] }\n")
    code, _, err = run(capsys, ["analyze", problem(bad)])
    assert code == EXIT_INPUT and "dimension" in err


def test_verify_clean(problem, capsys):
    code, out, _ = run(capsys, ["verify", problem(GOOD)])
    assert code == EXIT_OK
    assert "0 violation(s)" in out


def test_verify_flip_sign_violation(problem, capsys):
    # needs a complex of length >= 2 so a composite exists to break
    long_case = corpus_mod.by_name("E1").text
    code, out, _ = run(capsys, ["verify", problem(long_case), "--flip-sign", "2,0,0"])
    assert code == EXIT_VIOLATION
    assert "square_zero" in out and "reproduce with" in out


def test_verify_needs_input(capsys):
    code, _, err = run(capsys, ["verify"])
    assert code == EXIT_INPUT and "problem file or --corpus" in err


def test_verify_corpus_table(capsys):
    code, out, _ = run(capsys, ["verify", "--corpus"])
    assert code == EXIT_OK
    for name in ("E1", "E2", "E3", "E4", "E5", "E6"):
        assert name in out
    assert "MISMATCH" not in out


def test_corpus_filter(capsys):
    code, out, _ = run(capsys, ["corpus", "E2", "E5"])
    assert code == EXIT_OK
    assert "E2" in out and "E5" in out and "E1" not in out


def test_corpus_unknown_name(capsys):
    code, _, err = run(capsys, ["corpus", "E9"])
    assert code == EXIT_INPUT and "unknown corpus entries: E9" in err


def test_corpus_catches_tampered_expectation(capsys, monkeypatch):
    entry = corpus_mod.by_name("E3")
    tampered = dataclasses.replace(entry, lam=(2, 6, 12, 20, 31))
    fixed = tuple(tampered if e.name == "E3" else e for e in corpus_mod.ENTRIES)
    monkeypatch.setattr(corpus_mod, "ENTRIES", fixed)
    code, out, _ = run(capsys, ["corpus"])
    assert code == EXIT_VIOLATION
    assert "E3" in out and "lambda" in out


def test_budget_exhaustion_exits_3(problem, capsys):
    code, _, err = run(capsys, ["analyze", problem(GOOD), "--budget-pairs", "1"])
    assert code == EXIT_BUDGET and "budget" in err


def test_spread_deterministic(problem, capsys):
    argv = ["spread", problem(GOOD), "--samples", "3", "--seed", "5"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    assert "difference" in out1


def test_spread_json_deterministic(problem, capsys):
    argv = ["spread", problem(GOOD), "--samples", "2", "--seed", "5",
            "--format", "json"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["seed"] == 5 and len(doc["samples"]) == 2
    assert "elapsed_ms" not in json.dumps(doc)


def test_spread_needs_samples(problem, capsys):
    code, _, err = run(capsys, ["spread", problem(GOOD)])
    assert code == EXIT_INPUT and "--samples" in err


def test_options_block_feeds_defaults(problem, capsys):
    text = GOOD + "options { format = json }\n"
    code, out, _ = run(capsys, ["analyze", problem(text)])
    assert code == EXIT_OK
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)
    # a flag still overrides the file
    code, out, _ = run(capsys, ["analyze", problem(text), "--format", "csv"])
    assert code == EXIT_OK and out.startswith("p,")
