import json

import pytest

from braidfam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def listed(out):
    return [line.split("\t")[0] for line in out.splitlines() if not line.startswith("count:")]


@pytest.mark.parametrize("word, reduced", [("A^3b^2a^2B^3", "AbaB"), ("AbAb", "AbAb"), ("A^2bA^2bAb", "AbAbAb")])
def test_reduce(capsys, word, reduced):
    code, out, _ = run(capsys, "reduce", word)
    assert code == 0 and out.strip() == reduced


def test_parse_error_exit(capsys):
    code, out, err = run(capsys, "reduce", "A^0")
    assert code == 2 and out == "" and "degree 0" in err


def test_canon(capsys):
    assert run(capsys, "canon", "bAbA")[1].strip() == "AbAb"


def test_generators(capsys):
    code, out, _ = run(capsys, "generators", "--s", "3", "--class", "algebraic")
    assert code == 0 and listed(out) == ["AbACbC", "AbAbCbC"]
    assert listed(run(capsys, "generators", "--s", "2", "--l", "8")[1]) == ["AbAbAbAb"]
    assert len(listed(run(capsys, "generators", "--s", "4", "--class", "algebraic")[1])) == 3


def test_families(capsys):
    code, out, _ = run(capsys, "families", "--generator", "AbAb")
    assert code == 0
    assert set(listed(out)) == {"A^pbAb", "A^pbA^qb", "A^pbAb^q", "A^pbA^qb^r", "A^pb^qA^rb^s"}
    assert out.splitlines()[-1] == "count: 5"


def test_families_rejects_unreduced(capsys):
    assert run(capsys, "families", "--generator", "A^2bAb")[0] == 2


def test_invariants_json_key_order(capsys):
    code, out, _ = run(capsys, "invariants", "AbAb")
    data = json.loads(out)
    assert code == 0
    assert list(data) == ["word", "reduced", "width", "strands", "crossings", "components",
                          "exponent_sum", "code", "antisymmetric", "alexander", "determinant"]
    assert (data["components"], data["determinant"], data["alexander"], data["antisymmetric"]) == \
        (1, 5, "0:1 1:-3 2:1", True)


def test_invariants_examples(capsys):
    data = json.loads(run(capsys, "invariants", "A^3")[1])
    assert (data["components"], data["determinant"]) == (1, 3)
    data = json.loads(run(capsys, "invariants", "ABaB^2C^2BAdcb^2c^2Dcd")[1])
    assert data["antisymmetric"] is True and data["exponent_sum"] == 0


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "8")
    assert code == 0 and "formula=20 brute=20" in out
    code, out, _ = run(capsys, "count", "--n", "15", "--brute")
    assert code == 0
    assert "brute=2080" in out and "printed=1080" in out and "paper value differs" in out
    assert "formula=2" in run(capsys, "count", "--n", "4")[1]


def test_count_range(capsys):
    assert run(capsys, "count", "--n", "0")[0] == 2
    assert run(capsys, "count", "--n", "30", "--brute")[0] == 2


def test_json_report_shape(capsys):
    data = json.loads(run(capsys, "--json", "count", "--n", "8")[1])
    assert data["counts"] == {"pass": 1, "fail": 0, "info": 1}
    assert data["command"] == "count --n 8"


def test_verify_single_table(capsys, tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text("achiral AbAb\tA^pbAb^p\tp 1 1 p\talgebraic-rational\t-\tp=1\n"
                 "achiral AbAb\tA^pb^qA^qb^p\t(p,q) (p,q)\talgebraic-other\t-\t-\n")
    code, out, _ = run(capsys, "verify-tables", "--fixtures", str(f), "--max-length", "6")
    assert code == 0
    assert "PASS [achiral AbAb] A^pbAb^p <-> p 1 1 p" in out
    assert "PASS [antisymmetry] A^pb^qA^qb^p" in out


def test_partial_family_table_is_diffed(capsys, tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text("T\tA^pbAb\tp 1 2\talgebraic-rational\t-\tp=1\n")
    code, out, _ = run(capsys, "verify-tables", "--fixtures", str(f), "--max-length", "6")
    assert code == 1
    assert "PASS [T] A^pbAb <-> p 1 2" in out
    assert "derived, absent from T: A^pbA^qb" in out


def test_verify_reports_failure(capsys, tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text("T\tA^pbAb\tp 2\talgebraic-rational\t-\t-\n")
    code, out, _ = run(capsys, "verify-tables", "--fixtures", str(f), "--max-length", "6")
    assert code == 1 and "FAIL [T]" in out


def test_missing_fixtures(capsys, tmp_path):
    assert run(capsys, "verify-tables", "--fixtures", str(tmp_path / "nope"))[0] == 2
