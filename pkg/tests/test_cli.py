import json

import jsonschema
import pytest

from src.main import build_parser, main
from src.utils.exceptions import ConvergenceError, InvariantViolationError


@pytest.fixture
def validate(response_schema):
    validator = jsonschema.Draft7Validator(response_schema)

    def check(stdout):
        payload = json.loads(stdout)
        validator.validate(payload)
        return payload

    return check


@pytest.mark.parametrize("spectra, expected", [
    (("1,0", "1,0", "1,1"), 0),
    (("1,0", "1,0", "3,-1"), 1),
    (("-1,-2", "0,0", "-1,-2"), 0),
])
def test_check_hermitian_exit_codes(cli, validate, spectra, expected):
    code, out = cli("check", "hermitian", *spectra, "--json")
    assert code == expected
    payload = validate(out)
    assert payload["command"] == "check hermitian"
    assert payload["result"]["feasible"] is (expected == 0)


def test_infeasible_verdict_names_a_witness(cli, validate):
    code, out = cli("check", "hermitian", "1,0", "1,0", "3,-1", "--json")
    result = validate(out)["result"]
    assert result["witness_kind"] == "inequality"
    assert result["witness"]["p"] == 1
    assert result["slack"] < 0


def test_unsorted_spectrum_is_invalid_input(cli):
    code = cli("check", "hermitian", "0,1", "1,0", "1,0")[0]
    assert code == 2


def test_malformed_number_is_invalid_input(cli):
    assert cli("check", "hermitian", "1,x", "1,0", "1,0")[0] == 2


def test_wrong_spectrum_count_is_invalid_input(cli):
    assert cli("check", "hermitian", "1,0", "1,0")[0] == 2


def test_table_output(cli):
    code, out = cli("check", "hermitian", "1,0", "1,0", "1,1")
    assert code == 0
    assert "feasible" in out
    assert "True" in out


def test_spectra_from_file(cli, validate, tmp_path):
    path = tmp_path / "spectra.json"
    path.write_text(json.dumps([[1, 0], [1, 0], [1, 1]]), encoding="utf-8")
    code, out = cli("check", "hermitian", f"@{path}", "--json")
    assert code == 0
    assert validate(out)["inputs"]["spectra"] == [[1.0, 0.0], [1.0, 0.0], [1.0, 1.0]]


def test_missing_file_is_invalid_input(cli, tmp_path):
    assert cli("check", "hermitian", f"@{tmp_path / 'absent.json'}")[0] == 2


@pytest.mark.parametrize("n, count", [(2, 3), (3, 12)])
def test_horn_listing(cli, validate, n, count):
    code, out = cli("horn", str(n), "--json")
    assert code == 0
    result = validate(out)["result"]
    assert result["count"] == count
    assert len(result["triples"]) == count


def test_horn_recursive_listing(cli, validate):
    result = validate(cli("horn", "3", "--recursive", "--json")[1])["result"]
    assert result["count"] == 12
    assert all(t["c"] is None for t in result["triples"])


def test_horn_csv_export(cli, tmp_path):
    path = tmp_path / "horn3.csv"
    code, out = cli("horn", "3", "--csv", str(path))
    assert code == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "p,I,J,K,d,c"
    assert len(lines) == 13


def test_horn_rejects_small_n(cli):
    assert cli("horn", "1")[0] == 2


def test_lr_coefficient(cli, validate):
    code, out = cli("lr", "2,1", "2,1", "3,2,1", "--json")
    assert code == 0
    assert validate(out)["result"] == {"multiplicity": 2}


def test_lr_rejects_non_partition(cli):
    assert cli("lr", "1,2", "1", "2,2")[0] == 2


def test_tensor_decomposition(cli, validate):
    code, out = cli("tensor", "2,1", "2,1", "--rows", "3", "--json")
    assert code == 0
    decomposition = validate(out)["result"]["decomposition"]
    assert len(decomposition) == 5
    assert {"gamma": [3, 2, 1], "multiplicity": 2} in decomposition
    assert sum(term["multiplicity"] for term in decomposition) == 6


@pytest.mark.parametrize("spectra, expected", [
    (("0.25,-0.25", "0.25,-0.25", "0.3,-0.3"), 0),
    (("0.4,-0.4", "0.4,-0.4", "0.3,-0.3"), 1),
])
def test_check_unitary(cli, validate, spectra, expected):
    code, out = cli("check", "unitary", *spectra, "--json")
    assert code == expected
    result = validate(out)["result"]
    if expected:
        assert result["witness"]["d"] == 1


def test_check_unitary_rejects_unnormalized(cli):
    assert cli("check", "unitary", "0.3,0", "0,0", "0,0")[0] == 2


@pytest.mark.parametrize("spectra, expected", [
    (("2,0.5", "2,0.5", "1,1"), 0),
    (("2,0.5", "2,0.5", "8,0.125"), 1),
])
def test_check_singular(cli, validate, spectra, expected):
    code, out = cli("check", "singular", *spectra, "--json")
    assert code == expected
    validate(out)


def test_check_singular_rejects_non_unimodular(cli):
    assert cli("check", "singular", "2,1", "1,1")[0] == 2


@pytest.mark.parametrize("spectra, expected", [
    (("1,-1", "1,-1", "1,-1", "1,-1"), 0),
    (("2,-1,-1", "2,-1,-1", "1,1,-2"), 1),
])
def test_check_zero_sum(cli, validate, spectra, expected):
    code, out = cli("check", "zero-sum", *spectra, "--json")
    assert code == expected
    validate(out)


@pytest.mark.parametrize("gamma, expected", [("2.5,1.5,0", 0), ("3.5,0.5,0", 1)])
def test_check_interlace(cli, validate, gamma, expected):
    code, out = cli("check", "interlace", "2,1,0", "1", gamma, "--json")
    assert code == expected
    validate(out)


@pytest.mark.parametrize("spectra, status, expected", [
    (("1,0", "1,0", "1,0"), "stable", 0),
    (("1,0", "1,0", "0,0"), "semistable_only", 0),
    (("2,0", "1,0", "0,0"), "unstable", 1),
])
def test_check_stability(cli, validate, spectra, status, expected):
    code, out = cli("check", "stability", *spectra, "--json")
    assert code == expected
    assert validate(out)["result"]["status"] == status


def test_check_simpson_from_multiplicities(cli, validate):
    code, out = cli("check", "simpson", "--n", "2", "--multiplicities", "1,1", "1,1", "1,1", "--json")
    assert code == 0
    assert validate(out)["result"] == {"dense": True, "dimension_sum": 6, "codimension_sum": 3, "rigid": True}


def test_check_simpson_scalar_classes(cli, validate):
    code, out = cli("check", "simpson", "--n", "3", "--dims", "0,0,0", "--codims", "0,0,0", "--json")
    assert code == 1
    assert validate(out)["result"]["dense"] is False


def test_check_simpson_needs_input(cli):
    assert cli("check", "simpson", "--n", "3")[0] == 2


def test_sample_is_deterministic(cli, validate):
    argv = ("sample", "sum", "2,1,0", "1,0,-1", "--trials", "25", "--seed", "3", "--json")
    first, second = cli(*argv), cli(*argv)
    assert first == second
    assert first[0] == 0
    result = validate(first[1])["result"]
    assert result["trials"] == 25
    assert result["all_pass"] is True


def test_sample_ignores_worker_count(cli):
    base = ("sample", "product", "0.25,-0.25", "0.1,-0.1", "--trials", "20", "--seed", "5", "--json")
    assert cli(*base, "--jobs", "1") == cli(*base, "--jobs", "2")


def test_sample_singular(cli, validate):
    code, out = cli("sample", "singular", "2,0.5", "3,1,", "--trials", "5", "--json")
    assert code == 2
    code, out = cli("sample", "singular", "2,0.5", "4,0.25", "--trials", "10", "--seed", "1", "--json")
    assert code == 0
    assert validate(out)["result"]["kind"] == "singular"


@pytest.mark.parametrize("argv", [[], ["check"], ["lr", "1"], ["horn", "three"]])
def test_argparse_errors_exit_with_two(argv):
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(argv)
    assert excinfo.value.code == 2


def test_internal_faults_are_reported_apart_from_bad_input(monkeypatch, capsys):
    def diverge(m):
        raise ConvergenceError("sweep cap reached")

    monkeypatch.setattr("src.oracle.matrices.jacobi_eigh", diverge)
    code = main(["sample", "sum", "1,0", "1,0", "--trials", "2", "--jobs", "1"])
    err = capsys.readouterr().err
    assert code == 2
    assert "internal error: sweep cap reached" in err


def test_broken_invariant_is_an_internal_fault(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise InvariantViolationError("negative coefficient")

    monkeypatch.setattr("src.main.check_hermitian_sum", broken)
    assert main(["check", "hermitian", "1,0", "1,0", "1,1"]) == 2
    assert "internal error: negative coefficient" in capsys.readouterr().err


def test_bad_input_is_not_an_internal_fault(capsys):
    assert main(["check", "hermitian", "0,1", "1,0", "1,0"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
    assert "internal error" not in err
