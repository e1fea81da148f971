import csv
import io
import json
import subprocess
import sys

import pytest

from simplex_gauss.cli import InputError, main, parse_expression
from simplex_gauss.exactnum import NumberField
from simplex_gauss.gaussnd import Itinerary

CUBE = ["--minpoly=-1,3,3,1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(capsys, *argv):
    code, out, _ = run(capsys, "--payload-only", *argv)
    assert code == 0
    return json.loads(out)


def test_envelope(capsys):
    code, out, _ = run(capsys, "cf", "7/23")
    data = json.loads(out)
    assert code == 0
    assert data["schema_version"] == "1.0"
    assert data["command"]["command"] == "cf"
    assert data["payload"] == {"terms": [3, 3, 2], "status": "finite"}
    assert data["timing"]["seconds"] >= 0


def test_orbit_itinerary_round_trip(capsys):
    data = payload(capsys, "itinerary", *CUBE, "a", "a^2")
    it = Itinerary.from_json(data)
    assert it.status == "periodic"
    assert it.labels()[:4] == ["A3", "B1", "B1", "A2"]
    assert Itinerary.from_json(it.to_json()) == it


def test_orbit_records(capsys):
    data = payload(capsys, "orbit", *CUBE, "a", "a^2", "--max-steps", "2", "--digits", "6")
    assert data["records"][1]["decimal"] == ["0.847322", "0.259921"]
    assert data["records"][0]["symbol"] == "A3"
    K = NumberField.from_json(data["field"])
    assert K.minpoly == NumberField([-1, 3, 3, 1], (0, 1)).minpoly


def test_homogeneous_input(capsys):
    a = payload(capsys, "itinerary", *CUBE, "2*a", "a", "2", "--max-steps", "4")
    b = payload(capsys, "itinerary", *CUBE, "a", "a/2", "--max-steps", "4")
    assert a["labels"] == b["labels"] == ["A3", "B1", "A1", "B1"]


def test_orbit_csv(capsys):
    data = payload(capsys, "orbit", "2/3", "1/3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(data["csv"])))
    assert rows[0][:2] == ["step", "symbol"]
    assert rows[1][1] == "A1"


def test_expectation_exit_codes(capsys):
    assert run(capsys, "itinerary", "2/3", "1/3", "--expect-itinerary", "A1,B2")[0] == 0
    assert run(capsys, "itinerary", "2/3", "1/3", "--expect-itinerary", "A1,B1")[0] == 1


@pytest.mark.parametrize("argv", [
    ["cf", "7/5"],
    ["cf", "1/(3"],
    ["orbit", "1/3", "2/3"],
    ["gamma", "1/3", "1/5"],
    ["gamma", "--minpoly=-1,0,1,1", "a", "a/(1+a)", "--steps", "0"],
    ["verify", "--suite", "nope"],
    ["orbit", "--minpoly=-1,3,3,1", "--root-interval", "1,2", "a", "0"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")
    assert out == ""


def test_gamma_csv_file(capsys, tmp_path):
    out = tmp_path / "rates.csv"
    data = payload(capsys, "gamma", "--minpoly=-1,0,1,1", "a", "a/(1+a)", "--steps", "6",
                   "--start", "3", "--out", str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == "n,gamma1,gamma2,gamma3"
    assert [int(r.split(",")[0]) for r in lines[1:]] == [3, 4, 5, 6]
    assert "summary" in data or "rows" in data


def test_lyapunov_command(capsys):
    data = payload(capsys, "lyapunov", "--minpoly=-1,1,1", "a", "--N", "40", "--method", "derivative")
    assert data["method"] == "derivative"
    assert abs(float(data["value"]) - 0.9624236501) < 1e-5


def test_verify_command(capsys):
    data = payload(capsys, "verify", "--suite", "edge-1d", "--samples", "10")
    assert data["result"] == "pass" and data["total"] > 0


def test_deterministic_output(capsys):
    argv = ["verify", "--suite", "best-approx", "--dim", "2", "--samples", "5", "--seed", "3"]
    assert payload(capsys, *argv) == payload(capsys, *argv)


def test_digits_environment(monkeypatch, capsys):
    monkeypatch.setenv("SIMPLEX_GAUSS_DIGITS", "3")
    data = payload(capsys, "orbit", "2/3", "1/3")
    assert data["records"][0]["decimal"] == ["0.667", "0.333"]


def test_parse_expression():
    K = NumberField([-1, 3, 3, 1], (0, 1))
    a = K.gen
    assert parse_expression("3/5 + 1/5*a^2", K) == a * a / 5 + sx(3, 5)
    assert parse_expression("-(1-3*a)", K) == 3 * a - 1
    with pytest.raises(InputError):
        parse_expression("a+", K)
    with pytest.raises(InputError):
        parse_expression("a")


def sx(p, q):
    from fractions import Fraction

    return Fraction(p, q)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "simplex_gauss", "--payload-only", "cf", "3/8"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["terms"] == [2, 1, 2]
