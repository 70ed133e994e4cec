import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hypack.cli import fmt, main, parse_angle

TABLE_CELLS = {
    "[5,3,3,3,3]": dict(vol5=0.00076730, height=0.38359861, piece_volume=0.00038760, density=0.50514481),
    "[5,3,3,3,4]": dict(vol5=0.00198469, height=0.53063753, piece_volume=0.00059001, density=0.29727979),
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fmt_half_even():
    assert fmt(0.125, 2) == "0.12"
    assert fmt(0.375, 2) == "0.38"
    assert fmt(-1e-17, 8) == "0.00000000"
    assert fmt(0.00091385225936, 8) == "0.00091385"


@pytest.mark.parametrize("text, value", [
    ("pi/6", math.pi / 6), ("-2pi/5", -2 * math.pi / 5), ("3*pi", 3 * math.pi), ("0.25", 0.25), ("-1e-3", -1e-3),
])
def test_parse_angle(text, value):
    assert parse_angle(text) == value


@pytest.mark.parametrize("symbol, density", [("[5,3,3,3,3]", 0.50514481), ("[5,3,3,3,4]", 0.29727979)])
def test_density_command(capsys, symbol, density):
    code, out, err = run(capsys, "density", symbol)
    assert code == 0 and err == ""
    line = [l for l in out.splitlines() if l.startswith("density")][0]
    assert float(line.split()[-1]) == pytest.approx(density, abs=1e-6)


def test_density_unsupported_symbol(capsys):
    code, out, err = run(capsys, "density", "[4,4]")
    assert code == 2
    assert out == ""
    assert "unsupported symbol" in err
    assert len(err.strip().splitlines()) == 1


def test_malformed_symbol(capsys):
    code, out, err = run(capsys, "height", "5,3,3,3,3")
    assert code == 2 and out == "" and "malformed" in err


def test_usage_error(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run(capsys, "table", "--digits", "16")
    assert code == 2


def test_numeric_failure_exit_status(capsys):
    # The quadrature cannot reach a tolerance below the rounding floor.
    code, out, err = run(capsys, "volume", "[5,3,3,3,4]", "--tol", "1e-30")
    assert code == 3 and out == "" and "numerical failure" in err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["[5,3,3,3,3]", "[5,3,3,3,4]"]
    cells = [float(tok) for line in lines[1:] for tok in line.split()[1:]]
    expected = [TABLE_CELLS[s][k] for k in ("vol5", "height", "piece_volume", "density") for s in TABLE_CELLS]
    assert len(cells) == 8
    for got, want in zip(cells, expected):
        assert abs(got - want) <= 1e-6
        # each cell is within one unit of the 8th decimal of the printed value
        assert abs(got - want) <= 1.000001e-8


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    data = json.loads(out)
    assert set(data) == set(TABLE_CELLS)
    for sym, cells in TABLE_CELLS.items():
        for k, v in cells.items():
            assert data[sym][k] == pytest.approx(v, abs=1e-6)
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["symbol", "vol5", "height", "piece_volume", "density"]
    assert [r[0] for r in rows[1:]] == list(TABLE_CELLS)


def test_table_digits(capsys):
    _, out, _ = run(capsys, "table", "--digits", "4")
    for line in out.strip().splitlines()[1:]:
        for tok in line.split()[1:]:
            assert len(tok.split(".")[1]) == 4


def test_density_json_round_trip(capsys):
    _, out, _ = run(capsys, "density", "[5,3,3,3,3^{1,1}]", "--format", "json")
    data = json.loads(out)
    assert data["symbol"] == "[5,3,3,3,3^{1,1}]"
    assert json.dumps(data, indent=2) + "\n" == out


def test_deterministic_output(capsys):
    outs = [run(capsys, "table", "--format", "csv", "--digits", "15")[1] for _ in range(2)]
    assert outs[0] == outs[1]


@pytest.mark.parametrize("omega, expected", [("0", 0.0), ("pi/2", 0.0), ("pi/6", 0.50747080)])
def test_lobachevsky_command(capsys, omega, expected):
    code, out, _ = run(capsys, "lobachevsky", omega, "--digits", "12")
    assert code == 0
    assert float(out) == pytest.approx(expected, abs=1e-12 if expected == 0 else 1e-8)


@pytest.mark.parametrize("omega", ["inf", "nan", "abc"])
def test_lobachevsky_bad_input(capsys, omega):
    code, out, err = run(capsys, "lobachevsky", omega)
    assert code == 2 and out == "" and err


def test_reference_constants(capsys):
    code, out, _ = run(capsys, "reference-constants", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "symbol", "density", "note"]
    assert rows[1][:3] == ["3", "[7,3,3]", "0.82251367"]
    assert rows[2][:3] == ["4", "[3,5,3,3]", "0.57680322"]
    assert all("not computed" in r[3] for r in rows[1:])


def test_volume_and_height_commands(capsys):
    _, out, _ = run(capsys, "volume", "[5,3,3,3,4]", "--format", "csv")
    assert out == "symbol,vol5\n\"[5,3,3,3,4]\",0.00198470\n"
    _, out, _ = run(capsys, "height", "[5,3,3,3,3]")
    assert out.split()[-1] == "0.38359861"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypack", "density", "[5,3,3,3,4]", "--format", "csv"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[0] == "symbol,vol5,height,piece_volume,density"
