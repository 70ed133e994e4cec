"""Command-line interface.

    hypack density "[5,3,3,3,3]"
    hypack table --format json
    hypack lobachevsky pi/6 --digits 12

Exit status: 0 on success, 2 on usage or parse errors, 3 on numerical
failure. Diagnostics go to stderr only.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

from hypack.coxeter import invert, parse_symbol, require_supported, schlafli_matrix
from hypack.errors import DomainError, GeometryError, NumericalError, SymbolError
from hypack.hyperball import density, optimal_height
from hypack.quadrature import QuadratureSettings
from hypack.specfun import lobachevsky
from hypack.volume import vol5_truncated

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3

TABLE_SYMBOLS = ("[5,3,3,3,3]", "[5,3,3,3,4]")
TABLE_ROWS = (
    ("vol5", "Vol(S_i)"),
    ("height", "h_i"),
    ("piece_volume", "Vol(H_opt)"),
    ("density", "delta_opt"),
)
CSV_FIELDS = ("symbol", "vol5", "height", "piece_volume", "density")

# Densities for n = 3 and n = 4 come from earlier work on prism tilings in
# H^3 and H^4; their volume formulas are not implemented here.
REFERENCE_CONSTANTS = (
    (3, "[7,3,3]", "0.82251367"),
    (4, "[3,5,3,3]", "0.57680322"),
)
REFERENCE_NOTE = "cited literal from earlier work on H^3/H^4 prism tilings; not computed"


@dataclass(frozen=True)
class CliConfig:
    digits: int = 8
    abs_tol: float = 1e-11
    format: str = "text"


def fmt(x: float, digits: int) -> str:
    """Fixed-point with ``digits`` decimals, round half to even."""
    d = Decimal(x).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    if d == 0:
        d = abs(d)
    return format(d, "f")


def _num(x: float, digits: int) -> float:
    # JSON numbers carry the displayed (rounded) value.
    return float(fmt(x, digits))


_PI_RE = re.compile(r"\s*(-)?\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*")


def parse_angle(text: str) -> float:
    """A float, or a multiple of pi such as ``pi/6``, ``-2pi/5``, ``3*pi``."""
    m = _PI_RE.fullmatch(text)
    if m:
        sign, mult, div = m.groups()
        v = math.pi * float(mult or 1) / float(div or 1)
        return -v if sign else v
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"not a real number: {text!r}") from None


def _digits(text):
    n = int(text)
    if not 1 <= n <= 15:
        raise argparse.ArgumentTypeError("digits must be between 1 and 15")
    return n


def _tol(text):
    x = float(text)
    if not (x > 0 and math.isfinite(x)):
        raise argparse.ArgumentTypeError("tolerance must be a positive number")
    return x


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump_text(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


def _render_record(record: dict, cfg: CliConfig) -> str:
    keys = list(record)
    if cfg.format == "json":
        return _dump_json({k: v if isinstance(v, str) else _num(v, cfg.digits) for k, v in record.items()})
    cells = [v if isinstance(v, str) else fmt(v, cfg.digits) for v in record.values()]
    if cfg.format == "csv":
        return _dump_csv(keys, [cells])
    return _dump_text(list(zip(keys, cells)))


def _settings(cfg):
    return QuadratureSettings(abs_tol=cfg.abs_tol)


def cmd_density(symbol: str, cfg: CliConfig) -> str:
    report = density(parse_symbol(symbol), _settings(cfg))
    return _render_record(report.as_dict(), cfg)


def cmd_volume(symbol: str, cfg: CliConfig) -> str:
    s = require_supported(parse_symbol(symbol))
    r = vol5_truncated(s, _settings(cfg))
    return _render_record({"symbol": str(s), "vol5": r.value}, cfg)


def cmd_height(symbol: str, cfg: CliConfig) -> str:
    s = require_supported(parse_symbol(symbol))
    h = optimal_height(invert(schlafli_matrix(s)))
    return _render_record({"symbol": str(s), "height": h}, cfg)


def cmd_table(cfg: CliConfig) -> str:
    reports = [density(parse_symbol(s), _settings(cfg)).as_dict() for s in TABLE_SYMBOLS]
    if cfg.format == "json":
        return _dump_json({
            r["symbol"]: {key: _num(r[key], cfg.digits) for key, _ in TABLE_ROWS}
            for r in reports
        })
    if cfg.format == "csv":
        return _dump_csv(CSV_FIELDS, [
            [r["symbol"]] + [fmt(r[key], cfg.digits) for key in CSV_FIELDS[1:]] for r in reports
        ])
    rows = [[""] + [r["symbol"] for r in reports]]
    rows += [[label] + [fmt(r[key], cfg.digits) for r in reports] for key, label in TABLE_ROWS]
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(row[1:], widths[1:])]
        lines.append("  ".join([first] + rest).rstrip())
    return "\n".join(lines)


def cmd_lobachevsky(omega: float, cfg: CliConfig) -> str:
    value = lobachevsky(omega)
    if cfg.format == "text":
        return fmt(value, cfg.digits)
    return _render_record({"omega": omega, "lobachevsky": value}, cfg)


def cmd_reference_constants(cfg: CliConfig) -> str:
    header = ("n", "symbol", "density", "note")
    if cfg.format == "json":
        return _dump_json({
            sym: {"n": n, "density": float(val), "note": REFERENCE_NOTE}
            for n, sym, val in REFERENCE_CONSTANTS
        })
    rows = [(str(n), sym, val, REFERENCE_NOTE) for n, sym, val in REFERENCE_CONSTANTS]
    if cfg.format == "csv":
        return _dump_csv(header, rows)
    table = [header] + rows
    widths = [max(len(r[i]) for r in table) for i in range(3)]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(r[:3], widths)) + "  " + r[3] for r in table
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=_digits, default=8, help="decimals shown (1-15, default 8)")
    common.add_argument("--tol", type=_tol, default=1e-11, help="quadrature absolute tolerance")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(
        prog="hypack",
        description="Optimal hyperball packings of the 5-dimensional prism tilings [5,3,3,3,3] and [5,3,3,3,4].",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("density", "volume, height, piece volume and packing density"),
        ("volume", "volume of the truncated 5-orthoscheme"),
        ("height", "optimal hyperball height"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("symbol", help='Coxeter symbol, e.g. "[5,3,3,3,3]"')
    sub.add_parser("table", parents=[common], help="reproduce the full result table")
    p = sub.add_parser("lobachevsky", parents=[common], help="Lobachevsky function L(omega)")
    p.add_argument("omega", help="angle in radians; multiples of pi like pi/6 are accepted")
    sub.add_parser("reference-constants", parents=[common], help="cited n=3,4 densities")
    return parser


def run(argv=None) -> str:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(digits=args.digits, abs_tol=args.tol, format=args.format)
    if args.command == "density":
        return cmd_density(args.symbol, cfg)
    if args.command == "volume":
        return cmd_volume(args.symbol, cfg)
    if args.command == "height":
        return cmd_height(args.symbol, cfg)
    if args.command == "table":
        return cmd_table(cfg)
    if args.command == "lobachevsky":
        return cmd_lobachevsky(parse_angle(args.omega), cfg)
    return cmd_reference_constants(cfg)


def main(argv=None) -> int:
    try:
        out = run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (SymbolError, DomainError) as exc:
        print(f"hypack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, GeometryError) as exc:
        print(f"hypack: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    sys.stdout.write(out + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
