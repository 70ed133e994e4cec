"""Exit criteria for the package.

Each criterion is one test. Results are printed as one PASS/FAIL line per
criterion in the pytest terminal summary, or directly when this file is run
as a script::

    python tests/test_acceptance.py
"""
import contextlib
import io
import json
import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402
from hypack.cli import main  # noqa: E402
from hypack.coxeter import invert, parse_symbol, schlafli_matrix, signature  # noqa: E402
from hypack.hyperball import density, footpoint, optimal_height, piece_volume  # noqa: E402
from hypack.lorentz import proper_distance  # noqa: E402
from hypack.quadrature import QuadratureSettings  # noqa: E402
from hypack.specfun import lobachevsky, lobachevsky_array  # noqa: E402
from hypack.volume import UPPER_BOUND, schlafli_integrand, vol4_base, vol5_truncated  # noqa: E402

RESULTS = []

T0 = "[5,3,3,3,3]"
T2 = "[5,3,3,3,4]"
PUBLISHED_TABLE = {
    T0: {"vol5": 0.00076730, "height": 0.38359861, "piece_volume": 0.00038760, "density": 0.50514481},
    T2: {"vol5": 0.00198469, "height": 0.53063753, "piece_volume": 0.00059001, "density": 0.29727979},
}


def record(cid, ok, detail):
    RESULTS.append((cid, bool(ok), detail))
    assert ok, f"{cid}: {detail}"


def _cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    assert code == 0
    return json.loads(buf.getvalue())


def test_c1_table_reproduction():
    start = time.perf_counter()
    data = _cli_json("table", "--format", "json", "--digits", "15")
    elapsed = time.perf_counter() - start
    worst = max(abs(data[s][k] - v) for s, cells in PUBLISHED_TABLE.items() for k, v in cells.items())
    record("C1 table reproduction", worst <= 1e-6 and elapsed < 5.0,
           f"8 cells, max |diff| = {worst:.2e} (tol 1e-6), runtime {elapsed:.2f}s (< 5s)")


def test_c2_first_table_n5_row():
    d = density(parse_symbol(T0)).density
    record("C2 n=5 known maximal density", abs(d - 0.50514481) <= 1e-6,
           f"delta([5,3,3,3,3]) = {d:.10f}, |diff| = {abs(d - 0.50514481):.2e} (tol 1e-6)")


def test_c3_alias_bit_exact():
    a = density(parse_symbol("[5,3,3,3,3^{1,1}]"))
    b = density(parse_symbol(T0))
    same = (a.vol5, a.height, a.piece_volume, a.density) == (b.vol5, b.height, b.piece_volume, b.density)
    record("C3 3^{1,1} alias", same, f"alias density {a.density!r} vs {b.density!r} (bit-exact)")


def test_c4_internal_closure():
    worst = 0.0
    for s in (T0, T2):
        r = density(parse_symbol(s))
        worst = max(worst, abs(piece_volume(math.pi**2 / 10800, r.height, 1.0) / r.vol5 - r.density))
    record("C4 internal closure", worst <= 1e-9, f"max |piece/vol5 - density| = {worst:.2e} (tol 1e-9)")


def test_c5_height_cross_check():
    worst = 0.0
    for s in (T0, T2):
        H = invert(schlafli_matrix(parse_symbol(s)))
        worst = max(worst, abs(optimal_height(H) - proper_distance(footpoint(H, 4, 5), H.vertex(4))))
    record("C5 height cross-check", worst <= 1e-10, f"max |closed form - footpoint distance| = {worst:.2e} (tol 1e-10)")


def test_c6_base_volume():
    v = vol4_base()
    resid = abs(10800 * v - math.pi**2)
    ok = v == math.pi**2 / 10800 and resid <= 4 * np.finfo(float).eps * math.pi**2 and f"{v:.8f}" == "0.00091385"
    record("C6 base volume", ok, f"vol4_base = {v:.8f}, |10800 v - pi^2| = {resid:.1e}")


def test_c7_lobachevsky_suite():
    rng = np.random.default_rng(2024)
    w = rng.uniform(0, 10, 1000)
    odd = all(lobachevsky(-x) == -lobachevsky(x) for x in w)
    per = max(abs(lobachevsky(x + math.pi) - lobachevsky(x)) for x in w)
    u = rng.uniform(0, math.pi / 2, 1000)
    dup = max(abs(lobachevsky(2 * x) - 2 * lobachevsky(x) + 2 * lobachevsky(math.pi / 2 - x)) for x in u)
    q = rng.uniform(0, math.pi, 100)
    quad_err = max(abs(lobachevsky(x) - oracles.lobachevsky_quad(x)) for x in q)
    grid = np.linspace(0, math.pi, 100001)
    i = int(np.argmax(lobachevsky_array(grid)))
    fine = np.linspace(grid[i] - grid[1], grid[i] + grid[1], 100001)
    peak = fine[int(np.argmax(lobachevsky_array(fine)))]
    ok = odd and per <= 1e-12 and dup <= 1e-11 and quad_err <= 1e-10 and abs(peak - math.pi / 6) <= 1e-6
    record("C7 Lobachevsky suite", ok,
           f"odd exact={odd}, period {per:.1e}, duplication {dup:.1e}, oracle {quad_err:.1e}, "
           f"argmax - pi/6 = {peak - math.pi / 6:.1e}")


def test_c8_matrix_suite():
    parts = []
    ok = True
    for s in (T0, T2):
        c = schlafli_matrix(parse_symbol(s))
        H = invert(c)
        resid = float(np.max(np.abs(c @ H.entries - np.eye(6))))
        signs = "".join("-" if h < 0 else "+" for h in np.diag(H.entries))
        sig = signature(c)
        ok &= resid <= 1e-10 and signs == "-----+" and sig[1] == 1
        parts.append(f"{s}: resid {resid:.1e}, signs {signs}, signature {sig}")
    record("C8 matrix suite", ok, "; ".join(parts))


def test_c9_quadrature_robustness():
    parts = []
    ok = True
    for s in (T0, T2):
        sym = parse_symbol(s)
        a = vol5_truncated(sym, QuadratureSettings(abs_tol=1e-10))
        b = vol5_truncated(sym, QuadratureSettings(abs_tol=5e-11))
        ends = schlafli_integrand(np.array([b.lower_bound, UPPER_BOUND]))
        vals = np.concatenate([b.integrand_values, ends])
        good = bool(np.all(np.isfinite(vals)) and np.all(vals > 0))
        ok &= abs(a.value - b.value) <= 1e-10 and good
        parts.append(f"{s}: |dV| {abs(a.value - b.value):.1e}, {vals.size} nodes finite/positive={good}")
    record("C9 quadrature robustness", ok, "; ".join(parts))


@pytest.mark.skip(reason="global optimality conjecture is not checkable; replaced by C1-C9")
def test_c10_conjecture_excluded():
    pass


def format_results():
    lines = [f"[{'PASS' if ok else 'FAIL'}] {cid}: {detail}" for cid, ok, detail in RESULTS]
    lines.append("[EXCLUDED] C10 global optimality conjecture: not checkable at any scale")
    return lines


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn) and name != "test_c10_conjecture_excluded":
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(format_results()))
    sys.exit(1 if failed else 0)
