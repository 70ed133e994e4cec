"""Pure-Python kernels: Lobachevsky function and the Schlafli integrand.

This is the fallback backend. ``_ckernels.pyx`` implements the same
functions with the same operation order.
"""
import math

import numpy as np

from hypack._series import COEFFS
from hypack.errors import DomainError

PI = math.pi
HALF_PI = 0.5 * math.pi
PI_5 = math.pi / 5.0
PI_3 = math.pi / 3.0

# Negative radicands down to -RADICAND_TOL are rounding noise and clamp to 0.
RADICAND_TOL = 1e-12

_REVERSED = COEFFS[::-1]


def _lob_core(r):
    # 0 <= r <= pi/2
    if r == 0.0:
        return 0.0
    x = 2.0 * r
    y = x * x
    p = 0.0
    for c in _REVERSED:
        p = p * y + c
    return 0.5 * (x - x * math.log(x) + x * y * p)


def lobachevsky(w):
    w = float(w)
    if not math.isfinite(w):
        raise DomainError(f"Lobachevsky function needs a finite argument, got {w!r}")
    sign = 1.0
    if w < 0.0:
        sign = -1.0
        w = -w
    r = math.fmod(w, PI)
    if r > HALF_PI:
        return -sign * _lob_core(PI - r)
    return sign * _lob_core(r)


def lobachevsky_many(w):
    w = np.ascontiguousarray(w, dtype=float)
    out = np.empty_like(w)
    flat_in = w.reshape(-1)
    flat_out = out.reshape(-1)
    for i in range(flat_in.size):
        flat_out[i] = lobachevsky(flat_in[i])
    return out


def _vol3(a1, a2, a3):
    s1 = math.sin(a1)
    s3 = math.sin(a3)
    c2 = math.cos(a2)
    rad = c2 * c2 - s1 * s1 * s3 * s3
    if rad < 0.0:
        if rad < -RADICAND_TOL:
            raise DomainError(
                f"angles ({a1!r}, {a2!r}, {a3!r}) do not describe a hyperbolic orthoscheme"
            )
        rad = 0.0
    th = math.atan(math.sqrt(rad) / (math.cos(a1) * math.cos(a3)))
    b2 = HALF_PI - a2
    L = lobachevsky
    return 0.25 * (
        L(a1 + th) - L(a1 - th)
        - L(b2 + th) + L(b2 - th)
        + L(a3 + th) - L(a3 - th)
        + 2.0 * L(HALF_PI - th)
    )


def vol3_orthoscheme(a1, a2, a3):
    a1 = float(a1)
    a2 = float(a2)
    a3 = float(a3)
    for a in (a1, a2, a3):
        if not (0.0 < a < HALF_PI):
            raise DomainError(f"essential angles must lie in (0, pi/2), got {a!r}")
    if a1 + a2 < HALF_PI - RADICAND_TOL or a2 + a3 < HALF_PI - RADICAND_TOL:
        raise DomainError(f"angles ({a1!r}, {a2!r}, {a3!r}) give an orthoscheme with an outer vertex")
    return _vol3(a1, a2, a3)


def _beta(t):
    cot = math.cos(t) / math.sin(t)
    rad = 2.0 - cot * cot
    if rad < 0.0:
        if rad < -RADICAND_TOL:
            raise DomainError(f"2 - cot^2(t) < 0 at t = {t!r}")
        rad = 0.0
    return math.atan(math.sqrt(rad))


def schlafli_integrand_many(t):
    """Vol3 of the tetrahedron [5, 3, beta(t)] at each t."""
    t = np.ascontiguousarray(t, dtype=float)
    out = np.empty_like(t)
    flat_in = t.reshape(-1)
    flat_out = out.reshape(-1)
    for i in range(flat_in.size):
        flat_out[i] = _vol3(PI_5, PI_3, _beta(flat_in[i]))
    return out
