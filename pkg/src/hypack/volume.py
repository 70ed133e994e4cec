"""Volumes of the [5,3,beta] tetrahedra and of the truncated 5-orthoschemes.

The 5-volume comes from integrating the Schlafli differential:

    Vol5 = 1/4 * int_{alpha}^{2pi/5} Vol3([5, 3, beta(t)]) dt + zeta(3)/3200

with beta(t) = arctan sqrt(2 - cot^2 t). The lower bound alpha is pi/w for
the last Coxeter weight w, i.e. pi/3 for [5,3,3,3,3] and pi/4 for
[5,3,3,3,4]. Vol3 is Lobachevsky's seven-term formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from hypack import _backend
from hypack.coxeter import CoxeterSymbol, require_supported
from hypack.errors import DomainError
from hypack.quadrature import QuadratureSettings, integrate
from hypack.specfun import VOL_S_PI, ZETA3

UPPER_BOUND = 2.0 * math.pi / 5.0
CONSTANT_TERM = ZETA3 / 3200.0
RADICAND_TOL = 1e-12


@dataclass(frozen=True)
class AngleParams:
    t: float
    beta: float
    theta: float

    @classmethod
    def at(cls, t: float) -> "AngleParams":
        b = beta_of_t(t)
        return cls(t, b, theta_of_beta(b))


@dataclass(frozen=True)
class Volume5Result:
    value: float
    integral_part: float
    constant_part: float
    estimated_error: float
    lower_bound: float
    nodes: np.ndarray = field(repr=False, compare=False)
    integrand_values: np.ndarray = field(repr=False, compare=False)


def _clamped_sqrt(rad, what):
    if rad < 0.0:
        if rad < -RADICAND_TOL:
            raise DomainError(f"negative radicand {rad!r} in {what}")
        rad = 0.0
    return math.sqrt(rad)


def beta_of_t(t: float) -> float:
    """beta(t) = arctan sqrt(2 - cot^2 t), defined for cot^2 t <= 2."""
    t = float(t)
    cot = math.cos(t) / math.sin(t)
    return math.atan(_clamped_sqrt(2.0 - cot * cot, "beta(t)"))


def theta_of_beta(beta: float) -> float:
    """theta = arctan( sqrt(1 - 4 sin^2(pi/5) sin^2 beta) / (2 cos(pi/5) cos beta) )."""
    beta = float(beta)
    if not (0.0 < beta < 0.5 * math.pi):
        raise DomainError(f"beta must lie in (0, pi/2), got {beta!r}")
    s = math.sin(math.pi / 5.0) * math.sin(beta)
    num = _clamped_sqrt(1.0 - 4.0 * s * s, "theta(beta)")
    return math.atan(num / (2.0 * math.cos(math.pi / 5.0) * math.cos(beta)))


def vol3_orthoscheme(alpha1: float, alpha2: float, alpha3: float) -> float:
    """Volume of the hyperbolic 3-orthoscheme with essential angles alpha1..3.

    Lobachevsky's formula with tan(theta) =
    sqrt(cos^2 a2 - sin^2 a1 sin^2 a3) / (cos a1 cos a3). The value drops to
    zero where the radicand vanishes (the Euclidean limit). Angles with
    a1 + a2 < pi/2 or a2 + a3 < pi/2 put a vertex outside H^3 and raise
    DomainError.
    """
    return _backend.vol3_orthoscheme(alpha1, alpha2, alpha3)


def schlafli_integrand(t):
    """Vol3([5, 3, beta(t)]); accepts a scalar or an array of t."""
    arr = np.asarray(t, dtype=float)
    out = _backend.schlafli_integrand_many(np.atleast_1d(arr))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def lower_bound(symbol: CoxeterSymbol) -> float:
    """Lower integration bound pi/w, w the last Coxeter weight."""
    require_supported(symbol)
    return math.pi / symbol.weights[-1]


def vol5_from_bound(alpha: float, settings: QuadratureSettings | None = None) -> Volume5Result:
    """Truncated 5-orthoscheme volume with the integral started at ``alpha``."""
    settings = settings or QuadratureSettings()
    r = integrate(_backend.schlafli_integrand_many, alpha, UPPER_BOUND, settings)
    integral_part = 0.25 * r.value
    return Volume5Result(
        value=integral_part + CONSTANT_TERM,
        integral_part=integral_part,
        constant_part=CONSTANT_TERM,
        estimated_error=0.25 * r.error,
        lower_bound=float(alpha),
        nodes=r.nodes,
        integrand_values=r.values,
    )


def vol5_truncated(symbol: CoxeterSymbol, settings: QuadratureSettings | None = None) -> Volume5Result:
    """Volume of the complete (degree-1) orthoscheme of a supported symbol.

    Raises
    ------
    UnsupportedSymbolError
        For anything but [5,3,3,3,3], [5,3,3,3,4] and the 3^{1,1} alias.
    QuadratureError
        If the quadrature does not converge; carries the best estimate.
    """
    return vol5_from_bound(lower_bound(symbol), settings)


def vol4_base() -> float:
    """Volume pi^2/10800 of the characteristic simplex [5,3,3,3]."""
    return VOL_S_PI
