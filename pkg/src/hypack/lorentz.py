"""Linear algebra over the Lorentzian form of signature (1, n).

Points of the projective model are represented by nonzero vectors of
R^{n+1}; two vectors that differ by a nonzero factor are the same point.
The form is

    <x, y> = -x0*y0 + x1*y1 + ... + xn*yn

Proper points (inside H^n) have <x, x> < 0, ideal points <x, x> = 0 and
outer points <x, x> > 0.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from hypack.errors import DomainError, GeometryError, NumericalError

IDEAL_TOL = 1e-9


class PointClass(enum.Enum):
    PROPER = "proper"
    IDEAL = "ideal"
    OUTER = "outer"


@dataclass(frozen=True, eq=False)
class LorentzVector:
    """Projective coordinates (x0, x1, ..., xn) of a point of E^{1,n}."""

    coords: np.ndarray

    def __post_init__(self):
        c = np.array(self.coords, dtype=float)
        if c.ndim != 1 or c.size < 2:
            raise DomainError(f"expected a flat vector of length >= 2, got shape {c.shape}")
        if not np.all(np.isfinite(c)):
            raise DomainError("coordinates must be finite")
        if not np.any(c):
            raise DomainError("the zero vector does not represent a projective point")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        """Dimension n of the hyperbolic space (vector length minus one)."""
        return self.coords.size - 1

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coords, dtype=dtype)

    def __repr__(self):
        return f"LorentzVector({self.coords.tolist()})"


def _as_coords(x) -> np.ndarray:
    if isinstance(x, LorentzVector):
        return x.coords
    return np.asarray(x, dtype=float)


def lorentz_product(x, y) -> float:
    """Return -x0*y0 + sum_k xk*yk."""
    a = _as_coords(x)
    b = _as_coords(y)
    if a.shape != b.shape or a.ndim != 1 or a.size < 2:
        raise DomainError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(-a[0] * b[0] + np.dot(a[1:], b[1:]))


def classify_point(x, tol: float = IDEAL_TOL) -> PointClass:
    """Classify a projective point as proper, ideal or outer.

    The point is taken as ideal when |<x, x>| <= tol * |x|^2 (Euclidean
    norm), so the test does not depend on the scale of the representative.
    """
    v = x if isinstance(x, LorentzVector) else LorentzVector(x)
    q = lorentz_product(v, v)
    scale = float(np.dot(v.coords, v.coords))
    if abs(q) <= tol * scale:
        return PointClass.IDEAL
    return PointClass.PROPER if q < 0 else PointClass.OUTER


def acosh_clamped(c: float, tol: float = IDEAL_TOL) -> float:
    """acosh evaluated as log(c + sqrt(c^2 - 1)).

    Arguments in [1 - tol, 1) are clamped to 1; anything smaller means the
    inputs were inconsistent and raises NumericalError.
    """
    if not math.isfinite(c):
        raise NumericalError(f"cosh argument is not finite: {c!r}")
    if c < 1.0:
        if c < 1.0 - tol:
            raise NumericalError(f"cosh argument {c!r} is below 1")
        c = 1.0
    return math.log(c + math.sqrt(c * c - 1.0))


def _upper_sheet(v: LorentzVector) -> np.ndarray:
    c = v.coords
    u = c / math.sqrt(-lorentz_product(c, c))
    return -u if u[0] < 0 else u


def proper_distance(x, y, tol: float = IDEAL_TOL) -> float:
    """Hyperbolic distance (k = 1) between two proper points.

    cosh d = |<x, y>| / sqrt(<x, x><y, y>), so the result does not depend on
    the sign or scale of either representative. The cosh value is checked
    (and clamped near 1) as in `acosh_clamped`, but d itself is taken from
    the half-angle form 2*asinh(|u - v|/2) on the unit hyperboloid, which
    stays accurate for nearly coincident points.
    """
    a = x if isinstance(x, LorentzVector) else LorentzVector(x)
    b = y if isinstance(y, LorentzVector) else LorentzVector(y)
    if a.dim != b.dim:
        raise DomainError(f"dimension mismatch: {a.dim} vs {b.dim}")
    for name, v in (("x", a), ("y", b)):
        if classify_point(v, tol) is not PointClass.PROPER:
            raise GeometryError(f"{name} is not a proper point")
    c = abs(lorentz_product(a, b)) / math.sqrt(lorentz_product(a, a) * lorentz_product(b, b))
    if c < 1.0 - tol:
        raise NumericalError(f"cosh argument {c!r} is below 1")
    u = _upper_sheet(a)
    v = _upper_sheet(b)
    w = u - v
    chord2 = max(lorentz_product(w, w), 0.0)
    return 2.0 * math.asinh(math.sqrt(chord2) / 2.0)
