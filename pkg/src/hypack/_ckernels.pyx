# cython: language_level=3
"""Compiled kernels; same functions and operation order as ``_pykernels``."""
import numpy as np

from libc.math cimport atan, cos, fmod, isfinite, log, sin, sqrt

from hypack._series import COEFFS
from hypack.errors import DomainError

cdef double PI = 3.141592653589793
cdef double HALF_PI = 0.5 * 3.141592653589793
cdef double PI_5 = 3.141592653589793 / 5.0
cdef double PI_3 = 3.141592653589793 / 3.0
cdef double RADICAND_TOL = 1e-12

cdef enum:
    MAX_TERMS = 64
cdef int n_terms = len(COEFFS)
cdef double reversed_coeffs[MAX_TERMS]

if n_terms > MAX_TERMS:
    raise ImportError("coefficient table too long for the compiled kernel")
for _i, _c in enumerate(COEFFS[::-1]):
    reversed_coeffs[_i] = _c


cdef inline double _lob_core(double r) noexcept nogil:
    cdef double x, y, p
    cdef int i
    if r == 0.0:
        return 0.0
    x = 2.0 * r
    y = x * x
    p = 0.0
    for i in range(n_terms):
        p = p * y + reversed_coeffs[i]
    return 0.5 * (x - x * log(x) + x * y * p)


cdef inline double _lob(double w) noexcept nogil:
    cdef double sign = 1.0
    cdef double r
    if w < 0.0:
        sign = -1.0
        w = -w
    r = fmod(w, PI)
    if r > HALF_PI:
        return -sign * _lob_core(PI - r)
    return sign * _lob_core(r)


def lobachevsky(w):
    cdef double x = w
    if not isfinite(x):
        raise DomainError(f"Lobachevsky function needs a finite argument, got {x!r}")
    return _lob(x)


def lobachevsky_many(w):
    arr = np.ascontiguousarray(w, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("Lobachevsky function needs finite arguments")
    out = np.empty_like(arr)
    cdef double[::1] src = arr.reshape(-1)
    cdef double[::1] dst = out.reshape(-1)
    cdef Py_ssize_t i
    with nogil:
        for i in range(src.shape[0]):
            dst[i] = _lob(src[i])
    return out


cdef int _vol3(double a1, double a2, double a3, double *out) noexcept nogil:
    cdef double s1 = sin(a1)
    cdef double s3 = sin(a3)
    cdef double c2 = cos(a2)
    cdef double rad = c2 * c2 - s1 * s1 * s3 * s3
    cdef double th, b2
    if rad < 0.0:
        if rad < -RADICAND_TOL:
            return -1
        rad = 0.0
    th = atan(sqrt(rad) / (cos(a1) * cos(a3)))
    b2 = HALF_PI - a2
    out[0] = 0.25 * (
        _lob(a1 + th) - _lob(a1 - th)
        - _lob(b2 + th) + _lob(b2 - th)
        + _lob(a3 + th) - _lob(a3 - th)
        + 2.0 * _lob(HALF_PI - th)
    )
    return 0


def vol3_orthoscheme(a1, a2, a3):
    cdef double x1 = a1, x2 = a2, x3 = a3
    cdef double out
    for a in (x1, x2, x3):
        if not (0.0 < a < HALF_PI):
            raise DomainError(f"essential angles must lie in (0, pi/2), got {a!r}")
    if x1 + x2 < HALF_PI - RADICAND_TOL or x2 + x3 < HALF_PI - RADICAND_TOL:
        raise DomainError(f"angles ({x1!r}, {x2!r}, {x3!r}) give an orthoscheme with an outer vertex")
    if _vol3(x1, x2, x3, &out) != 0:
        raise DomainError(
            f"angles ({x1!r}, {x2!r}, {x3!r}) do not describe a hyperbolic orthoscheme"
        )
    return out


cdef int _beta(double t, double *out) noexcept nogil:
    cdef double cot = cos(t) / sin(t)
    cdef double rad = 2.0 - cot * cot
    if rad < 0.0:
        if rad < -RADICAND_TOL:
            return -1
        rad = 0.0
    out[0] = atan(sqrt(rad))
    return 0


def schlafli_integrand_many(t):
    """Vol3 of the tetrahedron [5, 3, beta(t)] at each t."""
    arr = np.ascontiguousarray(t, dtype=float)
    out = np.empty_like(arr)
    cdef double[::1] src = arr.reshape(-1)
    cdef double[::1] dst = out.reshape(-1)
    cdef Py_ssize_t i
    cdef Py_ssize_t bad = -1
    cdef int status = 0
    cdef double b
    with nogil:
        for i in range(src.shape[0]):
            if _beta(src[i], &b) != 0:
                bad = i
                break
            if _vol3(PI_5, PI_3, b, &dst[i]) != 0:
                bad = i
                break
    if bad >= 0:
        raise DomainError(f"Schlafli integrand undefined at t = {src[bad]!r}")
    return out
