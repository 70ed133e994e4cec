"""Lobachevsky function and the constants used by the volume formulas."""
import math

import numpy as np

from hypack import _backend
from hypack.errors import DomainError

#: Apery's constant zeta(3) = sum 1/k^3, to full double precision.
ZETA3 = 1.2020569031595942

#: Volume of the characteristic 4-simplex [5,3,3,3] of the mid-hyperplane.
VOL_S_PI = math.pi ** 2 / 10800.0


def lobachevsky(omega):
    r"""Lobachevsky's function

    .. math:: L(\omega) = -\int_0^\omega \log|2 \sin t|\,dt

    evaluated through the Clausen series after reducing the argument to
    [-pi/2, pi/2] with oddness and pi-periodicity. Absolute error is a few
    units of 1e-16 for moderate arguments.

    Parameters
    ----------
    omega : float
        Angle in radians. Must be finite.

    Raises
    ------
    DomainError
        If ``omega`` is nan or infinite.
    """
    try:
        w = float(omega)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a real number: {omega!r}") from exc
    return _backend.lobachevsky(w)


def lobachevsky_array(omega):
    """Vectorised `lobachevsky`; returns an array of the input's shape."""
    arr = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("Lobachevsky function needs finite arguments")
    return _backend.lobachevsky_many(arr)


def zeta3():
    """Apery's constant zeta(3)."""
    return ZETA3
