"""Optimal hyperball height, hyperball piece volume and packing density."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hypack.coxeter import CoxeterSymbol, GramInverse, invert, require_supported, schlafli_matrix
from hypack.errors import DomainError, GeometryError, NumericalError
from hypack.lorentz import LorentzVector, acosh_clamped
from hypack.quadrature import QuadratureSettings
from hypack.volume import vol4_base, vol5_truncated

PROPER_VERTEX = 4
OUTER_VERTEX = 5


def footpoint(H: GramInverse, proper_idx: int = PROPER_VERTEX, outer_idx: int = OUTER_VERTEX) -> LorentzVector:
    """Foot of the perpendicular from a proper vertex to the polar of an outer one.

    p = a_p * h_oo - a_o * h_po, which satisfies <p, a_o> = 0.
    """
    h_pp = H[proper_idx, proper_idx]
    h_oo = H[outer_idx, outer_idx]
    if not h_pp < 0:
        raise GeometryError(f"vertex {proper_idx} is not proper (h = {h_pp!r})")
    if not h_oo > 0:
        raise GeometryError(f"vertex {outer_idx} is not outer (h = {h_oo!r})")
    vertices = H.realize()[1]
    p = vertices[proper_idx] * h_oo - vertices[outer_idx] * H[proper_idx, outer_idx]
    return LorentzVector(p)


def optimal_height(H: GramInverse, proper_idx: int = PROPER_VERTEX, outer_idx: int = OUTER_VERTEX) -> float:
    """Distance from the proper vertex to the polar hyperplane of the outer vertex.

    cosh h = sqrt((h_pp h_oo - h_po^2) / (h_pp h_oo)).
    """
    h_pp = H[proper_idx, proper_idx]
    h_oo = H[outer_idx, outer_idx]
    h_po = H[proper_idx, outer_idx]
    if not (h_pp < 0 and h_oo > 0):
        raise GeometryError(
            f"need a proper vertex {proper_idx} and an outer vertex {outer_idx}, "
            f"got h_pp={h_pp!r}, h_oo={h_oo!r}"
        )
    ratio = (h_pp * h_oo - h_po * h_po) / (h_pp * h_oo)
    if ratio < 0:
        raise NumericalError(f"negative radicand {ratio!r} in the height formula")
    return acosh_clamped(math.sqrt(ratio))


def piece_volume(base_volume: float, h: float, k: float = 1.0) -> float:
    """Volume of the hyperball piece of height h over a 4-polytope of volume base_volume.

    (1/16) A k (sinh(4h/k)/2 + 4 sinh(2h/k)) + 3 h A / 8
    """
    if not base_volume > 0:
        raise DomainError(f"base volume must be positive, got {base_volume!r}")
    if not h >= 0:
        raise DomainError(f"height must be non-negative, got {h!r}")
    if not k > 0:
        raise DomainError(f"k must be positive, got {k!r}")
    return base_volume * k * (0.5 * math.sinh(4.0 * h / k) + 4.0 * math.sinh(2.0 * h / k)) / 16.0 \
        + 3.0 * h * base_volume / 8.0


@dataclass(frozen=True)
class HyperballPiece:
    height: float
    base_volume: float
    k: float = 1.0

    @property
    def piece_volume(self) -> float:
        return piece_volume(self.base_volume, self.height, self.k)


@dataclass(frozen=True)
class PackingReport:
    symbol: CoxeterSymbol
    vol5: float
    height: float
    piece_volume: float
    density: float
    vol5_error: float = 0.0

    @property
    def label(self) -> str:
        return str(self.symbol)

    def as_dict(self) -> dict:
        return {
            "symbol": self.label,
            "vol5": self.vol5,
            "height": self.height,
            "piece_volume": self.piece_volume,
            "density": self.density,
        }


def density(symbol: CoxeterSymbol, settings: QuadratureSettings | None = None) -> PackingReport:
    """Optimal hyperball packing density of the prism tiling for ``symbol``.

    The alias [5,3,3,3,3^{1,1}] runs the [5,3,3,3,3] computation and keeps
    its own label.
    """
    require_supported(symbol)
    H = invert(schlafli_matrix(symbol))
    h = optimal_height(H)
    piece = piece_volume(vol4_base(), h, 1.0)
    v5 = vol5_truncated(symbol, settings)
    d = piece / v5.value
    if not (0.0 < d < 1.0):
        raise NumericalError(f"density {d!r} outside (0, 1)")
    return PackingReport(symbol, v5.value, h, piece, d, v5.estimated_error)
