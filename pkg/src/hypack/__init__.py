"""Optimal hyperball packing densities of hyperbolic 5-dimensional prism tilings.

The top-level namespace re-exports the main entry points::

    >>> from hypack import density, parse_symbol
    >>> round(density(parse_symbol("[5,3,3,3,3]")).density, 6)
    0.505145
"""
from hypack._backend import BACKEND
from hypack.coxeter import CoxeterSymbol, GramInverse, invert, parse_symbol, schlafli_matrix, signature
from hypack.errors import (
    DomainError,
    GeometryError,
    HypackError,
    NumericalError,
    QuadratureError,
    SymbolError,
    UnsupportedSymbolError,
)
from hypack.hyperball import PackingReport, density, footpoint, optimal_height, piece_volume
from hypack.lorentz import LorentzVector, PointClass, classify_point, lorentz_product, proper_distance
from hypack.quadrature import QuadratureSettings
from hypack.specfun import ZETA3, lobachevsky, zeta3
from hypack.volume import vol3_orthoscheme, vol4_base, vol5_truncated

__version__ = "0.1.0"
