"""Coxeter symbols, Coxeter-Schlafli matrices and their inverses.

A linear Coxeter diagram with weights (w1, ..., wn) describes an
orthoscheme in H^n bounded by hyperplanes H^0, ..., H^n. Neighbouring
hyperplanes meet at angle pi/w, all others are perpendicular, so the Gram
matrix of unit normals is tridiagonal with unit diagonal and superdiagonal
-cos(pi/w). Its inverse h_ij holds the vertex data: h_ii < 0 for a proper
vertex, = 0 for an ideal one and > 0 for an outer vertex.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from hypack.errors import DomainError, NumericalError, SymbolError, UnsupportedSymbolError
from hypack.lorentz import LorentzVector, PointClass

SYMBOL_RE = re.compile(r"\[\s*\d+(\s*,\s*\d+)*(\s*,\s*3\^\{1,1\})?\s*\]")
_ALIAS_RE = re.compile(r",\s*3\^\{1,1\}\s*\]$")
ALIAS_TOKEN = "3^{1,1}"

#: Symbols with a packing-density computation, keyed to their lower
#: integration bound in the 5-volume formula.
SUPPORTED = ((5, 3, 3, 3, 3), (5, 3, 3, 3, 4))


@dataclass(frozen=True)
class CoxeterSymbol:
    """Weights of a linear Coxeter diagram.

    ``alias`` marks the branched symbol [5,3,3,3,3^{1,1}], which is carried
    by the weights (5,3,3,3,3) and only changes how the symbol prints.
    """

    weights: tuple[int, ...]
    alias: bool = False

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise SymbolError("a Coxeter symbol needs at least one weight")
        if any(x < 3 for x in w):
            raise SymbolError(f"weights must be integers >= 3, got {list(w)}")
        if self.alias and w[-1] != 3:
            raise SymbolError("the 3^{1,1} branch replaces a final weight 3")
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def order(self) -> int:
        return len(self.weights) + 1

    def __str__(self):
        if self.alias:
            return "[" + ",".join(map(str, self.weights[:-1])) + "," + ALIAS_TOKEN + "]"
        return "[" + ",".join(map(str, self.weights)) + "]"


def parse_symbol(text: str) -> CoxeterSymbol:
    """Parse ``"[5,3,3,3,3]"`` or the alias ``"[5,3,3,3,3^{1,1}]"``.

    >>> parse_symbol("[5, 3, 3, 3, 4]").weights
    (5, 3, 3, 3, 4)
    """
    if not isinstance(text, str) or SYMBOL_RE.fullmatch(text) is None:
        raise SymbolError(f"malformed Coxeter symbol: {text!r}")
    alias = _ALIAS_RE.search(text) is not None
    body = _ALIAS_RE.sub("]", text) if alias else text
    weights = [int(tok) for tok in body.strip()[1:-1].split(",")]
    if alias:
        weights.append(3)
    return CoxeterSymbol(tuple(weights), alias=alias)


def require_supported(symbol: CoxeterSymbol) -> CoxeterSymbol:
    """Raise UnsupportedSymbolError unless the symbol has a density computation."""
    if symbol.dim != 5:
        raise UnsupportedSymbolError(
            f"unsupported symbol {symbol}: unsupported dimension {symbol.dim} (need 5)"
        )
    if symbol.weights not in SUPPORTED:
        raise UnsupportedSymbolError(
            f"unsupported symbol {symbol}: expected one of [5,3,3,3,3], [5,3,3,3,4], "
            f"[5,3,3,3,3^{{1,1}}]"
        )
    return symbol


def schlafli_matrix(symbol: CoxeterSymbol) -> np.ndarray:
    """Coxeter-Schlafli matrix of the orthoscheme (read-only array)."""
    n = symbol.order
    m = np.eye(n)
    for i, w in enumerate(symbol.weights):
        m[i, i + 1] = m[i + 1, i] = -math.cos(math.pi / w)
    m.setflags(write=False)
    return m


def signature(matrix, tol: float = 1e-12) -> tuple[int, int, int]:
    """Count (positive, negative, zero) eigenvalues; |lambda| <= tol counts as zero."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or not np.allclose(m, m.T, rtol=0, atol=1e-14):
        raise DomainError("signature needs a symmetric square matrix")
    ev = np.linalg.eigvalsh(m)
    pos = int(np.sum(ev > tol))
    neg = int(np.sum(ev < -tol))
    return pos, neg, len(ev) - pos - neg


@dataclass(frozen=True, eq=False)
class GramInverse:
    """Inverse h_ij of a Coxeter-Schlafli matrix.

    ``form`` is the matrix that was inverted and ``residual`` the max-norm
    of ``form @ entries - I``.
    """

    entries: np.ndarray
    residual: float
    form: np.ndarray

    def __getitem__(self, idx):
        return self.entries[idx]

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def vertex_classes(self, tol: float = 1e-12) -> list[PointClass]:
        scale = float(np.max(np.abs(np.diag(self.entries))))
        out = []
        for h in np.diag(self.entries):
            if abs(h) <= tol * scale:
                out.append(PointClass.IDEAL)
            else:
                out.append(PointClass.PROPER if h < 0 else PointClass.OUTER)
        return out

    def realize(self) -> tuple[np.ndarray, np.ndarray]:
        """Concrete normals and vertices in E^{1,n}.

        Returns ``(normals, vertices)`` as arrays whose rows b^i, a_i satisfy
        <b^i, b^j> = c_ij, <a_i, a_j> = h_ij and <a_i, b^j> = delta_ij. Built
        from the eigendecomposition C = Q diag(lam) Q^T, which needs exactly
        one negative eigenvalue.
        """
        lam, q = np.linalg.eigh(self.form)
        if not (lam[0] < 0 < lam[1]):
            raise NumericalError("form is not of signature (1, n); no Lorentzian realization")
        root = np.sqrt(np.abs(lam))
        signs = np.ones_like(lam)
        signs[0] = -1.0
        normals = q * root
        vertices = (q / root) * signs
        return normals, vertices

    def vertex(self, i: int) -> LorentzVector:
        return LorentzVector(self.realize()[1][i])


def invert(matrix) -> GramInverse:
    """Invert a Coxeter-Schlafli matrix by LU with partial pivoting.

    The result is symmetrised as (H + H^T)/2.

    Raises
    ------
    NumericalError
        If the matrix is singular or too ill-conditioned to invert.
    """
    c = np.array(matrix, dtype=float)
    n = c.shape[0]
    try:
        h = np.linalg.solve(c, np.eye(n))
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular Coxeter-Schlafli matrix (degenerate scheme)") from exc
    if not np.all(np.isfinite(h)) or np.linalg.cond(c) > 1e12:
        raise NumericalError("singular Coxeter-Schlafli matrix (degenerate scheme)")
    h = 0.5 * (h + h.T)
    residual = float(np.max(np.abs(c @ h - np.eye(n))))
    h.setflags(write=False)
    c.setflags(write=False)
    return GramInverse(h, residual, c)


@dataclass(frozen=True)
class EdgeRelation:
    """Relative position of two bounding hyperplanes.

    ``kind`` is one of "perpendicular", "intersecting", "parallel",
    "divergent"; ``value`` is the angle (intersecting) or the length of the
    common perpendicular (divergent), otherwise None.
    """

    kind: str
    value: float | None = None


def edge_relation(g: float, tol: float = 1e-12) -> EdgeRelation:
    """Classify two hyperplanes from their Gram entry g = <b^i, b^j>."""
    g = float(g)
    if not math.isfinite(g):
        raise DomainError(f"Gram entry must be finite, got {g!r}")
    if g > tol:
        raise DomainError(f"positive Gram entry {g!r} violates the acute-angle convention")
    if g >= -tol:
        return EdgeRelation("perpendicular")
    if abs(g + 1.0) <= tol:
        return EdgeRelation("parallel")
    if g > -1.0:
        return EdgeRelation("intersecting", math.acos(-g))
    return EdgeRelation("divergent", math.acosh(-g))
