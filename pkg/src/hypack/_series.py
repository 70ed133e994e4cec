"""Coefficient table for the Clausen-type expansion of the Lobachevsky function.

For 0 < x < 2*pi,

    Cl2(x) = x - x*log(x) + sum_{n>=1} |B_2n| / (2n (2n+1)!) * x^(2n+1)

and L(w) = Cl2(2w) / 2. Both kernel backends read COEFFS from here.
"""
from fractions import Fraction
from math import comb, factorial

# (x/2pi)^2 <= 1/4 on the reduced range, so 30 terms leave a tail below 1e-19.
N_TERMS = 30


def _bernoulli(m):
    b = [Fraction(1)]
    for k in range(1, m + 1):
        b.append(-sum(comb(k + 1, j) * b[j] for j in range(k)) / (k + 1))
    return b


def _coefficients(n_terms):
    b = _bernoulli(2 * n_terms)
    return tuple(
        float(abs(b[2 * n]) / (2 * n * factorial(2 * n + 1)))
        for n in range(1, n_terms + 1)
    )


COEFFS = _coefficients(N_TERMS)
