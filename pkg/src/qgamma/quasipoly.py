"""Quasi-polynomial form of p_S(n) for four or five pairwise coprime moduli.

p_S(n) = F(n) + r(n mod P) with P the product of the moduli, where the
polynomial part F has closed-form coefficients and r is a periodic remainder.
The uniform bound on |r| (the smallest one) is the constant ``e`` of the
threshold polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

from .exactmath import UniPoly
from .series import ModulusSet, denom_series


class UnsupportedSize(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    pass


def _check(S: ModulusSet) -> None:
    if len(S) not in (4, 5):
        raise UnsupportedSize(f"only 4 or 5 moduli are supported, got {len(S)}")


def lemma_coeffs(S: ModulusSet) -> UniPoly:
    """Polynomial part F of p_S as a polynomial in n (zero constant term)."""
    _check(S)
    y = S.elements
    P = S.product
    s1 = sum(y)
    s2 = sum(v * v for v in y)
    e2 = sum(u * v for u, v in combinations(y, 2))
    if len(y) == 4:
        a = Fraction(1, 6 * P)
        b = Fraction(s1, 4 * P)
        c = Fraction(s2 + 3 * e2, 12 * P)
        return UniPoly((0, c, b, a), "n")
    a = Fraction(1, 24 * P)
    b = Fraction(s1, 12 * P)
    c = Fraction(s2, 24 * P) + Fraction(e2, 8 * P)
    d = Fraction(s1 * e2, 24 * P)
    return UniPoly((0, d, c, b, a), "n")


def _remainders(F: UniPoly, counts, count: int) -> list[Fraction]:
    # F(n) evaluated over a common denominator keeps the loop in integers
    den = lcm(*(c.denominator for c in F.coeffs))
    ints = [int(c * den) for c in F.coeffs]
    out = []
    for n in range(count):
        acc = 0
        for c in reversed(ints):
            acc = acc * n + c
        out.append(Fraction(den * counts[n] - acc, den))
    return out


def periodic_remainder(S: ModulusSet) -> tuple[int, tuple[Fraction, ...]]:
    """One period of p_S(n) - F(n), checked against a second period."""
    F = lemma_coeffs(S)
    P = S.product
    counts = denom_series(S, 2 * P - 1)
    r = _remainders(F, counts, 2 * P)
    if r[:P] != r[P:]:
        bad = next(i for i in range(P) if r[i] != r[P + i])
        raise InternalInconsistency(f"remainder of {S} not periodic at n={bad}")
    return P, tuple(r[:P])


def bound_D(S: ModulusSet) -> Fraction:
    return quasi_polynomial(S).bound_D


@dataclass(frozen=True)
class QuasiPolynomial:
    moduli: ModulusSet
    polypart: UniPoly
    period: int
    remainder: tuple[Fraction, ...]
    bound_D: Fraction

    def __call__(self, n: int) -> Fraction:
        return self.polypart(n) + self.remainder[n % self.period]

    @property
    def coefficients(self) -> dict[str, Fraction]:
        """The named coefficients a, b, c (and d for five moduli)."""
        names = "abcd"
        top = self.polypart.degree
        return {names[i]: self.polypart.coeff(top - i) for i in range(top)}


@lru_cache(maxsize=None)
def quasi_polynomial(S: ModulusSet) -> QuasiPolynomial:
    F = lemma_coeffs(S)
    P, r = periodic_remainder(S)
    return QuasiPolynomial(S, F, P, r, max(abs(x) for x in r))
