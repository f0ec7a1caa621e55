"""Truncated power series with exact integer coefficients.

Everything here works with Python ints, so overflow is never a concern. The
main product is :func:`gamma_series`, the coefficients of

    prod_{s in S} 1/(1 - q^s) * sum_{j not in [-k, k-1]} (-1)^(j+k) q^(A j^2 + B j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence


class InvalidModuli(ValueError):
    pass


class InvalidQuadForm(ValueError):
    pass


@dataclass(frozen=True)
class ModulusSet:
    """Pairwise coprime positive integers, stored in increasing order."""

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(sorted(int(x) for x in elements))
        if not 3 <= len(elems) <= 5:
            raise InvalidModuli(f"expected 3 to 5 moduli, got {len(elems)}")
        if elems[0] < 1:
            raise InvalidModuli(f"moduli must be positive: {elems[0]}")
        if len(set(elems)) != len(elems):
            raise InvalidModuli(f"duplicate moduli in {list(elems)}")
        for x, y in combinations(elems, 2):
            if gcd(x, y) != 1:
                raise InvalidModuli(f"moduli not pairwise coprime: gcd({x},{y})={gcd(x, y)}")
        object.__setattr__(self, "elements", elems)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def product(self) -> int:
        out = 1
        for s in self.elements:
            out *= s
        return out

    def smallest_three(self) -> "ModulusSet":
        return ModulusSet(self.elements[:3])

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class QuadForm:
    """The exponent polynomials f(j) = A j^2 + B j and g(j) = A j^2 - B j."""

    A: Fraction
    B: Fraction

    def __init__(self, A, B):
        A, B = Fraction(A), Fraction(B)
        if not A > B >= 0:
            raise InvalidQuadForm(f"need A > B >= 0, got A={A}, B={B}")
        if (2 * A).denominator != 1 or (2 * B).denominator != 1 or (A + B).denominator != 1:
            raise InvalidQuadForm(f"A j^2 + B j is not integer valued for A={A}, B={B}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    def f(self, j: int) -> int:
        v = self.A * j * j + self.B * j
        assert v.denominator == 1
        return v.numerator

    def g(self, j: int) -> int:
        v = self.A * j * j - self.B * j
        assert v.denominator == 1
        return v.numerator


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients 0..limit of a power series."""

    coeffs: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def min(self) -> int:
        return min(self.coeffs)

    def negatives(self, start: int = 0) -> list[tuple[int, int]]:
        return [(n, c) for n, c in enumerate(self.coeffs) if n >= start and c < 0]


def _parts_series(parts: Iterable[int], N: int) -> list[int]:
    c = [0] * (N + 1)
    c[0] = 1
    for s in parts:
        for n in range(s, N + 1):
            c[n] += c[n - s]
    return c


def denom_series(S: ModulusSet, N: int) -> TruncSeries:
    """Partition counts p_S(0..N) with parts drawn from S."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return TruncSeries(tuple(_parts_series(S, N)))


def tail_exponents(q: QuadForm, k: int, N: int) -> list[tuple[int, int]]:
    """Signed exponents of the theta tail with j in [-k, k-1] removed, up to q^N.

    Terms with j >= k contribute f(j); terms with j = -m, m >= k+1, contribute
    g(m). Coincident exponents (B = 0) are all kept.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    terms = []
    j = k
    while (e := q.f(j)) <= N:
        terms.append((e, (-1) ** ((j + k) % 2)))
        j += 1
    m = k + 1
    while (e := q.g(m)) <= N:
        terms.append((e, (-1) ** ((m + k) % 2)))
        m += 1
    terms.sort(key=lambda t: t[0])
    return terms


def gamma_series(S: ModulusSet, q: QuadForm, k: int, N: int) -> TruncSeries:
    p = _parts_series(S, N)
    out = [0] * (N + 1)
    for e, sign in tail_exponents(q, k, N):
        for n in range(e, N + 1):
            out[n] += sign * p[n - e]
    return TruncSeries(tuple(out))


@lru_cache(maxsize=None)
def _count(parts: tuple[int, ...], n: int) -> int:
    if not parts:
        return 1 if n == 0 else 0
    head, rest = parts[0], parts[1:]
    return sum(_count(rest, n - t * head) for t in range(n // head + 1))


def partition_count_oracle(S: Sequence[int], n: int) -> int:
    """Count multisets from S summing to n by recursion over the parts.

    Deliberately shares nothing with :func:`denom_series`.
    """
    if n < 0:
        return 0
    return _count(tuple(sorted(set(S), reverse=True)), n)


def residue_product_series(residues: Iterable[int], modulus: int, N: int) -> TruncSeries:
    """Expand prod 1/(1 - q^s) over s <= N with s mod modulus in residues."""
    res = set(residues)
    if modulus < 2 or not res or any(not 1 <= r < modulus for r in res):
        raise ValueError(f"bad residue data {sorted(res)} mod {modulus}")
    parts = [s for s in range(1, N + 1) if s % modulus in res]
    return TruncSeries(tuple(_parts_series(parts, N)))


def multiply(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    N = min(x.limit, y.limit)
    out = [0] * (N + 1)
    for i, a in enumerate(x.coeffs[: N + 1]):
        if a:
            for j in range(N + 1 - i):
                out[i + j] += a * y.coeffs[j]
    return TruncSeries(tuple(out))


def euler_product(N: int) -> TruncSeries:
    """prod_{m=1}^{N} (1 - q^m), truncated at q^N."""
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(1, N + 1):
        for n in range(N, m - 1, -1):
            c[n] -= c[n - m]
    return TruncSeries(tuple(c))


def tail_series(q: QuadForm, k: int, N: int) -> TruncSeries:
    c = [0] * (N + 1)
    for e, sign in tail_exponents(q, k, N):
        c[e] += sign
    return TruncSeries(tuple(c))
