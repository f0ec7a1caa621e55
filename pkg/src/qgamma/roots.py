"""Exact real-root bounds via Sturm chains over the rationals.

Only integer ceilings of real roots are ever needed, so roots are never
isolated numerically; every decision is a sign evaluation at a rational point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Optional

from .exactmath import UniPoly, exact_divide


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def squarefree_part(p: UniPoly) -> UniPoly:
    g = p.gcd(p.derivative())
    return exact_divide(p, g) if g.degree > 0 else p


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[UniPoly, ...]

    def variations(self, x: Fraction) -> int:
        """Sign changes of the chain at ``x``, zeros skipped."""
        signs = [s for s in (_sign(q(x)) for q in self.polys) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count_in(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in the half-open interval (lo, hi]."""
        return self.variations(lo) - self.variations(hi)


def sturm_chain(p: UniPoly) -> SturmChain:
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    p0 = squarefree_part(p)
    if p0.degree <= 0:
        return SturmChain((p0,))
    chain = [p0, p0.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2].divmod(chain[-1])[1]
        if r.is_zero():
            break
        # rescaling by a positive constant keeps the sign pattern and tames growth
        chain.append(-r / abs(r.lc))
    return SturmChain(tuple(chain))


def cauchy_bound(p: UniPoly) -> int:
    """Integer strictly above the absolute value of every root."""
    lead = abs(p.lc)
    m = max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    return ceil(1 + m)


def count_roots_above(p: UniPoly, M, chain: Optional[SturmChain] = None) -> int:
    """Number of distinct real roots in the open interval (M, +inf)."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.degree <= 0:
        return 0
    chain = chain or sturm_chain(p)
    hi = Fraction(cauchy_bound(p))
    M = Fraction(M)
    if M >= hi:
        return 0
    return chain.count_in(M, hi)


def max_root_ceiling(p: UniPoly) -> Optional[int]:
    """Ceiling of the largest real root, or ``None`` if there is no real root."""
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined largest root")
    if p.degree <= 0:
        return None
    chain = sturm_chain(p)
    hi = cauchy_bound(p)
    lo = -hi
    if count_roots_above(p, lo, chain) == 0:
        return None
    # invariant: some root lies above lo, none lies above hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if count_roots_above(p, mid, chain):
            lo = mid
        else:
            hi = mid
    return hi


def t_ceiling(polys: Iterable[UniPoly]) -> int:
    """Smallest integer at or above 1 and every real root of every polynomial."""
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    best = 1
    for i, p in enumerate(polys):
        if p.is_zero():
            raise ValueError(f"polynomial #{i + 1} is identically zero")
        c = max_root_ceiling(p)
        if c is not None and c > best:
            best = c
    return best
