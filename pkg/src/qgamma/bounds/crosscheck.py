"""Compare the derived threshold polynomials with the entered closed forms."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exactmath import UniPoly, format_rational
from .closed_forms import appendix_polys
from .derive import derived_family
from .params import ParamTuple, ThresholdPolys


@dataclass
class PolyVerdict:
    name: str
    equal: bool
    difference: UniPoly

    def to_json(self) -> dict:
        out = {"name": self.name, "equal": self.equal}
        if not self.equal:
            out["difference_degree"] = self.difference.degree
            out["difference"] = [format_rational(c) for c in self.difference.coeffs]
        return out


@dataclass
class CrosscheckReport:
    size: int
    params: ParamTuple
    verdicts: list[PolyVerdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.equal for v in self.verdicts)

    @property
    def mismatches(self) -> list[str]:
        return [v.name for v in self.verdicts if not v.equal]

    def to_json(self) -> dict:
        p = self.params
        params = {
            name: format_rational(getattr(p, name))
            for name in ("A", "B", "a", "b", "c", "d", "e")
            if getattr(p, name) is not None
        }
        params["k"] = p.k
        return {
            "size": self.size,
            "params": params,
            "passed": self.passed,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def crosscheck(
    size: int, p: ParamTuple, transcribed: Optional[ThresholdPolys] = None
) -> CrosscheckReport:
    """Polynomial-by-polynomial equality between both construction routes.

    ``transcribed`` overrides the closed forms (used for fault injection).
    """
    derived = derived_family(size, p)
    entered = transcribed if transcribed is not None else appendix_polys(size, p)
    report = CrosscheckReport(size, p)
    for name, x, y in zip(derived.names, derived, entered):
        diff = x - y
        report.verdicts.append(PolyVerdict(name, diff.is_zero(), diff))
    return report


def _rand_rational(rng: random.Random, lo: int, hi: int, den: int = 12) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def random_params(size: int, rng: random.Random) -> ParamTuple:
    """A random tuple with a > 0, A > B >= 0, k in 1..6 and free b, c, d, e."""
    B = Fraction(rng.randint(0, 12), rng.randint(1, 4))
    A = B + Fraction(rng.randint(1, 24), rng.randint(1, 4))
    a = Fraction(rng.randint(1, 50), rng.randint(1, 500))
    return ParamTuple(
        A=A,
        B=B,
        k=rng.randint(1, 6),
        a=a,
        b=_rand_rational(rng, -5, 5),
        c=_rand_rational(rng, -5, 5),
        d=_rand_rational(rng, -5, 5) if size == 5 else None,
        e=abs(_rand_rational(rng, 0, 5)),
    )


def random_crosscheck(size: int, trials: int, seed: int) -> list[CrosscheckReport]:
    rng = random.Random(seed)
    return [crosscheck(size, random_params(size, rng)) for _ in range(trials)]
