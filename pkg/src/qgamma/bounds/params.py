from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactmath import BiPoly, UniPoly
from ..quasipoly import quasi_polynomial
from ..series import ModulusSet, QuadForm


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class ParamTuple:
    """Every scalar the threshold polynomials depend on.

    ``e`` is the uniform remainder bound; ``d`` exists only for five moduli.
    """

    A: Fraction
    B: Fraction
    k: int
    a: Fraction
    b: Fraction
    c: Fraction
    e: Fraction
    d: Optional[Fraction] = None

    def __post_init__(self):
        for name in ("A", "B", "a", "b", "c", "e", "d"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        if not self.A > self.B >= 0:
            raise InvalidParams(f"need A > B >= 0, got A={self.A}, B={self.B}")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidParams(f"k must be a positive integer, got {self.k!r}")
        if self.a <= 0:
            raise InvalidParams("a must be positive")
        if self.e < 0:
            raise InvalidParams("e must be nonnegative")

    @property
    def size(self) -> int:
        return 4 if self.d is None else 5

    @classmethod
    def from_moduli(cls, S: ModulusSet, q: QuadForm, k: int) -> "ParamTuple":
        qp = quasi_polynomial(S)
        co = qp.coefficients
        return cls(A=q.A, B=q.B, k=k, e=qp.bound_D, **co)

    def f(self, t: UniPoly) -> UniPoly:
        return self.A * t * t + self.B * t

    def g(self, t: UniPoly) -> UniPoly:
        return self.A * t * t - self.B * t

    def F(self) -> UniPoly:
        """The polynomial part a x^3 + b x^2 + c x (or the quartic) in ``x``."""
        if self.d is None:
            return UniPoly((0, self.c, self.b, self.a), "x")
        return UniPoly((0, self.d, self.c, self.b, self.a), "x")


def require_size(size: int, p: ParamTuple) -> None:
    if size not in (4, 5):
        raise InvalidParams(f"size must be 4 or 5, got {size}")
    if p.size != size:
        raise InvalidParams(f"parameter tuple is for size {p.size}, not {size}")


@dataclass(frozen=True)
class CaseBound:
    """Lower bound for gamma(n) on ``lower(l) <= n < upper(l)``."""

    case_id: int
    lower: UniPoly
    upper: UniPoly
    bound_poly: BiPoly

    def interval(self, l: int) -> range:
        return range(int(self.lower(l)), int(self.upper(l)))


@dataclass(frozen=True)
class ThresholdPolys:
    family: str
    polys: tuple[UniPoly, ...]

    @property
    def names(self) -> list[str]:
        return [f"{self.family}{i}" for i in range(1, len(self.polys) + 1)]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def as_dict(self) -> dict[str, UniPoly]:
        return dict(zip(self.names, self.polys))


class BelowRange:
    """Marker returned by :func:`locate_case` when n < f(k)."""

    def __repr__(self):
        return "BelowRange"


BELOW_RANGE = BelowRange()


def locate_case(n: int, q: QuadForm, k: int):
    """Return ``(l, case_id)`` with n inside that case interval, or ``BELOW_RANGE``."""
    if n < q.f(k):
        return BELOW_RANGE
    l = 0
    while n >= q.f(k + 2 * l + 2):
        l += 1
    t = k + 2 * l
    if n < q.g(t + 1):
        return l, 1
    if n < q.f(t + 1):
        return l, 2
    if n < q.g(t + 2):
        return l, 3
    return l, 4
