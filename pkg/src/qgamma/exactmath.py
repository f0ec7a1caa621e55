"""Exact rational polynomial algebra.

Scalars are :class:`fractions.Fraction` throughout (always reduced, positive
denominator). Polynomials are dense and immutable; the zero polynomial has an
empty coefficient tuple so that ``degree`` is total (it returns -1 for zero).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "UniPoly",
    "BiPoly",
    "RatFunc",
    "NonDivisible",
    "VariableMismatch",
    "faulhaber_sum",
    "sum_over_index",
    "exact_divide",
    "parse_rational",
    "format_rational",
]


class NonDivisible(ArithmeticError):
    """Raised by :func:`exact_divide` when the remainder is nonzero."""

    def __init__(self, quotient: "UniPoly", remainder: "UniPoly"):
        super().__init__(f"nonzero remainder {remainder}")
        self.quotient = quotient
        self.remainder = remainder


class VariableMismatch(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals are rejected on purpose."""
    s = text.strip()
    if not s or "." in s or "e" in s.lower():
        raise ValueError(f"malformed rational {text!r}")
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {text!r}") from None


def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _strip(coeffs: Iterable[Scalar]) -> tuple:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Univariate polynomial with rational coefficients, ``coeffs[i]`` of ``var**i``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "l"):
        self.coeffs = _strip(coeffs)
        self.var = var

    @classmethod
    def x(cls, var: str = "l") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def const(cls, c: Scalar, var: str = "l") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1, var: str = "l") -> "UniPoly":
        p = cls.const(lead, var)
        for r in roots:
            p = p * cls((-Fraction(r), 1), var)
        return p

    # -- queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or another polynomial."""
        if isinstance(x, UniPoly):
            return self.compose(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise VariableMismatch(f"{self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,), self.var)
        return NotImplemented

    def _var_with(self, other: "UniPoly") -> str:
        # constants carry no real variable; take the tag from the other operand
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly((self.coeff(i) + o.coeff(i) for i in range(n)), self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly((c * other for c in self.coeffs), self.var)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return UniPoly((), self._var_with(o))
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return UniPoly(out, self._var_with(o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return UniPoly((c * inv for c in self.coeffs), self.var)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = UniPoly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly((i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Return ``self(inner)``; the result carries ``inner``'s variable."""
        acc = UniPoly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return UniPoly(acc.coeffs, inner.var)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lc
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            t = rem[i] / lead
            if t:
                quot[i - dq] = t
                for j, c in enumerate(other.coeffs):
                    rem[i - dq + j] -= t * c
        return UniPoly(quot, self.var), UniPoly(rem[:dq], self.var)

    def monic(self) -> "UniPoly":
        return self / self.lc if self.coeffs else self

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __repr__(self):
        return f"UniPoly({[format_rational(c) for c in self.coeffs]}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            cs = format_rational(abs(c))
            body = cs if not mono else (mono if abs(c) == 1 else f"{cs}*{mono}")
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def exact_divide(num: UniPoly, den: UniPoly) -> UniPoly:
    """Return ``q`` with ``num == den * q``; raise :class:`NonDivisible` otherwise."""
    q, r = num.divmod(den)
    if not r.is_zero():
        raise NonDivisible(q, r)
    return q


class BiPoly:
    """Polynomial in an outer variable ``n`` whose coefficients are :class:`UniPoly`.

    ``coeffs[i]`` multiplies ``n**i``; every coefficient shares one inner variable.
    """

    __slots__ = ("coeffs", "inner")

    def __init__(self, coeffs: Iterable[Union[UniPoly, Scalar]] = (), inner: str = "l"):
        c = [x if isinstance(x, UniPoly) else UniPoly.const(x, inner) for x in coeffs]
        for x in c:
            if x.degree > 0 and x.var != inner:
                raise VariableMismatch(f"{x.var} vs {inner}")
        c = [UniPoly(x.coeffs, inner) for x in c]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)
        self.inner = inner

    @classmethod
    def n(cls, inner: str = "l") -> "BiPoly":
        return cls((0, 1), inner)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> UniPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return UniPoly((), self.inner)

    @property
    def lc(self) -> UniPoly:
        return self.coeff(self.degree)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.inner != self.inner and not (other.is_const_inner() and self.is_const_inner()):
                raise VariableMismatch(f"{self.inner} vs {other.inner}")
            return other
        if isinstance(other, (int, Fraction, UniPoly)):
            return BiPoly((other,), self.inner)
        return NotImplemented

    def is_const_inner(self) -> bool:
        return all(c.degree <= 0 for c in self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return BiPoly((self.coeff(i) + o.coeff(i) for i in range(n)), self.inner)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly((-c for c in self.coeffs), self.inner)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            return BiPoly((c * other for c in self.coeffs), self.inner)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.is_zero() or o.is_zero():
            return BiPoly((), self.inner)
        out = [UniPoly((), self.inner)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(o.coeffs):
                out[i + j] = out[i + j] + x * y
        return BiPoly(out, self.inner)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative_n(self, times: int = 1) -> "BiPoly":
        p = self
        for _ in range(times):
            p = BiPoly((c * i for i, c in enumerate(p.coeffs) if i), p.inner)
        return p

    def substitute_n(self, expr: Union[UniPoly, Scalar]) -> UniPoly:
        """Set ``n := expr`` (a polynomial in the inner variable)."""
        if not isinstance(expr, UniPoly):
            expr = UniPoly.const(expr, self.inner)
        elif expr.degree > 0 and expr.var != self.inner:
            raise VariableMismatch(f"{expr.var} vs {self.inner}")
        acc = UniPoly((), self.inner)
        for c in reversed(self.coeffs):
            acc = acc * expr + c
        return UniPoly(acc.coeffs, self.inner)

    def __call__(self, n: Scalar, inner_value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c(inner_value)
        return acc

    def map_inner(self, fn, inner: str | None = None) -> "BiPoly":
        """Apply ``fn`` to every coefficient polynomial."""
        return BiPoly((fn(c) for c in self.coeffs), inner or self.inner)

    @staticmethod
    def compose_uni(outer: UniPoly, arg: "BiPoly") -> "BiPoly":
        """Return ``outer(arg)`` for a univariate ``outer``."""
        acc = BiPoly((), arg.inner)
        for c in reversed(outer.coeffs):
            acc = acc * arg + c
        return acc

    def __repr__(self):
        return f"BiPoly({list(map(str, self.coeffs))}, inner={self.inner!r})"


class RatFunc:
    """Reduced quotient of two polynomials in one variable."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = exact_divide(num, g)
            den = exact_divide(den, g)
        # normalize so the denominator is monic
        lead = den.lc
        self.num = num / lead
        self.den = den / lead

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def to_poly(self) -> UniPoly:
        return exact_divide(self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"


def _bernoulli(m: int) -> list[Fraction]:
    # B_1 = -1/2 convention
    B = [Fraction(1)]
    for n in range(1, m + 1):
        B.append(-sum(comb(n + 1, i) * B[i] for i in range(n)) / (n + 1))
    return B


FAULHABER_MAX = 8


@lru_cache(maxsize=None)
def faulhaber_sum(m: int, var: str = "l") -> UniPoly:
    """Closed form of ``sum(j**m for j in range(L))`` as a polynomial in ``L``."""
    if not 0 <= m <= FAULHABER_MAX:
        raise ValueError(f"power {m} outside 0..{FAULHABER_MAX}")
    B = _bernoulli(m)
    coeffs = [Fraction(0)] * (m + 2)
    for i in range(m + 1):
        coeffs[m + 1 - i] += Fraction(comb(m + 1, i)) * B[i] / (m + 1)
    return UniPoly(coeffs, var)


def sum_over_index(p: UniPoly, count: UniPoly) -> UniPoly:
    """Map ``p(j)`` to ``sum(p(j) for j in range(count))`` symbolically."""
    acc = UniPoly((), count.var)
    for m, c in enumerate(p.coeffs):
        if c:
            acc = acc + faulhaber_sum(m, count.var).compose(count) * c
    return acc

