"""Re-derive the threshold polynomials from the four-case lower bounds.

For n inside one of the four intervals between consecutive tail exponents,
every p_S(n - exponent) is replaced by F(n - exponent) minus the remainder
bound e, giving a polynomial lower bound in (n, l). The partial sums over the
earlier tail terms are closed with power-sum formulas, so l stays symbolic
while k and all other parameters are concrete rationals.
"""

from __future__ import annotations

from ..exactmath import BiPoly, NonDivisible, RatFunc, UniPoly, sum_over_index
from .params import CaseBound, ParamTuple, ThresholdPolys, require_size


class DerivationMismatch(ArithmeticError):
    pass


def _shifted(F: UniPoly, shift: UniPoly) -> BiPoly:
    """F(n - shift) with ``shift`` a polynomial in the inner variable."""
    return BiPoly.compose_uni(F, BiPoly((-shift, 1), shift.var))


def _block_sum(p: ParamTuple, count: UniPoly) -> BiPoly:
    """Sum over j in range(count) of the four signed terms of one tail block.

    A block is F(n - f(k+2j)) - F(n - g(k+2j+1)) - F(n - f(k+2j+1)) + F(n - g(k+2j+2)).
    """
    F = p.F()
    j = UniPoly.x("j")
    t = j * 2 + p.k
    block = (
        _shifted(F, p.f(t))
        - _shifted(F, p.g(t + 1))
        - _shifted(F, p.f(t + 1))
        + _shifted(F, p.g(t + 2))
    )
    return block.map_inner(lambda c: sum_over_index(c, count), inner=count.var)


def _endpoints(p: ParamTuple) -> dict[str, UniPoly]:
    l = UniPoly.x("l")
    t = l * 2 + p.k
    return {
        "f0": p.f(t),
        "g1": p.g(t + 1),
        "f1": p.f(t + 1),
        "g2": p.g(t + 2),
        "f2": p.f(t + 2),
    }


def derive_case_polys(size: int, p: ParamTuple) -> list[CaseBound]:
    """The four case bounds, in case order."""
    require_size(size, p)
    F = p.F()
    l = UniPoly.x("l")
    ep = _endpoints(p)
    e = p.e
    head = _block_sum(p, l)
    c1 = head + _shifted(F, ep["f0"]) - (l * 4 + 1) * e
    c2 = c1 - _shifted(F, ep["g1"]) - e
    c3 = c2 - _shifted(F, ep["f1"]) - e
    c4 = _block_sum(p, l + 1) - (l * 4 + 4) * e
    return [
        CaseBound(1, ep["f0"], ep["g1"], c1),
        CaseBound(2, ep["g1"], ep["f1"], c2),
        CaseBound(3, ep["f1"], ep["g2"], c3),
        CaseBound(4, ep["g2"], ep["f2"], c4),
    ]


def vertex_value(q: BiPoly, name: str = "") -> UniPoly:
    """Minimum value V - U^2/(4 alpha) of alpha n^2 + U n + V, as a polynomial in l."""
    if q.degree != 2:
        raise DerivationMismatch(f"{name}: expected a quadratic in n, got degree {q.degree}")
    alpha, U, V = q.coeff(2), q.coeff(1), q.coeff(0)
    frac = RatFunc(U * U, alpha * 4)
    try:
        return V - frac.to_poly()
    except NonDivisible as exc:
        raise DerivationMismatch(f"{name}: vertex value is not a polynomial in l") from exc


def derive_threshold_polys(cases: list[CaseBound], size: int, p: ParamTuple) -> ThresholdPolys:
    require_size(size, p)
    c1, c2, c3, c4 = (c.bound_poly for c in cases)
    ep = _endpoints(p)
    if size == 4:
        d4 = c3.derivative_n()
        polys = (
            vertex_value(c1.derivative_n(), "H1"),
            c1.substitute_n(ep["f0"]),
            vertex_value(c2, "H3"),
            d4.substitute_n(ep["f1"]),
            d4.substitute_n(ep["g2"]),
            c3.substitute_n(ep["f1"]),
            c4.substitute_n(ep["g2"]),
            c4.substitute_n(ep["f2"]),
        )
        return ThresholdPolys("H", polys)
    d1 = c1.derivative_n()
    d3 = c3.derivative_n()
    d3_2 = d3.derivative_n()
    d4 = c4.derivative_n()
    polys = (
        vertex_value(d1.derivative_n(), "G1"),
        d1.substitute_n(ep["f0"]),
        c1.substitute_n(ep["f0"]),
        vertex_value(c2.derivative_n(), "G4"),
        c2.substitute_n(ep["g1"]),
        d3_2.substitute_n(ep["f1"]),
        d3_2.substitute_n(ep["g2"]),
        d3.substitute_n(ep["f1"]),
        c3.substitute_n(ep["f1"]),
        d4.substitute_n(ep["g2"]),
        d4.substitute_n(ep["f2"]),
        c4.substitute_n(ep["g2"]),
    )
    return ThresholdPolys("G", polys)


def derived_family(size: int, p: ParamTuple) -> ThresholdPolys:
    return derive_threshold_polys(derive_case_polys(size, p), size, p)

