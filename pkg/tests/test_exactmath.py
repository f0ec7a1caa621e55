from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgamma.exactmath import (
    BiPoly,
    NonDivisible,
    RatFunc,
    UniPoly,
    VariableMismatch,
    exact_divide,
    faulhaber_sum,
    format_rational,
    parse_rational,
    sum_over_index,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, max_size=5).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@given(polys, polys, polys)
def test_distributive(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(polys, polys)
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()
    assert (p + q).derivative() == p.derivative() + q.derivative()


@given(polys, polys, small)
def test_eval_commutes(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(polys, nonzero_polys)
def test_exact_divide_roundtrip(p, q):
    assert exact_divide(p * q, q) == p


def test_exact_divide_remainder():
    l = UniPoly.x()
    with pytest.raises(NonDivisible) as info:
        exact_divide(l * l + 1, l - 1)
    assert info.value.remainder == UniPoly.const(2)
    assert info.value.quotient == l + 1


@pytest.mark.parametrize("m", range(9))
def test_faulhaber_brute_force(m):
    s = faulhaber_sum(m)
    for L in range(51):
        assert s(L) == sum(j**m for j in range(L))


def test_faulhaber_small_value():
    assert faulhaber_sum(8)(3) == 257


def test_faulhaber_range():
    with pytest.raises(ValueError):
        faulhaber_sum(9)
    with pytest.raises(ValueError):
        faulhaber_sum(-1)


@given(st.lists(small, max_size=4))
@settings(max_examples=40)
def test_sum_over_index(cs):
    p = UniPoly(cs, "j")
    l = UniPoly.x("l")
    total = sum_over_index(p, l * 2 + 1)
    for L in range(6):
        assert total(L) == sum(p(j) for j in range(2 * L + 1))


def test_compose_and_degree():
    l = UniPoly.x()
    p = l * l - 2
    assert p.compose(l + 1) == l * l + l * 2 - 1
    assert UniPoly().degree == -1
    assert UniPoly.from_roots([1, 2]) == l * l - l * 3 + 2


def test_gcd_is_monic():
    l = UniPoly.x()
    g = ((l - 1) * (l + 2) * 3).gcd((l - 1) * (l - 5) * 7)
    assert g == l - 1


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        UniPoly.x("l") + UniPoly.x("j")
    with pytest.raises(VariableMismatch):
        BiPoly((UniPoly.x("j"), 1), "l")


def test_bipoly_substitute():
    l = UniPoly.x()
    n = BiPoly.n()
    q = n * n + n * l
    assert q.substitute_n(l + 1) == (l + 1) * (l * 2 + 1)
    assert q(3, 2) == 15
    assert q.derivative_n() == n * 2 + BiPoly((l,))


def test_ratfunc_reduces():
    l = UniPoly.x()
    r = RatFunc((l - 1) * (l + 1) * 2, (l - 1) * 4)
    assert r.is_polynomial()
    assert r.to_poly() == (l + 1) / 2
    assert not RatFunc(l, l + 1).is_polynomial()


@given(st.fractions(max_denominator=10**6))
def test_rational_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@pytest.mark.parametrize("bad", ["1.5", "", "1/0", "a/b", "1e3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_accepts():
    assert parse_rational("5/2") == Fraction(5, 2)
    assert parse_rational("-3") == -3
