from fractions import Fraction
from math import lcm, prod

import pytest

from qgamma.quasipoly import UnsupportedSize, lemma_coeffs, periodic_remainder, quasi_polynomial
from qgamma.series import InvalidModuli, ModulusSet, denom_series, partition_count_oracle

SMALL = [ModulusSet(s) for s in ([1, 2, 3, 5], [1, 2, 5, 7], [2, 3, 5, 7], [1, 2, 3, 5, 7])]


def test_size4_coefficients():
    F = lemma_coeffs(ModulusSet([1, 2, 3, 5]))
    assert F.coeffs == (0, Fraction(9, 20), Fraction(11, 120), Fraction(1, 180))
    assert F(0) == 0


def test_size5_leading():
    assert lemma_coeffs(ModulusSet([1, 4, 9, 11, 19])).lc == Fraction(1, 180576)


def test_unsupported_size():
    with pytest.raises(UnsupportedSize):
        lemma_coeffs(ModulusSet([1, 2, 3]))
    with pytest.raises(InvalidModuli):
        ModulusSet([2, 4, 5, 7])


@pytest.mark.parametrize("S", SMALL, ids=str)
def test_reconstruction_and_bound(S):
    qp = quasi_polynomial(S)
    assert qp.period == prod(S)
    assert qp.remainder[0] == 1
    p = denom_series(S, 3 * qp.period)
    assert all(qp(n) == p[n] for n in range(3 * qp.period + 1))
    assert max(abs(r) for r in qp.remainder) == qp.bound_D >= 1


def test_D_independent_scan():
    # scan with the recursive counter rather than the series engine
    S = ModulusSet([1, 2, 3, 5])
    F = lemma_coeffs(S)
    D = max(abs(partition_count_oracle(S, n) - F(n)) for n in range(30))
    assert quasi_polynomial(S).bound_D == D


@pytest.mark.parametrize("S", SMALL, ids=str)
def test_remainder_denominators(S):
    F, (_, r) = lemma_coeffs(S), periodic_remainder(S)
    den = lcm(*(c.denominator for c in F.coeffs))
    assert all((x * den).denominator == 1 for x in r)


@pytest.mark.parametrize("S", SMALL, ids=str)
def test_leading_coefficient(S):
    fact = 6 if len(S) == 4 else 24
    assert lemma_coeffs(S).lc == Fraction(1, fact * prod(S)) > 0


def test_coefficients_dict():
    co = quasi_polynomial(ModulusSet([1, 2, 3, 5, 7])).coefficients
    assert sorted(co) == ["a", "b", "c", "d"]
    assert co["a"] == Fraction(1, 24 * 210)
