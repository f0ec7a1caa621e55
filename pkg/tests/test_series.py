from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgamma.series import (
    InvalidModuli,
    InvalidQuadForm,
    ModulusSet,
    QuadForm,
    denom_series,
    euler_product,
    gamma_series,
    partition_count_oracle,
    residue_product_series,
    tail_exponents,
)

Z1 = ModulusSet([1, 4, 9, 11, 19])
Z2 = ModulusSet([2, 3, 7, 13, 17])
Q = QuadForm(Fraction(5, 2), Fraction(3, 2))


def test_partition_counts():
    p = denom_series(Z1, 10)
    assert p[3] == 1
    assert p[9] == 4
    assert partition_count_oracle(Z2, 1) == 0
    assert partition_count_oracle(Z2, 5) == 1
    # 2*6, 2*3+3*2, 3*4 and 2+3+7
    assert partition_count_oracle(Z2, 12) == 4
    assert denom_series(Z2, 12)[12] == 4


def test_tail_exponents_small():
    assert tail_exponents(Q, 1, 20) == [(4, 1), (7, -1), (13, -1), (18, 1)]


def test_pentagonal_tail():
    exps = [e for e, _ in tail_exponents(QuadForm(Fraction(3, 2), Fraction(1, 2)), 1, 26)]
    assert exps == [2, 5, 7, 12, 15, 22, 26]


def test_gamma_small():
    gam = gamma_series(Z1, Q, 1, 10)
    assert gam[4] == 1
    assert gam[7] == 0


def test_euler_product_pentagonal():
    N = 400
    c = euler_product(N)
    pent = {}
    for m in range(-20, 21):
        e = m * (3 * m + 1) // 2
        if e <= N:
            pent[e] = (-1) ** (m % 2)
    for n in range(N + 1):
        assert c[n] == pent.get(n, 0)


@pytest.mark.parametrize("S", [Z1, Z2, ModulusSet([1, 2, 3, 5])])
def test_adding_a_part_injects(S):
    p = denom_series(S, 300)
    for s in S:
        assert all(p[n + s] >= p[n] >= 0 for n in range(300 - s + 1))


@given(
    st.sampled_from([(Fraction(5, 2), Fraction(3, 2)), (Fraction(7, 2), Fraction(5, 2)),
                     (Fraction(3, 1), Fraction(0)), (Fraction(2), Fraction(1))]),
    st.integers(1, 5),
)
def test_tail_sign_pattern(ab, k):
    q = QuadForm(*ab)
    terms = tail_exponents(q, k, 3000)
    exps = [e for e, _ in terms]
    if q.B > 0:
        assert all(x < y for x, y in zip(exps, exps[1:]))
    else:
        assert exps == sorted(exps)
        return
    signs = [s for _, s in terms]
    assert signs[0] == 1
    # after the first term the signs come in pairs: -,-,+,+,-,-,...
    for i in range(1, len(signs)):
        assert signs[i] == (-1 if ((i - 1) // 2) % 2 == 0 else 1)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([Z1, Z2, ModulusSet([1, 2, 5, 7])]), st.integers(1, 4))
def test_convolution_routes_agree(S, k):
    N = 200
    gam = gamma_series(S, Q, k, N)
    terms = tail_exponents(Q, k, N)
    for n in range(N + 1):
        assert gam[n] == sum(s * partition_count_oracle(S, n - e) for e, s in terms if e <= n)


def test_residue_product():
    # parts = 1 or 4 mod 5
    p = residue_product_series([1, 4], 5, 12)
    assert list(p)[:7] == [1, 1, 1, 1, 2, 2, 3]
    with pytest.raises(ValueError):
        residue_product_series([0], 5, 10)
    with pytest.raises(ValueError):
        residue_product_series([1], 1, 10)


def test_modulus_set_validation():
    with pytest.raises(InvalidModuli, match=r"moduli not pairwise coprime: gcd\(2,6\)=2"):
        ModulusSet([2, 3, 6, 13, 17])
    with pytest.raises(InvalidModuli):
        ModulusSet([1, 2])
    with pytest.raises(InvalidModuli):
        ModulusSet([1, 2, 3, 5, 7, 11])
    with pytest.raises(InvalidModuli):
        ModulusSet([0, 1, 3])
    assert ModulusSet([19, 1, 11, 9, 4]) == Z1
    assert Z1.smallest_three() == ModulusSet([1, 4, 9])
    assert Z1.product == 7524


@pytest.mark.parametrize("A,B", [(2, 2), (1, 2), (Fraction(5, 2), Fraction(1, 3)), (Fraction(5, 2), 1)])
def test_quadform_validation(A, B):
    with pytest.raises(InvalidQuadForm):
        QuadForm(A, B)
