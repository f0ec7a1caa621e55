import random
from fractions import Fraction

import pytest

from qgamma.bounds import (
    BELOW_RANGE,
    DerivationMismatch,
    InvalidParams,
    ParamTuple,
    ThresholdPolys,
    appendix_polys,
    crosscheck,
    derive_case_polys,
    derived_family,
    locate_case,
    random_params,
)
from qgamma.bounds.derive import vertex_value
from qgamma.certify import QUAD_FORMS, REFERENCE_TABLES, threshold
from qgamma.exactmath import BiPoly, UniPoly
from qgamma.roots import t_ceiling
from qgamma.series import ModulusSet, QuadForm, gamma_series, tail_exponents

Q = QuadForm(Fraction(5, 2), Fraction(3, 2))
Z1 = ModulusSet([1, 4, 9, 11, 19])
S4 = ModulusSet([1, 2, 3, 5])
l = UniPoly.x("l")


@pytest.mark.parametrize("n,expected", [(4, (0, 1)), (3, BELOW_RANGE), (13, (0, 3)), (7, (0, 2)), (18, (0, 4))])
def test_locate_case_examples(n, expected):
    assert locate_case(n, Q, 1) == expected


@pytest.mark.parametrize("ab", QUAD_FORMS + ((Fraction(3), Fraction(0)),))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_locate_case_consistent_with_intervals(ab, k):
    q = QuadForm(*ab)
    p = ParamTuple(A=q.A, B=q.B, k=k, a=1, b=0, c=0, e=0)
    cases = derive_case_polys(4, p)
    for n in range(q.f(k), q.f(k + 8)):
        lc = locate_case(n, q, k)
        assert lc is not BELOW_RANGE
        L, cid = lc
        assert n in cases[cid - 1].interval(L)


def _lc_catalogue(size, p):
    A, B, k, a = p.A, p.B, p.k, p.a
    if size == 4:
        t1 = 12 * a * (A - B) * (2 * A * k - A - B)
        quart = 48 * A**2 * a * k * (A - B)
        quad = 24 * a * (A - B) * (A * k + B)
        return [t1, quart, quart, quad, quad, quart, quart, quart]
    g1 = 48 * a * (A - B) * (2 * A * k - A - B)
    quart = 192 * A**2 * a * k * (A - B)
    sext = 256 * A**3 * a * k * (A - B)
    quad = 96 * a * (A - B) * (A * k + B)
    return [g1, quart, sext, quart, sext, quad, quad, quart, sext, quart, quart, sext]


DEGREES = {4: [2, 4, 4, 2, 2, 4, 4, 4], 5: [2, 4, 6, 4, 6, 2, 2, 4, 6, 4, 4, 6]}


@pytest.mark.parametrize("size", [4, 5])
@pytest.mark.parametrize("seed", range(6))
def test_leading_coefficients(size, seed):
    p = random_params(size, random.Random(seed))
    for fam in (derived_family(size, p), appendix_polys(size, p)):
        lcs = _lc_catalogue(size, p)
        assert [q.degree for q in fam] == DEGREES[size]
        assert [q.lc for q in fam] == lcs
        # 2Ak - A - B >= A - B > 0, so every leading coefficient is positive
        assert all(x > 0 for x in lcs)


def test_case_leading_n_coefficients():
    p4 = ParamTuple.from_moduli(S4, Q, 2)
    P1, _, _, P6 = (c.bound_poly for c in derive_case_polys(4, p4))
    assert P1.lc == UniPoly.const(p4.a)
    assert P6.lc == -6 * p4.a * (l + 1) * (Q.A - Q.B)
    p5 = ParamTuple.from_moduli(Z1, Q, 2)
    Q4 = derive_case_polys(5, p5)[1].bound_poly
    assert Q4.lc == 4 * p5.a * (2 * p5.k + 2 * l + 1) * (Q.A - Q.B)


def test_first_constant_terms():
    p4 = ParamTuple.from_moduli(S4, Q, 1)
    p5 = ParamTuple.from_moduli(Z1, Q, 1)
    a, b, c = p4.a, p4.b, p4.c
    assert derived_family(4, p4)[0].coeff(0) == (3 * a * c - b * b) / (3 * a)
    a, b, c = p5.a, p5.b, p5.c
    assert derived_family(5, p5)[0].coeff(0) == (8 * a * c - 3 * b * b) / (4 * a)


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("ab", QUAD_FORMS)
def test_h_family_identity(ab, k):
    p = ParamTuple.from_moduli(S4, QuadForm(*ab), k)
    assert crosscheck(4, p).passed


@pytest.mark.parametrize("seed", range(20))
def test_h_family_identity_random(seed):
    assert crosscheck(4, random_params(4, random.Random(seed))).passed


@pytest.mark.parametrize("seed", range(20))
def test_g_family_entered_defect(seed):
    """All G polynomials agree except G5, which differs by a constant only."""
    p = random_params(5, random.Random(seed))
    report = crosscheck(5, p)
    assert set(report.mismatches) <= {"G5"}
    for v in report.verdicts:
        if v.name == "G5":
            assert v.difference.degree <= 0


@pytest.mark.parametrize("key", list(REFERENCE_TABLES), ids=str)
def test_g5_defect_does_not_move_cutoffs(key):
    moduli, A, B = key
    S, q = ModulusSet(moduli), QuadForm(A, B)
    K, expected = REFERENCE_TABLES[key]
    for k, N in zip(range(1, K), expected):
        assert threshold(S, q, k, "closed-form") == threshold(S, q, k, "derived")
        assert threshold(S, q, k, "closed-form")[1] == N


def test_fault_injection_single_mismatch():
    p = random_params(4, random.Random(3))
    polys = list(appendix_polys(4, p))
    polys[4] = polys[4] + UniPoly((0, Fraction(1, 7)))
    report = crosscheck(4, p, ThresholdPolys("H", tuple(polys)))
    assert report.mismatches == ["H5"]
    assert not report.passed


def test_invalid_params():
    with pytest.raises(InvalidParams):
        ParamTuple(A=2, B=2, k=1, a=1, b=0, c=0, e=0)
    with pytest.raises(InvalidParams):
        ParamTuple(A=2, B=1, k=0, a=1, b=0, c=0, e=0)
    with pytest.raises(InvalidParams):
        ParamTuple(A=2, B=1, k=1, a=0, b=0, c=0, e=0)
    p = ParamTuple(A=2, B=1, k=1, a=1, b=0, c=0, e=0)
    with pytest.raises(InvalidParams):
        derived_family(5, p)


def test_vertex_rejects_non_quadratic():
    with pytest.raises(DerivationMismatch):
        vertex_value(BiPoly((1, 2, 3, 4)), "X")


GENUINE = [(S4, Q, 1), (S4, QuadForm(Fraction(7, 2), Fraction(3, 2)), 2),
           (Z1, Q, 1), (Z1, QuadForm(Fraction(5, 2), Fraction(1, 2)), 3)]


@pytest.mark.parametrize("S,q,k", GENUINE, ids=lambda x: str(x))
def test_master_inequality(S, q, k):
    p = ParamTuple.from_moduli(S, q, k)
    cases = derive_case_polys(len(S), p)
    L, _ = threshold(S, q, k)
    top = L + 3
    gam = gamma_series(S, q, k, int(cases[3].upper(top)))
    for ll in range(0, top + 1):
        for case in cases:
            for n in case.interval(ll):
                assert gam[n] >= case.bound_poly(n, ll), (ll, case.case_id, n)


@pytest.mark.parametrize("S,q,k", GENUINE, ids=lambda x: str(x))
def test_nonnegative_past_threshold(S, q, k):
    p = ParamTuple.from_moduli(S, q, k)
    fam = derived_family(len(S), p)
    L = t_ceiling(fam)
    for poly in fam:
        assert all(poly(x) >= 0 for x in range(L, L + 51))


@pytest.mark.parametrize("S,q,k", GENUINE[2:], ids=lambda x: str(x))
def test_g5_by_direct_summation(S, q, k):
    """Evaluate the case-2 bound at its left endpoint straight from the tail terms.

    This avoids the symbolic route entirely and settles which G5 is right.
    """
    p = ParamTuple.from_moduli(S, q, k)
    F = p.F()
    derived, entered = derived_family(5, p)[4], appendix_polys(5, p)[4]
    for ll in range(5):
        n = q.g(k + 2 * ll + 1)
        terms = [(ex, s) for ex, s in tail_exponents(q, k, n)]
        direct = sum(s * F(n - ex) for ex, s in terms) - len(terms) * p.e
        assert derived(ll) == direct
        assert entered(ll) != direct
