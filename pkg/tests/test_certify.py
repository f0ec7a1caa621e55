import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgamma.certify import (
    ASSUMPTION,
    QUAD_FORMS,
    certify_family,
    conjecture_smoke,
    cutoff,
    reproduce_tables,
    threshold,
    verify_below,
)
from qgamma.series import ModulusSet, QuadForm, gamma_series

Z19 = ModulusSet([1, 4, 9, 11, 19])
Z17 = ModulusSet([2, 3, 7, 13, 17])
Z29 = ModulusSet([1, 4, 9, 11, 29])
Z23 = ModulusSet([2, 3, 7, 13, 23])
q_53, q_51, q_75, q_73 = (QuadForm(*ab) for ab in QUAD_FORMS)


def test_threshold_examples():
    assert threshold(Z19, q_53, 1) == (4, 216)
    assert threshold(Z19, q_73, 2) == (1, 62)
    assert threshold(Z23, q_51, 2)[1] == 93


def test_threshold_rejects_bad_source():
    with pytest.raises(ValueError):
        threshold(Z19, q_53, 1, source="guess")


def test_verify_below_examples():
    assert verify_below(Z19, q_53, 1, 216) == []
    assert verify_below(Z17, q_75, 3, 100) == []
    assert verify_below(Z19, q_53, 3, q_53.f(3)) == []
    assert verify_below(Z19, q_53, 1, 0) == []


def test_certify_examples():
    c = certify_family(Z29, q_53, 5)
    assert c.verdict == "certified"
    assert [r.N for r in c.rows] == [442, 172, 133, 99]
    c = certify_family(Z23, q_73, 3)
    assert c.verdict == "certified"
    assert [r.N for r in c.rows] == [182, 62]
    with pytest.raises(ValueError):
        certify_family(Z23, q_73, 1)


def test_certify_incomplete():
    c = certify_family(Z29, q_53, 5, max_verify=200)
    assert c.verdict == "incomplete"
    assert c.rows[0].min_coefficient is None


def test_certificate_json_deterministic():
    a = certify_family(Z19, q_73, 3)
    b = certify_family(Z19, q_73, 3)
    assert a.dumps() == b.dumps()
    doc = json.loads(a.dumps())
    assert doc["assumption"] == ASSUMPTION
    assert doc["D"] == "85/57"
    assert "timings_us" not in doc
    assert "timings_us" in json.loads(a.dumps(include_timings=True))


@given(st.sampled_from(QUAD_FORMS + ((Fraction(3), Fraction(0)), (Fraction(9, 2), Fraction(1, 2)))),
       st.integers(1, 30), st.integers(0, 30))
def test_cutoff_is_integer(ab, k, L):
    N = cutoff(QuadForm(*ab), k, L)
    assert isinstance(N, int) and N >= 0


def test_table_report():
    rows = reproduce_tables()
    assert len(rows) == 16
    assert all(r.match for r in rows)
    assert all(all(r.to_json()["cells"]) for r in rows)


def test_smoke_examples():
    assert conjecture_smoke([1, 4], 5, q_53, 1, 1000) == []
    assert conjecture_smoke([2, 3], 5, q_75, 2, 1000) == []
    assert conjecture_smoke([1, 4], 5, q_53, 1, 0) == []


@pytest.mark.parametrize("S", [Z19, Z17, Z29, Z23], ids=str)
def test_monotone_delegation(S):
    # the three smallest moduli give a sub-product; the extra factors only add
    # nonnegative convolution weight
    S3 = S.smallest_three()
    for ab in QUAD_FORMS:
        q = QuadForm(*ab)
        for k in (1, 5):
            small = gamma_series(S3, q, k, 2000)
            if small.min() >= 0:
                assert gamma_series(S, q, k, 2000).min() >= 0
