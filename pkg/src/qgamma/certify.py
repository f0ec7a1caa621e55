"""From (S, A, B, k) to a certified cutoff N and an exhaustive check below it."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .bounds import ParamTuple, appendix_polys, derived_family
from .exactmath import format_rational
from .quasipoly import quasi_polynomial
from .roots import t_ceiling
from .series import ModulusSet, QuadForm, gamma_series, residue_product_series, tail_series

ASSUMPTION = "K from external source"

QUAD_FORMS = ((Fraction(5, 2), Fraction(3, 2)), (Fraction(5, 2), Fraction(1, 2)),
              (Fraction(7, 2), Fraction(5, 2)), (Fraction(7, 2), Fraction(3, 2)))

# (moduli, A, B) -> (K, cutoffs for k = 1..K-1); K values are external inputs.
REFERENCE_TABLES: dict[tuple, tuple[int, tuple[int, ...]]] = {
    ((1, 4, 9, 11, 19), *QUAD_FORMS[0]): (5, (216, 99, 70, 99)),
    ((1, 4, 9, 11, 19), *QUAD_FORMS[1]): (4, (207, 93, 65)),
    ((1, 4, 9, 11, 19), *QUAD_FORMS[2]): (4, (189, 141, 100)),
    ((1, 4, 9, 11, 19), *QUAD_FORMS[3]): (3, (182, 62)),
    ((2, 3, 7, 13, 17), *QUAD_FORMS[0]): (5, (216, 99, 70, 99)),
    ((2, 3, 7, 13, 17), *QUAD_FORMS[1]): (4, (207, 93, 65)),
    ((2, 3, 7, 13, 17), *QUAD_FORMS[2]): (4, (189, 141, 100)),
    ((2, 3, 7, 13, 17), *QUAD_FORMS[3]): (3, (182, 62)),
    ((1, 4, 9, 11, 29), *QUAD_FORMS[0]): (5, (442, 172, 133, 99)),
    ((1, 4, 9, 11, 29), *QUAD_FORMS[1]): (4, (429, 164, 65)),
    ((1, 4, 9, 11, 29), *QUAD_FORMS[2]): (4, (451, 141, 100)),
    ((1, 4, 9, 11, 29), *QUAD_FORMS[3]): (3, (297, 135)),
    ((2, 3, 7, 13, 23), *QUAD_FORMS[0]): (5, (319, 172, 133, 99)),
    ((2, 3, 7, 13, 23), *QUAD_FORMS[1]): (4, (308, 93, 65)),
    ((2, 3, 7, 13, 23), *QUAD_FORMS[2]): (4, (306, 141, 100)),
    ((2, 3, 7, 13, 23), *QUAD_FORMS[3]): (3, (182, 62)),
}


def cutoff(q: QuadForm, k: int, L: int) -> int:
    v = q.A * (k + 2 * L) ** 2 + q.B * (k + 2 * L)
    assert v.denominator == 1
    return v.numerator


def threshold(S: ModulusSet, q: QuadForm, k: int, source: str = "derived") -> tuple[int, int]:
    """Return (L, N): gamma(n) >= 0 is guaranteed for every n >= N."""
    if k < 1:
        raise ValueError("k must be at least 1")
    p = ParamTuple.from_moduli(S, q, k)
    if source == "derived":
        family = derived_family(len(S), p)
    elif source == "closed-form":
        family = appendix_polys(len(S), p)
    else:
        raise ValueError(f"unknown polynomial source {source!r}")
    L = t_ceiling(family)
    return L, cutoff(q, k, L)


def verify_below(S: ModulusSet, q: QuadForm, k: int, N: int) -> list[tuple[int, int]]:
    """Every n < N with gamma(n) < 0."""
    if N <= 0:
        return []
    return gamma_series(S, q, k, N - 1).negatives()


def soundness_window(S: ModulusSet, q: QuadForm, k: int, N: int, width: int = 500):
    """Negative coefficients on [N, N + width]; none are expected once N is certified."""
    return gamma_series(S, q, k, N + width).negatives(start=N)


@dataclass
class KRecord:
    k: int
    L: int
    N: int
    min_coefficient: Optional[int]
    violations: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "L": self.L,
            "N": self.N,
            "min_coefficient_below_N": self.min_coefficient,
            "violations": [list(v) for v in self.violations],
        }


@dataclass
class Certificate:
    moduli: ModulusSet
    q: QuadForm
    K: int
    D: Fraction
    rows: list[KRecord]
    verdict: str
    timings: dict[str, int] = field(default_factory=dict)

    def to_json(self, include_timings: bool = False) -> dict:
        out = {
            "moduli": list(self.moduli.elements),
            "A": format_rational(self.q.A),
            "B": format_rational(self.q.B),
            "K": self.K,
            "assumption": ASSUMPTION,
            "rows": [r.to_json() for r in self.rows],
            "verdict": self.verdict,
            "D": format_rational(self.D),
            "version": __version__,
        }
        if include_timings:
            out["timings_us"] = self.timings
        return out

    def dumps(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_json(include_timings), indent=2, sort_keys=True)


def certify_family(
    S: ModulusSet, q: QuadForm, K: int, max_verify: Optional[int] = None
) -> Certificate:
    """Check every k < K; positivity for k >= K is the stated external assumption.

    With ``max_verify`` set, rows whose cutoff exceeds it are left unchecked and
    the verdict becomes ``incomplete``.
    """
    if K < 2:
        raise ValueError("K must be at least 2: there is nothing to verify otherwise")
    rows = []
    timings: dict[str, int] = {}  # microseconds, kept integral
    skipped = False
    for k in range(1, K):
        t0 = time.perf_counter()
        L, N = threshold(S, q, k)
        t1 = time.perf_counter()
        if max_verify is not None and N > max_verify:
            rows.append(KRecord(k, L, N, None))
            skipped = True
            continue
        coeffs = gamma_series(S, q, k, N - 1) if N > 0 else None
        viol = coeffs.negatives() if coeffs is not None else []
        rows.append(KRecord(k, L, N, coeffs.min() if coeffs is not None else None, viol))
        timings[f"k={k}"] = round((time.perf_counter() - t0) * 1e6)
        timings[f"k={k}:threshold"] = round((t1 - t0) * 1e6)
    if any(r.violations for r in rows):
        verdict = "refuted"
    elif skipped:
        verdict = "incomplete"
    else:
        verdict = "certified"
    D = quasi_polynomial(S).bound_D
    return Certificate(S, q, K, D, rows, verdict, timings)


@dataclass
class TableRow:
    moduli: tuple[int, ...]
    A: Fraction
    B: Fraction
    K: int
    expected: tuple[int, ...]
    computed: tuple[int, ...]

    @property
    def match(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "moduli": list(self.moduli),
            "A": format_rational(self.A),
            "B": format_rational(self.B),
            "K": self.K,
            "expected": list(self.expected),
            "computed": list(self.computed),
            "cells": [e == c for e, c in zip(self.expected, self.computed)],
            "match": self.match,
        }


def reproduce_tables() -> list[TableRow]:
    out = []
    for (moduli, A, B), (K, expected) in REFERENCE_TABLES.items():
        S, q = ModulusSet(moduli), QuadForm(A, B)
        computed = tuple(threshold(S, q, k)[1] for k in range(1, K))
        out.append(TableRow(moduli, A, B, K, expected, computed))
    return out


def conjecture_smoke(
    residues, modulus: int, q: QuadForm, k: int, N: int
) -> list[tuple[int, int]]:
    """Negative coefficients up to q^N of the residue-class product times the tail."""
    prod = residue_product_series(residues, modulus, N)
    out = [0] * (N + 1)
    tail = tail_series(q, k, N)
    for e, t in enumerate(tail.coeffs):
        if t:
            for n in range(e, N + 1):
                out[n] += t * prod[n - e]
    return [(n, c) for n, c in enumerate(out) if c < 0]
