"""Closed forms of the threshold polynomials, entered term for term.

Nothing here is simplified or corrected. The G5 constant term as entered is
missing terms, which ``crosscheck`` reports; certified thresholds therefore
come from the derived family in ``derive``.
"""

# ruff: noqa: E501

from __future__ import annotations

from ..exactmath import UniPoly
from .params import ParamTuple, ThresholdPolys, require_size


def h_family(p: ParamTuple) -> ThresholdPolys:
    require_size(4, p)
    A, B, k, a, b, c, e = p.A, p.B, p.k, p.a, p.b, p.c, p.e
    l = UniPoly.x("l")
    H1 = (
        12*a*(A - B)*(2*A*k - A - B)*l**2 + 6*a*(2*k + 1)*(A - B)*(2*A*k - A - B)*l + (3*a*c - b**2)/(3*a)
    )
    H2 = (
        48*A**2*a*k*(A - B)*l**4 + 16*a*(A - B)*(6*A**2*k**2 + 3*A*B*k + A**2 + A*B - 2*B**2)*l**3
        + 4*(A - B)*(12*A**2*a*k**3 + 18*A*B*a*k**2 + 9*A**2*a*k + 9*A*B*a*k - 9*B**2*a*k - 3*A*B*a + 2*A*b*k - 3*B**2*a
        - 2*B*b)*l**2 + (24*A**2*B*a*k**3 - 24*A*B**2*a*k**3 + 24*A**3*a*k**2 - 36*A*B**2*a*k**2 + 12*B**3*a*k**2 - 6*A**2*B*a*k
        + 8*A**2*b*k**2 - 8*A*B*b*k**2 + 6*B**3*a*k - 6*A**3*a + 6*A*B**2*a - 4*A*B*b*k + 4*B**2*b*k - 2*A**2*b + 2*B**2*b - 2*A*c
        + 2*B*c - 4*e)*l - e
    )
    H3 = (
        48*A**2*a*k*(A - B)*l**4 + 8*a*(A - B)*(9*A**2*k**2 + 12*A**2*k - 2*A**2 - 2*B*A + B**2)*l**3
        + 12*a*(A - B)*(2*A**2*k**3 + 9*A**2*k**2 + 4*A**2*k - 2*A*B*k + B**2*k - 2*A**2 - 2*B*A + B**2)*l**2
        + ((144*A**3*a**2*k**3 - 144*A**2*B*a**2*k**3 + 252*A**3*a**2*k**2 - 324*A**2*B*a**2*k**2 + 108*A*B**2*a**2*k**2 - 36*B**3*a**2*k**2
        - 144*A**2*B*a**2*k + 216*A*B**2*a**2*k - 72*B**3*a**2*k - 45*A**3*a**2 - 9*A**2*B*a**2 + 81*A*B**2*a**2 - 27*B**3*a**2
        + 12*A*c*a - 4*A*b**2 - 12*B*c*a + 4*B*b**2 - 24*e*a)*l)/(6*a)
        + (24*A**3*a**2*k**3 - 72*A**2*B*a**2*k**3
        + 72*A*B**2*a**2*k**3 - 24*B**3*a**2*k**3 + 36*A**3*a**2*k**2 - 108*A**2*B*a**2*k**2 + 108*A*B**2*a**2*k**2 - 36*B**3*a**2*k**2
        + 18*A**3*a**2*k - 54*A**2*B*a**2*k + 54*A*B**2*a**2*k - 18*B**3*a**2*k + 3*A**3*a**2 - 9*A**2*B*a**2 + 9*A*B**2*a**2 - 3*B**3*a**2
        + 24*A*a*c*k - 8*A*b**2*k - 24*B*a*c*k + 8*B*b**2*k + 12*A*a*c - 4*A*b**2 - 12*B*a*c + 4*B*b**2 - 24*a*e)/(12*a)
    )
    H4 = (
        24*a*(A - B)*(A*k + B)*l**2 + 2*(A - B)*(12*A*a*k**2 + 12*A*a*k + 18*B*a*k + 3*A*a + 15*B*a + 2*b)*l
        + 12*A**2*a*k**2 - 12*B**2*a*k**2 + 12*A**2*a*k + 12*A*B*a*k - 24*B**2*a*k + 3*a*A**2 + 6*A*B*a + 4*A*b*k - 9*B**2*a
        - 4*B*b*k + 2*A*b - 2*B*b - c
    )
    H5 = (
        24*a*(A - B)*(A*k + B)*l**2 + 2*(A - B)*(12*A*a*k**2 + 24*A*a*k + 6*B*a*k - 3*A*a + 21*B*a - 2*b)*l
        + 24*A**2*a*k**2 - 24*A*B*a*k**2 + 24*A**2*a*k - 12*A*B*a*k - 12*B**2*a*k - 6*A**2*a + 24*A*B*a - 18*B**2*a
        - 4*A*b + 4*B*b - c
    )
    H6 = (
        48*A**2*a*k*(A - B)*l**4 + 16*a*(A - B)*(6*A**2*k**2 + 6*A**2*k + 3*A*B*k - A**2 - A*B + 2*B**2)*l**3
        + 4*(A - B)*(12*A**2*a*k**3 + 36*A**2*a*k**2 + 18*A*B*a*k**2 + 15*A**2*a*k + 15*A*B*a*k + 15*B**2*a*k - 6*A**2*a
        - 3*A*B*a + 2*A*b*k + 15*B**2*a + 2*B*b)*l**2 + (48*A**3*a*k**3 - 24*A**2*B*a*k**3 - 24*A*B**2*a*k**3 + 72*A**3*a*k**2
        - 36*A*B**2*a*k**2 - 36*B**3*a*k**2 + 12*A**3*a*k + 30*A**2*B*a*k + 8*A**2*b*k**2 + 36*A*B**2*a*k - 8*A*B*b*k**2
        - 78*B**3*a*k - 6*A**3*a + 12*A**2*B*a + 8*A**2*b*k + 30*A*B**2*a + 4*A*B*b*k - 36*B**3*a - 12*B**2*b*k + 2*A**2*b
        + 8*A*B*b - 10*B**2*b + 2*A*c - 2*B*c - 4*e)*l + 8*A**3*a*k**3 - 8*B**3*a*k**3 + 12*A**3*a*k**2 + 12*A**2*B*a*k**2
        - 24*B**3*a*k**2 + 6*A**3*a*k + 12*A**2*B*a*k + 4*A**2*b*k**2 + 6*A*B**2*a*k - 24*B**3*a*k - 4*B**2*b*k**2 + A**3*a
        + 3*A**2*B*a + 4*A**2*b*k + 3*A*B**2*a + 4*A*B*b*k - 7*B**3*a - 8*B**2*b*k + A**2*b + 2*A*B*b + 2*A*c*k - 3*B**2*b
        - 2*B*c*k + A*c - B*c - 3*e
    )
    H7 = (
        48*A**2*a*k*(A - B)*l**4 + 16*a*(A - B)*(6*A**2*k**2 + 12*A**2*k - 3*A*B*k + A**2 + A*B - 2*B**2)*l**3
        + 4*(A - B)*(12*A**2*a*k**3 + 72*A**2*a*k**2 - 18*A*B*a*k**2 + 81*A**2*a*k - 27*A*B*a*k - 9*B**2*a*k
        + 12*A**2*a + 15*A*B*a + 2*A*b*k - 21*B**2*a + 2*B*b)*l**2 + (96*A**3*a*k**3 - 120*A**2*B*a*k**3
        + 24*A*B**2*a*k**3 + 312*A**3*a*k**2 - 432*A**2*B*a*k**2 + 108*A*B**2*a*k**2 + 12*B**3*a*k**2 + 264*A**3*a*k
        - 330*A**2*B*a*k + 8*A**2*b*k**2 - 8*A*B*b*k**2 + 66*B**3*a*k + 42*A**3*a + 24*A**2*B*a + 16*A**2*b*k
        - 138*A*B**2*a - 12*A*B*b*k + 72*B**3*a - 4*B**2*b*k - 2*A**2*b + 16*A*B*b - 14*B**2*b - 2*A*c + 2*B*c
        - 4*e)*l + 48*A**3*a*k**3 - 72*A**2*B*a*k**3 + 24*A*B**2*a*k**3 + 120*A**3*a*k**2 - 168*A**2*B*a*k**2 + 36*A*B**2*a*k**2
        + 12*B**3*a*k**2 + 84*A**3*a*k - 90*A**2*B*a*k + 8*A**2*b*k**2 - 24*A*B**2*a*k - 8*A*B*b*k**2 + 30*B**3*a*k + 10*A**3*a
        + 12*A**2*B*a + 8*A**2*b*k - 42*A*B**2*a - 4*A*B*b*k + 20*B**3*a - 4*B**2*b*k - 2*A**2*b + 8*A*B*b - 6*B**2*b
        - 2*A*c + 2*B*c - 4*e
    )
    H8 = (
        48*A**2*a*k*(A - B)*l**4 + 16*a*(A - B)*(6*A**2*k**2 + 12*A**2*k + 3*A*B*k + A**2 + A*B - 2*B**2)*l**3
        + 4*(A - B)*(12*A**2*a*k**3 + 72*A**2*a*k**2 + 18*A*B*a*k**2 + 81*A**2*a*k + 45*A*B*a*k - 9*B**2*a*k + 12*A**2*a
        + 9*A*B*a + 2*A*b*k - 27*B**2*a - 2*B*b)*l**2 + (96*A**3*a*k**3 - 72*A**2*B*a*k**3 - 24*A*B**2*a*k**3 + 312*A**3*a*k**2
        - 144*A**2*B*a*k**2 - 180*A*B**2*a*k**2 + 12*B**3*a*k**2 + 264*A**3*a*k - 54*A**2*B*a*k + 8*A**2*b*k**2 - 288*A*B**2*a*k
        - 8*A*B*b*k**2 + 78*B**3*a*k + 42*A**3*a - 24*A**2*B*a + 16*A**2*b*k - 138*A*B**2*a - 20*A*B*b*k + 120*B**3*a
        + 4*B**2*b*k - 2*A**2*b - 16*A*B*b + 18*B**2*b - 2*A*c + 2*B*c - 4*e)*l + 48*A**3*a*k**3 - 24*A**2*B*a*k**3
        - 24*A*B**2*a*k**3 + 120*A**3*a*k**2 - 24*A**2*B*a*k**2 - 108*A*B**2*a*k**2 + 12*B**3*a*k**2 + 84*A**3*a*k - 6*A**2*B*a*k
        + 8*A**2*b*k**2 - 120*A*B**2*a*k - 8*A*B*b*k**2 + 42*B**3*a*k + 10*A**3*a - 12*A**2*B*a + 8*A**2*b*k - 42*A*B**2*a
        - 12*A*B*b*k + 44*B**3*a + 4*B**2*b*k - 2*A**2*b - 8*A*B*b + 10*B**2*b - 2*A*c + 2*B*c - 4*e
    )
    polys = (H1, H2, H3, H4, H5, H6, H7, H8)
    return ThresholdPolys("H", polys)


def g_family(p: ParamTuple) -> ThresholdPolys:
    require_size(5, p)
    A, B, k, a, b, c, d, e = p.A, p.B, p.k, p.a, p.b, p.c, p.d, p.e
    l = UniPoly.x("l")
    G1 = (
        48*a*(A - B)*(2*A*k - A - B)*l**2 + 24*a*(2*k + 1)*(A - B)*(2*A*k - A - B)*l + (8*a*c - 3*b**2)/(4*a)
    )
    G2 = (
        192*A**2*a*k*(A - B)*l**4 + 64*a*(A - B)*(6*A**2*k**2 + 3*A*B*k + A**2 + A*B - 2*B**2)*l**3
        + 24*(A - B)*(8*A**2*a*k**3 + 12*A*B*a*k**2 + 6*A**2*a*k + 6*A*B*a*k - 6*B**2*a*k - 2*A*B*a + A*b*k - 2*B**2*a
        - B*b)*l**2 + 2*(A - B)*(48*A*B*a*k**3 + 48*A**2*a*k**2 + 48*A*B*a*k**2 - 24*B**2*a*k**2 - 12*A*B*a*k + 12*A*b*k**2
        - 12*B**2*a*k - 12*A**2*a - 12*A*B*a - 6*B*b*k - 3*A*b - 3*B*b - 2*c)*l + d
    )
    G3 = (
        256*A**3*a*k*(A - B)*l**6 + 384*A**2*a*k*(A - B)*(2*A*k + B)*l**5 + 16*(A - B)*(48*A**3*a*k**3
        + 60*A**2*B*a*k**2 + 6*A**3*a*k + 6*A**2*B*a*k + 12*A*B**2*a*k + 8*A**2*B*a + 3*A**2*b*k + 8*A*B**2*a - 8*B**3*a)*l**4
        + 16*(A - B)*(16*A**3*a*k**4 + 48*A**2*B*a*k**3 + 12*A**3*a*k**2 + 12*A**2*B*a*k**2 + 24*A*B**2*a*k**2 + 22*A**2*B*a*k
        + 6*A**2*b*k**2 + 22*A*B**2*a*k - 14*B**3*a*k + 8*A**3*a + 8*A**2*B*a - 4*A*B**2*a + 3*A*B*b*k - 4*B**3*a + A**2*b
        + A*B*b - 2*B**2*b)*l**3 + 4*(A - B)*(48*A**2*B*a*k**4 + 16*A**3*a*k**3 + 16*A**2*B*a*k**3 + 64*A*B**2*a*k**3
        + 84*A**2*B*a*k**2 + 12*A**2*b*k**3 + 84*A*B**2*a*k**2 - 36*B**3*a*k**2 + 60*A**3*a*k + 60*A**2*B*a*k - 18*A*B**2*a*k
        + 18*A*B*b*k**2 - 18*B**3*a*k - 12*A**2*B*a + 9*A**2*b*k - 12*A*B**2*a + 9*A*B*b*k - 9*B**2*b*k - 3*A*B*b
        + 2*A*c*k - 3*B**2*b - 2*B*c)*l**2 + (-32*A**4*a*k**4 + 96*A**2*B**2*a*k**4 - 64*A*B**3*a*k**4 + 96*A**3*B*a*k**3
        - 128*A*B**3*a*k**3 + 32*B**4*a*k**3 + 144*A**4*a*k**2 - 168*A**2*B**2*a*k**2 + 24*A**2*B*b*k**3 - 24*A*B**2*b*k**3
        + 24*B**4*a*k**2 - 24*A**3*B*a*k + 24*A**3*b*k**2 + 24*A*B**3*a*k - 36*A*B**2*b*k**2 + 12*B**3*b*k**2 - 34*A**4*a
        + 36*A**2*B**2*a - 6*A**2*B*b*k + 8*A**2*c*k**2 - 8*A*B*c*k**2 - 2*B**4*a + 6*B**3*b*k - 6*A**3*b + 6*A*B**2*b - 4*A*B*c*k
        + 4*B**2*c*k - 2*A**2*c + 2*B**2*c - 2*A*d + 2*B*d - 4*e)*l - e
    )
    G4 = (
        192*A**2*a*k*(A - B)*l**4 + 32*a*(A - B)*(9*A**2*k**2 + 12*A**2*k - 2*A**2 - 2*A*B + B**2)*l**3
        + 48*a*(A - B)*(2*A**2*k**3 + 9*A**2*k**2 + 4*A**2*k - 2*A*B*k + B**2*k - 2*A**2 - 2*A*B + B**2)*l**2
        + ((A - B)*(192*A**2*a**2*k**3 + 336*A**2*a**2*k**2 - 96*A*B*a**2*k**2 + 48*B**2*a**2*k**2 - 192*A*B*a**2*k
        + 96*B**2*a**2*k - 60*A**2*a**2 - 72*A*B*a**2 + 36*B**2*a**2 + 8*a*c - 3*b**2)*l)/(2*a)
        + ((2*k + 1)*(A - B)*(16*A**2*a**2*k**2 - 32*A*B*a**2*k**2 + 16*B**2*a**2*k**2 + 16*A**2*a**2*k - 32*A*B*a**2*k
        + 16*B**2*a**2*k + 4*A**2*a**2 - 8*A*B*a**2 + 4*B**2*a**2 + 8*a*c - 3*b**2))/(4*a)
    )
    G5 = (
        256*A**3*a*k*(A - B)*l**6 + 384*A**2*a*k*(A - B)*(2*k*A + 2*A - B)*l**5
        + 16*(A - B)*(48*A**3*a*k**3 + 120*A**3*a*k**2 - 60*A**2*B*a*k**2 + 66*A**3*a*k - 54*A**2*B*a*k + 12*A*B**2*a*k
        + 8*A**2*B*a + 3*A**2*b*k + 8*A*B**2*a - 8*B**3*a)*l**4 + 16*(A - B)*(16*A**3*a*k**4 + 96*A**3*a*k**3 - 48*A**2*B*a*k**3
        + 132*A**3*a*k**2 - 108*A**2*B*a*k**2 + 24*A*B**2*a*k**2 + 52*A**3*a*k - 38*A**2*B*a*k + 6*A**2*b*k**2 + 34*A*B**2*a*k
        - 18*B**3*a*k - 8*A**3*a + 8*A**2*B*a + 6*A**2*b*k + 20*A*B**2*a - 3*A*B*b*k - 12*B**3*a - A**2*b - A*B*b
        + 2*B**2*b)*l**3 + 4*(A - B)*(96*A**3*a*k**4 - 48*A**2*B*a*k**4 + 304*A**3*a*k**3 - 272*A**2*B*a*k**3 + 64*A*B**2*a*k**3
        + 312*A**3*a*k**2 - 276*A**2*B*a*k**2 + 12*A**2*b*k**3 + 156*A*B**2*a*k**2 - 60*B**3*a*k**2 + 60*A**3*a*k - 60*A**2*B*a*k
        + 36*A**2*b*k**2 + 162*A*B**2*a*k - 18*A*B*b*k**2 - 78*B**3*a*k - 48*A**3*a - 12*A**2*B*a + 15*A**2*b*k + 60*A*B**2*a
        - 21*A*B*b*k - 24*B**3*a + 15*B**2*b*k - 6*A**2*b - 9*A*B*b + 2*A*c*k + 9*B**2*b - 2*B*c)*l**2 + (160*A**4*a*k**4
        - 384*A**3*B*a*k**4 + 288*A**2*B**2*a*k**4 - 64*A*B**3*a*k**4 + 448*A**4*a*k**3 - 928*A**3*B*a*k**3 + 768*A**2*B**2*a*k**3
        - 384*A*B**3*a*k**3 + 96*B**4*a*k**3 + 336*A**4*a*k**2 - 672*A**3*B*a*k**2 + 48*A**3*b*k**3 + 744*A**2*B**2*a*k**2 - 72*A**2*B*b*k**3
        - 576*A*B**3*a*k**2 + 24*A*B**2*b*k**3 + 168*B**4*a*k**2 - 48*A**4*a*k - 120*A**3*B*a*k + 72*A**3*b*k**2 + 432*A**2*B**2*a*k
        - 144*A**2*B*b*k**2 - 360*A*B**3*a*k + 108*A*B**2*b*k**2 + 96*B**4*a*k - 36*B**3*b*k**2 - 62*A**4*a + 16*A**3*B*a + 12*A**3*b*k
        + 108*A**2*B**2*a - 78*A**2*B*b*k + 8*A**2*c*k**2 - 80*A*B**3*a + 108*A*B**2*b*k - 8*A*B*c*k**2 + 18*B**4*a - 42*B**3*b*k
        - 6*A**3*b - 12*A**2*B*b + 8*A**2*c*k + 30*A*B**2*b - 20*A*B*c*k - 12*B**3*b + 12*B**2*c*k + 2*A**2*c - 8*A*B*c + 6*B**2*c
        + 2*A*d - 2*B*d - 4*e)*l - 128*A*B**3*a*k**3 - 96*A**3*B*a*k**2 + 144*A**2*B**2*a*k**2 - 24*A**2*B*b*k**3 - 96*A*B**3*a*k**2
        - 32*A**3*B*a*k + 48*A**2*B**2*a*k - 36*A**2*B*b*k**2 - 32*A*B**3*a*k + 36*A*B**2*b*k**2 - 18*A**2*B*b*k + 18*A*B**2*b*k
        - 8*A*B*c*k**2 - 8*A*B*c*k - 64*A**3*B*a*k**4 + 96*A**2*B**2*a*k**4 - 64*A*B**3*a*k**4 - 128*A**3*B*a*k**3 + 192*A**2*B**2*a*k**3
        - 2*e
    )
    G6 = (
        96*a*(A - B)*(A*k + B)*l**2 + 12*(A - B)*(8*A*a*k**2 + 8*A*a*k + 12*B*a*k + 2*A*a + 10*B*a + b)*l
        + 48*A**2*a*k**2 - 48*B**2*a*k**2 + 48*A**2*a*k + 48*A*B*a*k - 96*B**2*a*k + 12*A**2*a + 24*A*B*a + 12*A*b*k
        - 36*B**2*a - 12*B*b*k + 6*A*b - 6*B*b - 2*c
    )
    G7 = (
        96*a*(A - B)*(A*k + B)*l**2 + 12*(A - B)*(8*A*a*k**2 + 16*A*a*k + 4*B*a*k - 2*A*a + 14*B*a - b)*l
        + 96*A**2*a*k**2 - 96*A*B*a*k**2 + 96*A**2*a*k - 48*A*B*a*k - 48*B**2*a*k - 24*A**2*a + 96*A*B*a - 72*B**2*a
        - 12*A*b + 12*B*b - 2*c
    )
    G8 = (
        192*A**2*a*k*(A - B)*l**4 + 64*a*(A - B)*(6*A**2*k**2 + 6*A**2*k + 3*A*B*k - A**2 - B*A + 2*B**2)*l**3
        + 24*(A - B)*(8*A**2*a*k**3 + 24*A**2*a*k**2 + 12*A*B*a*k**2 + 10*A**2*a*k + 10*A*B*a*k + 10*B**2*a*k - 4*A**2*a
        - 2*A*B*a + A*b*k + 10*B**2*a + B*b)*l**2 + 2*(A - B)*(96*A**2*a*k**3 + 48*A*B*a*k**3 + 144*A**2*a*k**2
        + 144*A*B*a*k**2 + 72*B**2*a*k**2 + 24*A**2*a*k + 84*A*B*a*k + 12*A*b*k**2 + 156*B**2*a*k - 12*A**2*a + 12*A*B*a
        + 12*A*b*k + 72*B**2*a + 18*B*b*k + 3*A*b + 15*B*b + 2*c)*l + 32*A**3*a*k**3 - 32*B**3*a*k**3 + 48*A**3*a*k**2
        + 48*A**2*B*a*k**2 - 96*B**3*a*k**2 + 24*A**3*a*k + 48*A**2*B*a*k + 12*A**2*b*k**2 + 24*A*B**2*a*k - 96*B**3*a*k
        - 12*B**2*b*k**2 + 4*A**3*a + 12*A**2*B*a + 12*A**2*b*k + 12*A*B**2*a + 12*A*B*b*k - 28*B**3*a - 24*B**2*b*k
        + 3*A**2*b + 6*A*B*b + 4*A*c*k - 9*B**2*b - 4*B*c*k + 2*A*c - 2*B*c - d
    )
    G9 = (
        256*A**3*a*k*(A - B)*l**6 + 384*A**2*a*k*(A - B)*(2*A*k + 2*A + B)*l**5
        + 16*(A - B)*(48*A**3*a*k**3 + 120*A**3*a*k**2 + 60*A**2*B*a*k**2 + 66*A**3*a*k + 66*A**2*B*a*k + 12*A*B**2*a*k
        - 8*A**2*B*a + 3*A**2*b*k - 8*A*B**2*a + 8*B**3*a)*l**4 + 16*(A - B)*(16*A**3*a*k**4 + 96*A**3*a*k**3 + 48*A**2*B*a*k**3
        + 132*A**3*a*k**2 + 132*A**2*B*a*k**2 + 24*A*B**2*a*k**2 + 52*A**3*a*k + 62*A**2*B*a*k + 6*A**2*b*k**2 + 14*A*B**2*a*k
        + 18*B**3*a*k - 8*A**3*a - 24*A**2*B*a + 6*A**2*b*k - 12*A*B**2*a + 3*A*B*b*k + 20*B**3*a - A**2*b - A*B*b
        + 2*B**2*b)*l**3 + 4*(A - B)*(96*A**3*a*k**4 + 48*A**2*B*a*k**4 + 304*A**3*a*k**3 + 304*A**2*B*a*k**3 + 64*A*B**2*a*k**3
        + 312*A**3*a*k**2 + 420*A**2*B*a*k**2 + 12*A**2*b*k**3 + 132*A*B**2*a*k**2 + 60*B**3*a*k**2 + 60*A**3*a*k + 60*A**2*B*a*k
        + 36*A**2*b*k**2 + 42*A*B**2*a*k + 18*A*B*b*k**2 + 138*B**3*a*k - 48*A**3*a - 84*A**2*B*a + 15*A**2*b*k - 12*A*B**2*a
        + 15*A*B*b*k + 72*B**3*a + 15*B**2*b*k - 6*A**2*b - 3*A*B*b + 2*A*c*k + 15*B**2*b + 2*B*c)*l**2 + (160*A**4*a*k**4
        - 96*A**2*B**2*a*k**4 - 64*A*B**3*a*k**4 + 448*A**4*a*k**3 + 160*A**3*B*a*k**3 - 384*A**2*B**2*a*k**3 - 128*A*B**3*a*k**3
        - 96*B**4*a*k**3 + 336*A**4*a*k**2 + 192*A**3*B*a*k**2 + 48*A**3*b*k**3 - 216*A**2*B**2*a*k**2 - 24*A**2*B*b*k**3 - 24*A*B**2*b*k**3
        - 312*B**4*a*k**2 - 48*A**4*a*k + 24*A**3*B*a*k + 72*A**3*b*k**2 + 192*A**2*B**2*a*k + 168*A*B**3*a*k - 36*A*B**2*b*k**2
        - 336*B**4*a*k - 36*B**3*b*k**2 - 62*A**4*a - 16*A**3*B*a + 12*A**3*b*k + 108*A**2*B**2*a + 30*A**2*B*b*k + 8*A**2*c*k**2
        + 80*A*B**3*a + 36*A*B**2*b*k - 8*A*B*c*k**2 - 110*B**4*a - 78*B**3*b*k - 6*A**3*b + 12*A**2*B*b + 8*A**2*c*k
        + 30*A*B**2*b + 4*A*B*c*k - 36*B**3*b - 12*B**2*c*k + 2*A**2*c + 8*A*B*c - 10*B**2*c + 2*A*d - 2*B*d - 4*e)*l
        + 16*A**4*a*k**4 - 16*B**4*a*k**4 + 32*A**4*a*k**3 + 32*A**3*B*a*k**3 - 64*B**4*a*k**3 + 24*A**4*a*k**2 + 48*A**3*B*a*k**2
        + 8*A**3*b*k**3 + 24*A**2*B**2*a*k**2 - 96*B**4*a*k**2 - 8*B**3*b*k**3 + 8*A**4*a*k + 24*A**3*B*a*k + 12*A**3*b*k**2 + 24*A**2*B**2*a*k
        + 12*A**2*B*b*k**2 + 8*A*B**3*a*k - 64*B**4*a*k - 24*B**3*b*k**2 + A**4*a + 4*A**3*B*a + 6*A**3*b*k + 6*A**2*B**2*a + 12*A**2*B*b*k
        + 4*A**2*c*k**2 + 4*A*B**3*a + 6*A*B**2*b*k - 15*B**4*a - 24*B**3*b*k - 4*B**2*c*k**2 + A**3*b + 3*A**2*B*b + 4*A**2*c*k
        + 3*A*B**2*b + 4*A*B*c*k - 7*B**3*b - 8*B**2*c*k + A**2*c + 2*A*B*c + 2*A*d*k - 3*B**2*c - 2*B*d*k + A*d - B*d - 3*e
    )
    G10 = (
        192*A**2*a*k*(A - B)*l**4 + 64*a*(A - B)*(6*A**2*k**2 + 12*A**2*k - 3*A*B*k + A**2 + B*A - 2*B**2)*l**3
        + 24*(A - B)*(8*A**2*a*k**3 + 48*A**2*a*k**2 - 12*A*B*a*k**2 + 54*A**2*a*k - 18*A*B*a*k - 6*B**2*a*k
        + 8*A**2*a + 10*A*B*a + A*b*k - 14*B**2*a + B*b)*l**2 + 2*(A - B)*(192*A**2*a*k**3 - 48*A*B*a*k**3 + 624*A**2*a*k**2
        - 240*A*B*a*k**2 - 24*B**2*a*k**2 + 528*A**2*a*k - 132*A*B*a*k + 12*A*b*k**2 - 132*B**2*a*k + 84*A**2*a + 132*A*B*a
        + 24*A*b*k - 144*B**2*a + 6*B*b*k - 3*A*b + 21*B*b - 2*c)*l + 2*(A - B)*(96*A**2*a*k**3 - 48*A*B*a*k**3
        + 240*A**2*a*k**2 - 96*A*B*a*k**2 - 24*B**2*a*k**2 + 168*A**2*a*k - 12*A*B*a*k + 12*A*b*k**2 - 60*B**2*a*k + 20*A**2*a
        + 44*A*B*a + 12*A*b*k - 40*B**2*a + 6*B*b*k - 3*A*b + 9*B*b - 2*c)
    )
    G11 = (
        192*A**2*a*k*(A - B)*l**4 + 64*a*(A - B)*(6*A**2*k**2 + 12*A**2*k + 3*A*B*k + A**2 + B*A - 2*B**2)*l**3
        + 24*(A - B)*(8*A**2*a*k**3 + 48*A**2*a*k**2 + 12*A*B*a*k**2 + 54*A**2*a*k + 30*A*B*a*k - 6*B**2*a*k + 8*A**2*a
        + 6*A*B*a + A*b*k - 18*B**2*a - B*b)*l**2 + 2*(A - B)*(192*A**2*a*k**3 + 48*A*B*a*k**3 + 624*A**2*a*k**2
        + 336*A*B*a*k**2 - 24*B**2*a*k**2 + 528*A**2*a*k + 420*A*B*a*k + 12*A*b*k**2 - 156*B**2*a*k + 84*A**2*a + 36*A*B*a
        + 24*A*b*k - 240*B**2*a - 6*B*b*k - 3*A*b - 27*B*b - 2*c)*l + 2*(A - B)*(96*A**2*a*k**3 + 48*A*B*a*k**3
        + 240*A**2*a*k**2 + 192*A*B*a*k**2 - 24*B**2*a*k**2 + 168*A**2*a*k + 156*A*B*a*k + 12*A*b*k**2 - 84*B**2*a*k
        + 20*A**2*a - 4*A*B*a + 12*A*b*k - 88*B**2*a - 6*B*b*k - 3*A*b - 15*B*b - 2*c)
    )
    G12 = (
        256*A**3*a*k*(A - B)*l**6 + 384*A**2*a*k*(A - B)*(2*A*k + 4*A - B)*l**5
        + 16*(A - B)*(48*A**3*a*k**3 + 240*A**3*a*k**2 - 60*A**2*B*a*k**2 + 246*A**3*a*k - 114*A**2*B*a*k + 12*A*B**2*a*k
        - 8*A**2*B*a + 3*A**2*b*k - 8*A*B**2*a + 8*B**3*a)*l**4 + 16*(A - B)*(16*A**3*a*k**4 + 192*A**3*a*k**3 - 48*A**2*B*a*k**3
        + 492*A**3*a*k**2 - 228*A**2*B*a*k**2 + 24*A*B**2*a*k**2 + 344*A**3*a*k - 238*A**2*B*a*k + 6*A**2*b*k**2 + 26*A*B**2*a*k
        + 14*B**3*a*k + 8*a*A**3 - 24*A**2*B*a + 12*A**2*b*k - 36*A*B**2*a - 3*A*B*b*k + 28*B**3*a + A**2*b + A*B*b
        - 2*B**2*b)*l**3 + 4*(A - B)*(192*A**3*a*k**4 - 48*A**2*B*a*k**4 + 1168*A**3*a*k**3 - 560*A**2*B*a*k**3 + 64*A*B**2*a*k**3
        + 2064*A**3*a*k**2 - 1380*A**2*B*a*k**2 + 12*A**2*b*k**3 + 204*A*B**2*a*k**2 + 36*B**3*a*k**2 + 1164*A**3*a*k
        - 1020*A**2*B*a*k + 72*A**2*b*k**2 + 6*A*B**2*a*k - 18*A*B*b*k**2 + 150*B**3*a*k + 96*a*A**3 - 84*A**2*B*a
        + 81*A**2*b*k - 228*A*B**2*a - 27*A*B*b*k + 144*B**3*a - 9*B**2*b*k + 12*A**2*b + 15*A*B*b + 2*A*c*k - 21*B**2*b
        + 2*B*c)*l**2 + (736*A**4*a*k**4 - 1152*A**3*B*a*k**4 + 480*A**2*B**2*a*k**4 - 64*A*B**3*a*k**4 + 3200*A**4*a*k**3
        - 5472*A**3*B*a*k**3 + 2688*A**2*B**2*a*k**3 - 384*A*B**3*a*k**3 - 32*B**4*a*k**3 + 4560*A**4*a*k**2 - 8352*A**3*B*a*k**2
        + 96*A**3*b*k**3 + 4248*A**2*B**2*a*k**2 - 120*A**2*B*b*k**3 - 192*A*B**3*a*k**2 + 24*A*B**2*b*k**3 - 264*B**4*a*k**2
        + 2400*A**4*a*k - 4488*A**3*B*a*k + 312*A**3*b*k**2 + 1680*A**2*B**2*a*k - 432*A**2*B*b*k**2 + 936*A*B**3*a*k
        + 108*A*B**2*b*k**2 - 528*B**4*a*k + 12*B**3*b*k**2 + 350*A**4*a - 416*A**3*B*a + 264*A**3*b*k - 540*A**2*B**2*a
        - 330*A**2*B*b*k + 8*A**2*c*k**2 + 928*A*B**3*a - 8*A*B*c*k**2 - 322*B**4*a + 66*B**3*b*k + 42*A**3*b + 24*A**2*B*b
        + 16*A**2*c*k - 138*A*B**2*b - 12*A*B*c*k + 72*B**3*b - 4*B**2*c*k - 2*A**2*c + 16*A*B*c - 14*B**2*c - 2*A*d
        + 2*B*d - 4*e)*l + 224*A**4*a*k**4 - 448*A**3*B*a*k**4 + 288*A**2*B**2*a*k**4 - 64*A*B**3*a*k**4 + 832*A**4*a*k**3
        - 1632*A**3*B*a*k**3 + 960*A**2*B**2*a*k**3 - 128*A*B**3*a*k**3 - 32*B**4*a*k**3 + 1104*A**4*a*k**2 - 2064*A**3*B*a*k**2
        + 48*A**3*b*k**3 + 984*A**2*B**2*a*k**2 - 72*A**2*B*b*k**3 + 96*A*B**3*a*k**2 + 24*A*B**2*b*k**3 - 120*B**4*a*k**2 + 592*A**4*a*k
        - 968*A**3*B*a*k + 120*A**3*b*k**2 + 168*A**2*B**2*a*k - 168*A**2*B*b*k**2 + 360*A*B**3*a*k + 36*A*B**2*b*k**2 - 152*B**4*a*k
        + 12*B**3*b*k**2 + 94*A**4*a - 80*A**3*B*a + 84*A**3*b*k - 156*A**2*B**2*a - 90*A**2*B*b*k + 8*A**2*c*k**2 + 208*A*B**3*a
        - 24*A*B**2*b*k - 8*A*B*c*k**2 - 66*B**4*a + 30*B**3*b*k + 10*A**3*b + 12*A**2*B*b + 8*A**2*c*k - 42*A*B**2*b - 4*A*B*c*k
        + 20*B**3*b - 4*B**2*c*k - 2*A**2*c + 8*A*B*c - 6*B**2*c - 2*A*d + 2*B*d - 4*e
    )
    polys = (G1, G2, G3, G4, G5, G6, G7, G8, G9, G10, G11, G12)
    return ThresholdPolys("G", polys)


def appendix_polys(size: int, p: ParamTuple) -> ThresholdPolys:
    return h_family(p) if size == 4 else g_family(p)
