"""Threshold polynomial families, built two independent ways."""

from .closed_forms import appendix_polys, g_family, h_family
from .crosscheck import CrosscheckReport, crosscheck, random_crosscheck, random_params
from .derive import DerivationMismatch, derive_case_polys, derive_threshold_polys, derived_family
from .params import (
    BELOW_RANGE,
    CaseBound,
    InvalidParams,
    ParamTuple,
    ThresholdPolys,
    locate_case,
)

__all__ = [
    "BELOW_RANGE",
    "CaseBound",
    "CrosscheckReport",
    "DerivationMismatch",
    "InvalidParams",
    "ParamTuple",
    "ThresholdPolys",
    "appendix_polys",
    "crosscheck",
    "derive_case_polys",
    "derive_threshold_polys",
    "derived_family",
    "g_family",
    "h_family",
    "locate_case",
    "random_crosscheck",
    "random_params",
]
