"""Exact certification of nonnegative q-series coefficients for four or five moduli."""

__version__ = "0.1.0"
