"""Exact computations for multi-parameter quantum groups."""

__version__ = "0.1.0"
