"""Exact cohomology computations for configuration spaces of surfaces."""

__version__ = "0.1.0"
