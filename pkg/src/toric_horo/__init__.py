"""Exact computations linking rational polyhedral norms and toric varieties."""

__version__ = "0.1.0"
