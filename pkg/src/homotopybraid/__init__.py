"""Exact computation in braid groups, reduced free groups and homotopy
braid groups: normal forms, decision procedures and verification reports."""

from . import artin, bhat3, braidword, burau, linrep, redfree

__all__ = ["artin", "bhat3", "braidword", "burau", "linrep", "redfree"]
__version__ = "0.1.0"
