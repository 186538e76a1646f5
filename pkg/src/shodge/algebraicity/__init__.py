"""Integer relation detection and minimal polynomials of numeric values."""
from .lll import IntegerLattice, lll_reduce
from .minpoly import MinPolyResult, PowerRelation, minimal_polynomial, power_relation

__all__ = ["IntegerLattice", "MinPolyResult", "lll_reduce", "minimal_polynomial", "PowerRelation", "power_relation"]
