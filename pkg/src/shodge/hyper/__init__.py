"""Numeric and symbolic tools for the Gauss hypergeometric function."""
from .hyp2f1 import HyperParams, eval_hyper
from .numeric import BigComplex, eval_beta, eval_gamma

__all__ = ["BigComplex", "HyperParams", "eval_beta", "eval_gamma", "eval_hyper"]
