from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, divisors, embed_cyclotomic, euler_totient
from .linalg import rational_nullspace, rref, same_span
from .polynomial import UniPoly, ext_gcd, poly_gcd
from .ratfun import LAMBDA, RationalFunction

__all__ = [
    "CyclotomicNumber",
    "LAMBDA",
    "RationalFunction",
    "UniPoly",
    "cyclotomic_polynomial",
    "divisors",
    "embed_cyclotomic",
    "euler_totient",
    "ext_gcd",
    "poly_gcd",
    "rational_nullspace",
    "rref",
    "same_span",
]
