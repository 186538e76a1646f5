"""Error-tracked complex numbers and Gamma/Beta evaluation on top of mpmath."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import mpmath
from mpmath import mp

from ..errors import PoleOfGamma

GUARD_DIGITS = 10


def mpq(x) -> mpmath.mpf:
    """Rational (or int) to mpf at the current working precision."""
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def _ulp(v) -> mpmath.mpf:
    return abs(v) * mpmath.ldexp(1, -mp.prec + 1)


class BigComplex:
    """A complex value with an absolute error bound.

    Arithmetic adds the propagated bound plus one unit of rounding at the
    current working precision.  Callers fix the precision with
    ``mpmath.workdps`` around every computation.
    """

    __slots__ = ("value", "error")

    def __init__(self, value, error=0):
        self.value = mpmath.mpc(value)
        self.error = mpmath.mpf(error)

    @classmethod
    def exact(cls, x) -> "BigComplex":
        if isinstance(x, Fraction):
            return cls(mpq(x), _ulp(mpq(x)))
        return cls(x, 0)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def __abs__(self):
        return abs(self.value)

    def _wrap(self, other) -> "BigComplex":
        if isinstance(other, BigComplex):
            return other
        if isinstance(other, (Fraction, int)):
            v = mpq(other)
            return BigComplex(v, 0 if isinstance(other, int) else _ulp(v))
        return BigComplex(other, _ulp(other))

    def __add__(self, other):
        o = self._wrap(other)
        v = self.value + o.value
        return BigComplex(v, self.error + o.error + _ulp(v))

    __radd__ = __add__

    def __neg__(self):
        return BigComplex(-self.value, self.error)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        v = self.value * o.value
        err = abs(self.value) * o.error + abs(o.value) * self.error + self.error * o.error
        return BigComplex(v, err + _ulp(v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        denom = abs(o.value) - o.error
        if denom <= 0:
            raise ZeroDivisionError("divisor not bounded away from zero")
        v = self.value / o.value
        err = (self.error + abs(v) * o.error) / denom
        return BigComplex(v, err + _ulp(v))

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def rel_error(self):
        a = abs(self.value)
        return self.error / a if a else mpmath.inf

    def __repr__(self):
        return f"BigComplex({mpmath.nstr(self.value, 20)}, err={mpmath.nstr(self.error, 3)})"


def _is_pole(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


def eval_gamma(a, precision: int) -> BigComplex:
    """Gamma at a rational point.

    The value comes from mpmath.gamma evaluated with guard digits; the bound
    is a few units in the last requested digit.
    """
    a = Fraction(a)
    if _is_pole(a):
        raise PoleOfGamma(f"Gamma has a pole at {a}")
    with mpmath.workdps(precision + GUARD_DIGITS):
        v = mpmath.gamma(mpq(a))
        return BigComplex(v, abs(v) * mpmath.mpf(10) ** (-(precision + GUARD_DIGITS - 2)))


def eval_beta(args: Iterable, precision: int) -> BigComplex:
    """Multi-parameter Beta  prod Gamma(b_i) / Gamma(sum b_i)."""
    args = [Fraction(x) for x in args]
    with mpmath.workdps(precision + GUARD_DIGITS):
        acc = BigComplex(1)
        for x in args:
            acc = acc * eval_gamma(x, precision + GUARD_DIGITS)
        s = sum(args, Fraction(0))
        if _is_pole(s):
            return BigComplex(0, 0)
        return acc / eval_gamma(s, precision + GUARD_DIGITS)
