"""Rational functions in one variable (lambda) over Q."""
from __future__ import annotations

from fractions import Fraction

from .polynomial import UniPoly, poly_gcd


class RationalFunction:
    """Reduced quotient num/den of rational polynomials with monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, _reduced: bool = False):
        if not isinstance(num, UniPoly):
            num = UniPoly([num])
        if not isinstance(den, UniPoly):
            den = UniPoly([den])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UniPoly([1])
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
                lc = den.lead()
                if lc != 1:
                    num, den = num.scale(1 / lc), den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def var(cls) -> "RationalFunction":
        return cls(UniPoly([0, 1]))

    @classmethod
    def from_coeffs(cls, num, den=(1,)) -> "RationalFunction":
        return cls(UniPoly([Fraction(c) for c in num]), UniPoly([Fraction(c) for c in den]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self):
        """The value as a Fraction if constant, else None."""
        if self.num.degree <= 0 and self.den.degree == 0:
            return Fraction(self.num[0])
        return None

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            return RationalFunction(self.num + self.den * other, self.den, _reduced=True)
        other = self._coerce(other)
        if other.den == self.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFunction()
            return RationalFunction(self.num.scale(Fraction(other)), self.den, _reduced=True)
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num ** e, self.den ** e, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        n = self.num.to_str("lambda")
        if self.den.degree == 0:
            return n
        return f"({n})/({self.den.to_str('lambda')})"


LAMBDA = RationalFunction.var()
