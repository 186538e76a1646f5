"""Cyclotomic polynomials and exact arithmetic in Q(zeta_N)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from ..errors import NonDivisibleOrder
from .polynomial import UniPoly, ext_gcd


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_totient(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> UniPoly:
    """Phi_n by exact division of x^n - 1 by Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError("n must be positive")
    p = UniPoly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        p = p.exact_div(cyclotomic_polynomial(d))
    return p


class CyclotomicNumber:
    """Element of Q(zeta_N) stored as a residue modulo Phi_N, length phi(N)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 1:
            raise ValueError("order must be positive")
        deg = euler_totient(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = list(UniPoly(cs) % cyclotomic_polynomial(order))
        cs = cs + [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        power %= order
        return cls(order, [0] * power + [1])

    @classmethod
    def rational(cls, order: int, value) -> "CyclotomicNumber":
        return cls(order, [value])

    def poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def rational_value(self):
        """The value as a Fraction if it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def _align(self, other):
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.rational(self.order, other)
        if other.order == self.order:
            return self, other
        n = self.order * other.order // gcd(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        a, b = self._align(other)
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._align(other)
        return CyclotomicNumber(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [c * other for c in self.coeffs])
        a, b = self._align(other)
        prod = (a.poly() * b.poly()) % cyclotomic_polynomial(a.order)
        return CyclotomicNumber(a.order, prod.coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = ext_gcd(self.poly(), cyclotomic_polynomial(self.order))
        # Phi_N is irreducible, so g = 1
        return CyclotomicNumber(self.order, s.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        a, b = self._align(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.rational(self.order, other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        r = self.rational_value()
        if r is not None:
            return hash(r)
        return hash((self.order, self.coeffs))

    def embed(self, target_order: int) -> "CyclotomicNumber":
        return embed_cyclotomic(self, target_order)

    def to_complex(self, ctx=None):
        """Numeric value using mpmath at the current working precision."""
        import mpmath

        z = mpmath.expjpi(mpmath.mpf(2) / self.order)
        acc = mpmath.mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
        return acc

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.poly().to_str(f"zeta{self.order}")


def embed_cyclotomic(value: CyclotomicNumber, target_order: int) -> CyclotomicNumber:
    """Rewrite ``value`` inside Q(zeta_target) via zeta_N = zeta_target^(target/N)."""
    if target_order % value.order:
        raise NonDivisibleOrder(f"{value.order} does not divide {target_order}")
    if target_order == value.order:
        return value
    step = target_order // value.order
    cs = [Fraction(0)] * (step * (len(value.coeffs) - 1) + 1)
    for i, c in enumerate(value.coeffs):
        cs[i * step] = c
    return CyclotomicNumber(target_order, cs)
