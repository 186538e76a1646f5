"""Minimal polynomial recovery from a high-precision value via LLL."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath

from ..errors import NotFound
from ..exact.polynomial import UniPoly, integer_content
from ..hyper.numeric import GUARD_DIGITS, BigComplex
from .lll import IntegerLattice, lll_reduce

NOT_FOUND_LABEL = "no relation detected at this precision/height"


@dataclass(frozen=True)
class MinPolyResult:
    polynomial: UniPoly
    residual: mpmath.mpf
    certified: bool

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    def int_coeffs(self) -> list[int]:
        return [int(c) for c in self.polynomial.coeffs]

    def __str__(self):
        return self.polynomial.to_str("z")


def _height(coeffs) -> int:
    return max(abs(c) for c in coeffs)


def significance_bound(precision: int, degree: int, is_complex: bool) -> int:
    """Largest height a detected relation may have and still be meaningful.

    LLL on d+1 random numbers scaled by 10^P finds relations of height about
    10^(rP/(d+1)) (r = number of real constraint rows), so only relations
    far below that, here below its square root, are kept.
    """
    r = 2 if is_complex else 1
    return 10 ** (r * precision // (2 * (degree + 1)))


def _relation_at_degree(powers, degree: int, scale, is_complex: bool):
    rows = []
    for i in range(degree + 1):
        row = [0] * (degree + 1)
        row[i] = 1
        v = powers[i]
        row.append(int(mpmath.nint(scale * v.real)))
        if is_complex:
            row.append(int(mpmath.nint(scale * v.imag)))
        rows.append(row)
    reduced = lll_reduce(IntegerLattice(rows))
    return [list(r[: degree + 1]) for r in reduced.basis]


def _eval_residual(coeffs, v) -> mpmath.mpf:
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * v + c
    return abs(acc)


def minimal_polynomial(value, max_degree: int, precision: int, height_bound: int | None = None) -> MinPolyResult:
    """Lowest-degree integer polynomial vanishing at ``value``, certified.

    Certification: |p(v)| < 10^(-P/4), height <= height_bound (when given)
    and height <= significance_bound.  Raises NotFound otherwise; NotFound is
    evidence of transcendence at this precision, never a proof.
    """
    if not isinstance(value, BigComplex):
        value = BigComplex(value, 0)
    with mpmath.workdps(precision + GUARD_DIGITS):
        if value.error > mpmath.mpf(10) ** (-(precision // 2)):
            raise ValueError("value error bound too large for the requested precision")
        v = +value.value
        is_complex = abs(v.imag) > mpmath.mpf(10) ** (-(precision - GUARD_DIGITS))
        if not is_complex:
            v = mpmath.mpc(v.real, 0)
        scale = mpmath.mpf(10) ** precision
        powers = [mpmath.mpc(1)]
        for _ in range(max_degree):
            powers.append(powers[-1] * v)
        tol = mpmath.mpf(10) ** (-(precision / 4))
        for degree in range(1, max_degree + 1):
            bound = significance_bound(precision, degree, is_complex)
            if height_bound is not None:
                bound = min(bound, int(height_bound))
            for cand in _relation_at_degree(powers, degree, scale, is_complex):
                if cand[-1] == 0 or _height(cand) > bound:
                    continue
                g = 0
                for c in cand:
                    g = gcd(g, c)
                cand = [c // g for c in cand]
                if cand[-1] < 0:
                    cand = [-c for c in cand]
                res = _eval_residual(cand, v)
                if res < tol:
                    poly = integer_content(UniPoly([Fraction(c) for c in cand]))
                    return MinPolyResult(poly, res, True)
    raise NotFound(f"{NOT_FOUND_LABEL} (degree <= {max_degree}, {precision} digits)")


@dataclass(frozen=True)
class PowerRelation:
    """Q(v^exponent) = 0 with Q certified; v is then algebraic of degree <= exponent * deg Q."""

    exponent: int
    relation: MinPolyResult

    def __str__(self):
        var = "z" if self.exponent == 1 else f"z^{self.exponent}"
        return f"{self.relation.polynomial.to_str('w')}  (w = {var})"


def power_relation(value, max_degree: int, precision: int, exponents=(1, 2, 3, 4, 6),
                   height_bound: int | None = None) -> PowerRelation:
    """Search v, v^2, v^3, ... for a certified low-degree relation.

    Values with a sparse minimal polynomial in z^e (typical of Darboux-type
    evaluations) need far less precision this way than a direct search at
    degree e * max_degree.
    """
    if not isinstance(value, BigComplex):
        value = BigComplex(value, 0)
    for e in exponents:
        with mpmath.workdps(precision + GUARD_DIGITS):
            w = value
            for _ in range(e - 1):
                w = w * value
        try:
            return PowerRelation(e, minimal_polynomial(w, max_degree, precision, height_bound))
        except NotFound:
            continue
    raise NotFound(f"{NOT_FOUND_LABEL} (powers {tuple(exponents)}, degree <= {max_degree}, {precision} digits)")
