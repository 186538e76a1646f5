"""Gauss hypergeometric function F(a,b,c;z) for rational parameters.

Routes:
  * a or b a non-positive integer: the terminating polynomial;
  * |z| <= 1/2: the Gauss series with a rigorous geometric tail bound;
  * otherwise the Euler integral
        F = 1/B(a,c-a) int_0^1 t^(a-1) (1-t)^(c-a-1) (1-zt)^(-b) dt
    by tanh-sinh, which needs c > a > 0 (or c > b > 0 after swapping);
  * failing that, four Euler integrals at shifted parameters followed by
    three-term recurrences in a and c.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

import mpmath

from ..errors import BranchCut, NonNormalizable
from .numeric import GUARD_DIGITS, BigComplex, _ulp, eval_beta, mpq
from .quadrature import tanh_sinh


@dataclass(frozen=True)
class HyperParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c.denominator == 1 and self.c <= 0:
            raise ValueError("c must not be a non-positive integer")

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"F({self.a},{self.b},{self.c})"


def _nonpos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def _as_bigcomplex(z) -> BigComplex:
    if isinstance(z, BigComplex):
        return z
    if isinstance(z, (Fraction, int)):
        return BigComplex.exact(Fraction(z))
    return BigComplex(z, 0)


def _check_branch(z: BigComplex) -> None:
    v = z.value
    if v.imag == 0 and v.real >= 1:
        raise BranchCut(f"z = {mpmath.nstr(v.real, 10)} lies on the cut [1, oo)")


def _polynomial(a, b, c, z) -> BigComplex:
    n = int(-a)
    term = mpmath.mpc(1)
    total = mpmath.mpc(1)
    mag = mpmath.mpf(1)
    for k in range(n):
        term = term * (mpq(a) + k) * (mpq(b) + k) / ((mpq(c) + k) * (k + 1)) * z
        total += term
        mag += abs(term)
    return BigComplex(total, mag * mpmath.ldexp(1, -mpmath.mp.prec + 4) * (n + 1))


def _series(a, b, c, z) -> BigComplex:
    am, bm, cm = mpq(a), mpq(b), mpq(c)
    az = abs(z)
    eps = mpmath.ldexp(1, -mpmath.mp.prec)
    term = mpmath.mpc(1)
    total = mpmath.mpc(1)
    mag = mpmath.mpf(1)
    k = 0
    while True:
        term = term * (am + k) * (bm + k) / ((cm + k) * (k + 1)) * z
        k += 1
        total += term
        mag += abs(term)
        if k > 8 and cm + k > 0:
            ra = max(mpmath.mpf(1), (abs(am) + k) / (k + 1))
            rb = max(mpmath.mpf(1), (abs(bm) + k) / (cm + k))
            rho = az * ra * rb
            if rho < 1:
                tail = abs(term) * rho / (1 - rho)
                if tail <= eps * abs(total):
                    return BigComplex(total, tail + mag * eps * 4)
        if k > 10 ** 6:
            raise RuntimeError("series did not converge")


def _euler(a, b, c, z, precision) -> BigComplex:
    am1 = mpq(a) - 1
    cam1 = mpq(c - a) - 1
    mb = -mpq(b)

    def f(t, tc):
        return t ** am1 * tc ** cam1 * (1 - z * t) ** mb

    val, err = tanh_sinh(f)
    beta = eval_beta([a, c - a], precision)
    return BigComplex(val, err) / beta


def _euler_ok(a, c) -> bool:
    return c > a > 0


def _shift_eval(a, b, c, z, precision) -> BigComplex:
    """Reach F(a,b,c) from valid Euler integrals by recurrences in a and c."""
    for x, y in ((a, b), (b, a)):
        if x.denominator == 1 and x <= 0:
            continue
        x1 = x - floor(x) if x.denominator != 1 else Fraction(1)
        shift_c = max(0, floor(x1 + 1 - c) + 1)
        c1 = c + shift_c
        try:
            top = []
            for cc in (c1, c1 + 1):
                f0 = _euler(x1, y, cc, z, precision)
                f1 = _euler(x1 + 1, y, cc, z, precision)
                top.append(_walk_a(x1, f0, f1, x, y, cc, z))
            return _walk_c_down(x, y, c1, top[0], top[1], c, z)
        except ZeroDivisionError:
            continue
    raise NonNormalizable(f"cannot normalize F({a},{b},{c}) for the integral route")


def _walk_a(x0, f0, f1, target, b, c, z) -> BigComplex:
    """Given F(x0), F(x0+1) (parameter a), return F(target) by the a-recurrence.

    (c-a) F(a-1) + (2a-c+(b-a)z) F(a) + a(z-1) F(a+1) = 0
    """
    x, lo, hi = x0, f0, f1
    bm, cm = mpq(b), mpq(c)
    while x > target:
        if c == x:
            raise ZeroDivisionError
        xm = mpq(x)
        lo, hi = -((2 * xm - cm + (bm - xm) * z) * lo + xm * (z - 1) * hi) / (cm - xm), lo
        x -= 1
    while x < target:
        x1 = x + 1
        xm = mpq(x1)
        # solve the relation at a = x+1 for F(x+2)
        nxt = -((cm - xm) * lo + (2 * xm - cm + (bm - xm) * z) * hi) / (xm * (z - 1))
        lo, hi = hi, nxt
        x = x1
    return lo


def _walk_c_down(a, b, c_top, f_top, f_top1, target, z) -> BigComplex:
    """Given F(c_top), F(c_top+1), step c down to ``target``.

    c(c-1)(z-1) F(c-1) + c[c-1-(2c-a-b-1)z] F(c) + (c-a)(c-b) z F(c+1) = 0
    """
    cc, f, g = c_top, f_top, f_top1
    am, bm = mpq(a), mpq(b)
    while cc > target:
        k = mpq(cc)
        if k * (k - 1) == 0:
            raise ZeroDivisionError
        prev = -(k * (k - 1 - (2 * k - am - bm - 1) * z) * f + (k - am) * (k - bm) * z * g) / (
            k * (k - 1) * (z - 1)
        )
        cc, f, g = cc - 1, prev, f
    return f


def eval_hyper(p: HyperParams, z, precision: int) -> BigComplex:
    """F(a,b,c;z) to ``precision`` digits with an error bound (principal branch)."""
    a, b, c = p.a, p.b, p.c
    with mpmath.workdps(precision + GUARD_DIGITS):
        zb = _as_bigcomplex(z)
        zv = zb.value
        if zv == 0:
            return BigComplex(1, 0)
        if _nonpos_int(a) or _nonpos_int(b):
            if not _nonpos_int(a) or (_nonpos_int(b) and b > a):
                a, b = b, a
            return _polynomial(a, b, c, zv)
        _check_branch(zb)
        if abs(zv) <= 0.5:
            return _series(a, b, c, zv)
        with mpmath.workdps(precision + 2 * GUARD_DIGITS):
            if _euler_ok(a, c):
                res = _euler(a, b, c, zv, precision + GUARD_DIGITS)
            elif _euler_ok(b, c):
                res = _euler(b, a, c, zv, precision + GUARD_DIGITS)
            else:
                res = _shift_eval(a, b, c, zv, precision + GUARD_DIGITS)
        v = +res.value
        return BigComplex(v, res.error + _input_error(zb, p) + _ulp(v))


def _input_error(z: BigComplex, p: HyperParams):
    # crude first-order bound for an inexact argument: |dF/dz| is not tracked,
    # so inexact z contributes its own size scaled by |ab/c|
    if z.error == 0:
        return mpmath.mpf(0)
    return z.error * (1 + abs(mpq(p.a) * mpq(p.b) / mpq(p.c))) * 10
