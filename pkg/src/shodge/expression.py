"""Symbolic hypergeometric expressions.

A term is

    cyclo * prod base^exp * ratfun(lambda) * prod B(args) * F(a,b,c; arg)

with base in {lambda, lambda-1, -1} and arg in {1/lambda, 1-lambda} (or no F).
Fractional powers use the principal branch; (-1)^r means exp(i pi r).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

import mpmath

from .exact.cyclotomic import CyclotomicNumber
from .exact.ratfun import LAMBDA, RationalFunction
from .hyper.hyp2f1 import HyperParams, eval_hyper
from .hyper.numeric import GUARD_DIGITS, BigComplex, _ulp, eval_beta, mpq

BASE_LAMBDA = "lambda"
BASE_LAMBDA_MINUS_ONE = "lambda-1"
BASE_MINUS_ONE = "-1"
BASES = (BASE_LAMBDA, BASE_LAMBDA_MINUS_ONE, BASE_MINUS_ONE)

ARG_INV = "1/lambda"
ARG_REFLECT = "1-lambda"
ARGS = (ARG_INV, ARG_REFLECT)


# ---------------------------------------------------------------------------
# exact complex rational points


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse '3', '5/2', 'i', '-2*i', '1/2+1/3*i', '1-i'."""
        s = text.replace(" ", "").replace("I", "i").replace("j", "i")
        if not s:
            raise ValueError("empty complex literal")
        tokens = re.findall(r"[+-]?[^+-]+", s)
        if not tokens or "".join(tokens) != s:
            raise ValueError(f"cannot parse {text!r}")
        re_part, im_part = Fraction(0), Fraction(0)
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            if tok.endswith("i"):
                coef = tok[:-1].rstrip("*")
                im_part += sign * (Fraction(coef) if coef else Fraction(1))
            else:
                re_part += sign * Fraction(tok)
        return cls(re_part, im_part)

    def __add__(self, o):
        o = _gq(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-_gq(o))

    def __rsub__(self, o):
        return _gq(o) - self

    def __mul__(self, o):
        o = _gq(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _gq(o)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, o):
        return _gq(o) / self

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = GaussianRational(o)
        return isinstance(o, GaussianRational) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(mpq(self.re), mpq(self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else f"{abs(self.im)}*"
        sign = "-" if self.im < 0 else "+"
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{sign}{im}i"


def _gq(x) -> GaussianRational:
    return x if isinstance(x, GaussianRational) else GaussianRational(Fraction(x))


def eval_ratfun(r: RationalFunction, lam: GaussianRational) -> GaussianRational:
    def ev(p):
        acc = GaussianRational(0)
        for c in reversed(p.coeffs):
            acc = acc * lam + c
        return acc

    return ev(r.num) / ev(r.den)


# ---------------------------------------------------------------------------
# Beta monomials


def _gamma_shift(x: Fraction) -> tuple[Fraction, Fraction]:
    """Gamma(x) = factor * Gamma(x0) with x0 in (0, 1]."""
    if x.denominator == 1 and x <= 0:
        raise ValueError(f"Gamma pole at {x}")
    x0 = x - floor(x)
    if x0 == 0:
        x0 = Fraction(1)
    factor = Fraction(1)
    t = x0
    while t < x:
        factor *= t
        t += 1
    while t > x:
        t -= 1
        factor /= t
    return x0, factor


@dataclass(frozen=True)
class BetaMonomial:
    """Product of Beta values; each factor is a tuple of arguments B(b1,...,bk)."""

    factors: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        fs = []
        for f in self.factors:
            args = tuple(Fraction(x) for x in f)
            for x in args:
                if x.denominator == 1 and x <= 0:
                    raise ValueError(f"Beta argument {x} is a Gamma pole")
            if len(args) >= 2:
                fs.append(args)
        object.__setattr__(self, "factors", tuple(fs))

    def __mul__(self, other: "BetaMonomial") -> "BetaMonomial":
        return BetaMonomial(self.factors + other.factors)

    def gamma_key(self) -> tuple[tuple, Fraction]:
        """(canonical Gamma multiset, rational factor) with value = factor * Gamma-product."""
        num: dict[Fraction, int] = {}
        factor = Fraction(1)
        zero = False
        for f in self.factors:
            for x in f:
                x0, c = _gamma_shift(x)
                num[x0] = num.get(x0, 0) + 1
                factor *= c
            s = sum(f, Fraction(0))
            if s.denominator == 1 and s <= 0:
                zero = True
                continue
            x0, c = _gamma_shift(s)
            num[x0] = num.get(x0, 0) - 1
            factor /= c
        if zero:
            return (), Fraction(0)
        num.pop(Fraction(1), None)  # Gamma(1) = 1
        key = tuple(sorted((x, e) for x, e in num.items() if e))
        return key, factor

    def evaluate(self, precision: int) -> BigComplex:
        acc = BigComplex(1)
        for f in self.factors:
            acc = acc * eval_beta(f, precision)
        return acc

    def __str__(self):
        return "*".join("B(" + ",".join(str(x) for x in f) + ")" for f in self.factors) or "1"


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class HyperFn:
    a: Fraction
    b: Fraction
    c: Fraction
    arg: str

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.arg not in ARGS:
            raise ValueError(f"unknown argument {self.arg!r}")
        if self.c.denominator == 1 and self.c <= 0:
            raise ValueError("c must not be a non-positive integer")

    @property
    def params(self) -> HyperParams:
        return HyperParams(self.a, self.b, self.c)

    def key(self):
        lo, hi = sorted((self.a, self.b))
        return (lo, hi, self.c, self.arg)

    def class_key(self):
        fa, fb = sorted((self.a % 1, self.b % 1))
        return (fa, fb, self.c % 1, self.arg)

    def z_of(self, lam: GaussianRational) -> GaussianRational:
        return 1 / lam if self.arg == ARG_INV else 1 - lam

    def evaluate(self, lam: GaussianRational, precision: int) -> BigComplex:
        z = self.z_of(lam)
        if z.is_real():
            return eval_hyper(self.params, z.re, precision)
        with mpmath.workdps(precision + GUARD_DIGITS):
            zv = z.to_mpc()
            zb = BigComplex(zv, _ulp(zv))
        return eval_hyper(self.params, zb, precision)

    def __str__(self):
        return f"F({self.a},{self.b},{self.c};{self.arg})"


def _normalize_powers(powers: Iterable[tuple[str, Fraction]]) -> tuple[tuple[str, Fraction], ...]:
    acc: dict[str, Fraction] = {}
    for base, e in powers:
        if base not in BASES:
            raise ValueError(f"unknown power base {base!r}")
        acc[base] = acc.get(base, Fraction(0)) + Fraction(e)
    return tuple((b, acc[b]) for b in BASES if b in acc and acc[b] != 0)


@dataclass(frozen=True)
class HyperTerm:
    cyclo: CyclotomicNumber
    powers: tuple[tuple[str, Fraction], ...] = ()
    ratfun: RationalFunction = field(default_factory=lambda: RationalFunction(1))
    beta: BetaMonomial = field(default_factory=BetaMonomial)
    hyper: HyperFn | None = None

    def __post_init__(self):
        object.__setattr__(self, "powers", _normalize_powers(self.powers))
        if not isinstance(self.ratfun, RationalFunction):
            object.__setattr__(self, "ratfun", RationalFunction(self.ratfun))
        if not isinstance(self.cyclo, CyclotomicNumber):
            object.__setattr__(self, "cyclo", CyclotomicNumber.rational(1, self.cyclo))

    def is_zero(self) -> bool:
        return self.cyclo.is_zero() or self.ratfun.is_zero()

    def power(self, base: str) -> Fraction:
        for b, e in self.powers:
            if b == base:
                return e
        return Fraction(0)

    def scale(self, c=1, ratfun=None) -> "HyperTerm":
        r = self.ratfun if ratfun is None else self.ratfun * ratfun
        cy = self.cyclo * c if not isinstance(c, CyclotomicNumber) else self.cyclo * c
        return replace(self, cyclo=cy, ratfun=r)

    def canonical(self) -> "HyperTerm":
        """Power exponents reduced into [0,1); integer parts go to ratfun or the sign."""
        cy, rf = self.cyclo, self.ratfun
        pw = []
        for base, e in self.powers:
            k = floor(e)
            r = e - k
            if k:
                if base == BASE_LAMBDA:
                    rf = rf * LAMBDA ** k
                elif base == BASE_LAMBDA_MINUS_ONE:
                    rf = rf * (LAMBDA - 1) ** k
                else:
                    cy = cy * (-1) ** (k % 2)
            if r:
                pw.append((base, r))
        return HyperTerm(cy, tuple(pw), rf, self.beta, self.hyper)

    def group_key(self):
        """Key of the monomial part (powers, Gamma content, F) for collecting terms."""
        key, _ = self.beta.gamma_key()
        return (self.powers, key, self.hyper.key() if self.hyper else None)

    def evaluate(self, lam: GaussianRational, precision: int) -> BigComplex:
        with mpmath.workdps(precision + GUARD_DIGITS):
            lv = lam.to_mpc()
            c = self.cyclo.to_complex()
            acc = BigComplex(c, _ulp(c) * 4 * (1 + len(self.cyclo.coeffs)))
            for base, e in self.powers:
                em = mpq(e)
                if base == BASE_LAMBDA:
                    v = mpmath.power(lv, em)
                elif base == BASE_LAMBDA_MINUS_ONE:
                    v = mpmath.power(lv - 1, em)
                else:
                    v = mpmath.expjpi(em)
                acc = acc * BigComplex(v, _ulp(v) * 16)
            rv = eval_ratfun(self.ratfun, lam).to_mpc()
            acc = acc * BigComplex(rv, _ulp(rv) * 2)
            if self.beta.factors:
                acc = acc * self.beta.evaluate(precision + GUARD_DIGITS)
            if self.hyper is not None:
                acc = acc * self.hyper.evaluate(lam, precision + GUARD_DIGITS)
            return acc

    def __str__(self):
        parts = []
        if self.cyclo != 1:
            parts.append(f"[{self.cyclo}]")
        for b, e in self.powers:
            parts.append(f"({b})^({e})")
        if self.ratfun != 1:
            parts.append(f"[{self.ratfun}]")
        if self.beta.factors:
            parts.append(str(self.beta))
        if self.hyper is not None:
            parts.append(str(self.hyper))
        return "*".join(parts) or "1"


@dataclass
class HypergeometricExpression:
    terms: list[HyperTerm] = field(default_factory=list)

    def __post_init__(self):
        self.terms = [t for t in self.terms if not t.is_zero()]

    def __add__(self, other: "HypergeometricExpression") -> "HypergeometricExpression":
        return HypergeometricExpression(self.terms + other.terms)

    def scale(self, c=1, ratfun=None) -> "HypergeometricExpression":
        return HypergeometricExpression([t.scale(c, ratfun) for t in self.terms])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.terms

    def hyper_terms(self) -> list[HyperTerm]:
        return [t for t in self.terms if t.hyper is not None]

    def simplify(self) -> "HypergeometricExpression":
        """Collect terms with equal monomial part and proportional constants."""
        out: list[HyperTerm] = []
        for t in self.terms:
            t = t.canonical()
            merged = False
            for i, u in enumerate(out):
                if u.group_key() != t.group_key():
                    continue
                ratio = _cyclo_ratio(t.cyclo, u.cyclo)
                if ratio is None:
                    continue
                kt = t.beta.gamma_key()[1]
                ku = u.beta.gamma_key()[1]
                if ku == 0:
                    continue
                scale = ratio * kt / ku
                out[i] = replace(u, ratfun=u.ratfun + t.ratfun * scale)
                merged = True
                break
            if not merged:
                out.append(t)
        return HypergeometricExpression(out)

    def evaluate(self, lam: GaussianRational, precision: int) -> BigComplex:
        with mpmath.workdps(precision + GUARD_DIGITS):
            acc = BigComplex(0)
            for t in self.terms:
                acc = acc + t.evaluate(lam, precision)
            return acc

    def __str__(self):
        return " + ".join(str(t) for t in self.terms) or "0"


def _cyclo_ratio(a: CyclotomicNumber, b: CyclotomicNumber):
    """a/b if it is rational, else None."""
    if b.is_zero():
        return None
    r = (a / b).rational_value()
    return r


def algebraic_term(cyclo, powers=(), ratfun=None) -> HyperTerm:
    return HyperTerm(
        cyclo if isinstance(cyclo, CyclotomicNumber) else CyclotomicNumber.rational(1, cyclo),
        tuple(powers),
        RationalFunction(1) if ratfun is None else ratfun,
    )
