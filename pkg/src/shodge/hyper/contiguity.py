"""Contiguity classes, the reducible-case algebraicity test, and exact rewriting.

Rewriting works in the two-dimensional space spanned over Q(lambda) by F0 and
theta F0 (theta = z d/dz) for a base function F0 of each contiguity class.
Every contiguous F is reached from F0 by the step relations

    a F(a+1)            = (theta + a) F
    (c-a) F(a-1)        = (1-z) theta F + ((c-a)(1-z) - (a+b-c) z) F
    (c-1) F(c-1)        = (theta + c - 1) F
    (c-a)(c-b)/c F(c+1) = ((1-z)/z) theta F - (a+b-c) F

(and the same in b), all compositions of the Gauss contiguous relations, with
theta^2 F0 eliminated by the hypergeometric equation.  A reducible class holds
an elementary member E (1 or a power of 1-z); when the remainder after
splitting off E vanishes, the whole class collapses to an algebraic term.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable

from ..errors import NoApplicableRelation
from ..exact.ratfun import LAMBDA, RationalFunction
from .hyp2f1 import HyperParams

ALGEBRAIC = "Algebraic"
NOT_ALGEBRAIC = "NotAlgebraic"
NOT_APPLICABLE = "NotApplicable"


def _is_int(x: Fraction) -> bool:
    return Fraction(x).denominator == 1


def _params(p) -> HyperParams:
    if isinstance(p, HyperParams):
        return p
    return HyperParams(*p)


def is_irreducible(p) -> bool:
    """True iff none of a, b, c-a, c-b is an integer."""
    p = _params(p)
    return not any(_is_int(x) for x in (p.a, p.b, p.c - p.a, p.c - p.b))


def are_contiguous(p, q) -> bool:
    """True iff a1-a2, b1-b2, c1-c2 are all integers (parameters in the given order)."""
    p, q = _params(p), _params(q)
    return all(_is_int(x - y) for x, y in zip(p.as_tuple(), q.as_tuple()))


def _contiguous_any_order(p: HyperParams, q: HyperParams) -> tuple[bool, bool]:
    """(contiguous, swapped): F is symmetric in a and b, so try both orders of q."""
    if are_contiguous(p, q):
        return True, False
    if are_contiguous(p, HyperParams(q.b, q.a, q.c)):
        return True, True
    return False, False


def _odd_int(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator % 2 != 0


def angular_parameters(p) -> tuple[Fraction, Fraction, Fraction]:
    p = _params(p)
    return 1 - p.c, p.c - p.a - p.b, p.a - p.b


def reducible_algebraicity_test(p) -> str:
    """Algebraic iff exactly two of l+m+n, -l+m+n, l-m+n, l+m-n are odd integers."""
    p = _params(p)
    if is_irreducible(p):
        return NOT_APPLICABLE
    lam, mu, nu = angular_parameters(p)
    combos = (lam + mu + nu, -lam + mu + nu, lam - mu + nu, lam + mu - nu)
    odd = sum(1 for x in combos if _odd_int(x))
    return ALGEBRAIC if odd == 2 else NOT_ALGEBRAIC


# ---------------------------------------------------------------------------
# exact arithmetic in span{F0, theta F0}


@dataclass(frozen=True)
class _Vec:
    """r0 F0 + r1 theta F0."""

    r0: RationalFunction
    r1: RationalFunction

    def __add__(self, o):
        return _Vec(self.r0 + o.r0, self.r1 + o.r1)

    def scale(self, s):
        return _Vec(self.r0 * s, self.r1 * s)

    def is_zero(self):
        return self.r0.is_zero() and self.r1.is_zero()


class _ClassSpace:
    """Coordinates of contiguous functions relative to a base F0(a,b,c; z(lambda))."""

    def __init__(self, base: HyperParams, arg: str):
        from ..expression import ARG_INV, ARG_REFLECT

        self.base = base
        self.arg = arg
        if arg == ARG_INV:
            self.z = RationalFunction(1) / LAMBDA
            self._dz = lambda r: -LAMBDA * r.derivative()
        elif arg == ARG_REFLECT:
            self.z = 1 - LAMBDA
            self._dz = lambda r: (LAMBDA - 1) * r.derivative()
        else:
            raise ValueError(f"unknown argument {arg!r}")
        a, b, c = base.as_tuple()
        z = self.z
        # theta^2 F0 = (z ab F0 + (z(a+b) - c + 1) theta F0) / (1 - z)
        inv = RationalFunction(1) / (1 - z)
        self._t2 = _Vec(z * (a * b) * inv, (z * (a + b) - c + 1) * inv)
        self._cache: dict[tuple, _Vec] = {base.as_tuple(): _Vec(RationalFunction(1), RationalFunction(0))}

    def theta(self, v: _Vec) -> _Vec:
        """theta applied to r0 F0 + r1 theta F0."""
        out = _Vec(self._dz(v.r0), v.r0 + self._dz(v.r1))
        return out + self._t2.scale(v.r1)

    def _step(self, v: _Vec, params: tuple, axis: int, up: bool) -> tuple[_Vec, tuple]:
        a, b, c = params
        z = self.z
        tv = self.theta(v)
        if axis in (0, 1):
            x, y = (a, b) if axis == 0 else (b, a)
            if up:
                if x == 0:
                    raise ZeroDivisionError
                nv = (tv + v.scale(x)).scale(Fraction(1) / x)
                x += 1
            else:
                if c == x:
                    raise ZeroDivisionError
                nv = (tv.scale(1 - z) + v.scale((c - x) * (1 - z) - (x + y - c) * z)).scale(Fraction(1) / (c - x))
                x -= 1
            new = (x, y, c) if axis == 0 else (y, x, c)
        else:
            if up:
                if (c - a) * (c - b) == 0:
                    raise ZeroDivisionError
                nv = (tv.scale((1 - z) / z) + v.scale(-(a + b - c))).scale(Fraction(c) / ((c - a) * (c - b)))
                new = (a, b, c + 1)
            else:
                if c - 1 == 0:
                    raise ZeroDivisionError
                nv = (tv + v.scale(c - 1)).scale(Fraction(1) / (c - 1))
                new = (a, b, c - 1)
        return nv, new

    def coords(self, target: tuple) -> _Vec:
        """Coordinates of F(target), trying each axis order until no step divides by zero."""
        target = tuple(Fraction(x) for x in target)
        if target in self._cache:
            return self._cache[target]
        for order in permutations(range(3)):
            params = self.base.as_tuple()
            v = self._cache[params]
            try:
                for axis in order:
                    while params[axis] != target[axis]:
                        up = params[axis] < target[axis]
                        v, params = self._step(v, params, axis, up)
                        if axis == 2 and params[2].denominator == 1 and params[2] <= 0:
                            raise ZeroDivisionError
            except ZeroDivisionError:
                continue
            self._cache[target] = v
            return v
        raise NoApplicableRelation(f"no relation path from {self.base} to F{target}")


def _elementary_member(base: HyperParams, arg: str):
    """(params, powers) of an elementary function in the class of ``base``, or None.

    powers are (base, exponent) pairs giving the closed form; () means 1.
    """
    from ..expression import ARG_INV, BASE_LAMBDA, BASE_LAMBDA_MINUS_ONE

    a, b, c = base.as_tuple()

    def one_minus_z_power(s: Fraction):
        # (1-z)^s: z = 1-lambda gives lambda^s; z = 1/lambda gives (lambda-1)^s lambda^-s
        if arg == ARG_INV:
            return ((BASE_LAMBDA_MINUS_ONE, s), (BASE_LAMBDA, -s))
        return ((BASE_LAMBDA, s),)

    if _is_int(a):
        return (Fraction(0), b, c), ()
    if _is_int(b):
        return (a, Fraction(0), c), ()
    if _is_int(c - a):
        return (c, b, c), one_minus_z_power(-b)
    if _is_int(c - b):
        return (a, c, c), one_minus_z_power(-a)
    return None


# ---------------------------------------------------------------------------
# rewriting of expressions


def _group_terms(expr) -> tuple[dict, list]:
    """Split hyper terms into groups sharing prefactor and contiguity class."""
    from ..expression import _cyclo_ratio

    groups: dict = {}
    order: list = []
    rest = []
    for t in expr.terms:
        if t.hyper is None:
            rest.append(t)
            continue
        t = t.canonical()
        gk, gf = t.beta.gamma_key()
        p = t.hyper.params
        placed = False
        for key in order:
            powers, gkey, arg, unit, members = groups[key]
            if powers != t.powers or gkey != gk or arg != t.hyper.arg:
                continue
            ok, swapped = _contiguous_any_order(members[0][0], p)
            if not ok:
                continue
            r = _cyclo_ratio(t.cyclo, unit[0])
            if r is None:
                continue
            q = HyperParams(p.b, p.a, p.c) if swapped else p
            members.append((q, t.ratfun * (r * gf / unit[1])))
            placed = True
            break
        if not placed:
            key = len(order)
            order.append(key)
            groups[key] = (t.powers, gk, t.hyper.arg, (t.cyclo, gf, t.beta), [(p, t.ratfun)])
    return groups, rest


def _choose_base(members) -> HyperParams:
    # extremal parameters first: smallest b, then a, then c
    return min((m[0] for m in members), key=lambda p: (p.b, p.a, p.c))


def contiguous_rewrite(expr):
    """Reduce each contiguity class to at most one F plus an algebraic part.

    Raises NoApplicableRelation (with ``partial`` set to the expression with
    the classes handled so far rewritten) when no relation path exists.
    """
    from ..expression import HyperFn, HypergeometricExpression, HyperTerm

    groups, rest = _group_terms(expr)
    done: list = list(rest)
    pending = [groups[k] for k in sorted(groups)]
    for idx, (powers, _gk, arg, unit, members) in enumerate(pending):
        cyclo, gf, beta = unit
        base = _choose_base(members)
        try:
            space = _ClassSpace(base, arg)
            total = _Vec(RationalFunction(0), RationalFunction(0))
            for p, coeff in members:
                total = total + space.coords(p.as_tuple()).scale(coeff)
            done.extend(_emit_class(space, total, powers, arg, cyclo, beta))
        except NoApplicableRelation as exc:
            leftover = []
            for g in pending[idx:]:
                pw, _, ar, (cy, _, bt), mem = g
                for p, coeff in mem:
                    leftover.append(HyperTerm(cy, pw, coeff, bt, HyperFn(p.a, p.b, p.c, ar)))
            partial = HypergeometricExpression(done + leftover).simplify()
            raise NoApplicableRelation(str(exc), partial=partial) from None
    return HypergeometricExpression(done).simplify()


def _emit_class(space: _ClassSpace, total: _Vec, powers, arg, cyclo, beta) -> list:
    from ..expression import HyperFn, HyperTerm

    if total.is_zero():
        return []
    base = space.base
    a, b, c = base.as_tuple()

    def f_term(params, coeff):
        return HyperTerm(cyclo, powers, coeff, beta, HyperFn(params[0], params[1], params[2], arg))

    elem = _elementary_member(base, arg)
    if elem is None:
        # irreducible: r0 F0 + r1 theta F0 = (r0 - a r1) F0 + a r1 F(a+1)
        out = []
        if not (total.r0 - total.r1 * a).is_zero():
            out.append(f_term((a, b, c), total.r0 - total.r1 * a))
        if not total.r1.is_zero():
            out.append(f_term((a + 1, b, c), total.r1 * a))
        return out
    eparams, epowers = elem
    ev = space.coords(eparams)
    epw = tuple(powers) + tuple(epowers)
    if not ev.r1.is_zero():
        coef_e = total.r1 / ev.r1
        coef_f = total.r0 - coef_e * ev.r0
        out = []
        if not coef_e.is_zero():
            out.append(HyperTerm(cyclo, epw, coef_e, beta, None))
        if not coef_f.is_zero():
            out.append(f_term((a, b, c), coef_f))
        return out
    # E = e0 F0, so F0 itself is elementary: F0 = E/e0, theta F0 = E (theta log E)/e0 - E theta(e0)/e0^2
    e0 = ev.r0
    log_theta = _theta_log_elementary(eparams, space)
    coeff = total.r0 / e0 + total.r1 * (log_theta / e0 - space.theta(_Vec(e0, RationalFunction(0))).r0 / (e0 * e0))
    if coeff.is_zero():
        return []
    return [HyperTerm(cyclo, epw, coeff, beta, None)]


def _theta_log_elementary(eparams, space: _ClassSpace) -> RationalFunction:
    # E = (1-z)^(-s) with s the parameter that is not cancelled by c; E = 1 if a or b is 0
    a, b, c = eparams
    if a == 0 or b == 0:
        return RationalFunction(0)
    s = b if a == c else a
    z = space.z
    return z * s / (1 - z)


def verify_algebraic_prefactor(beta_args: Iterable, a_weight, k: int, n: int, precision: int,
                               max_degree: int = 24, height_bound: int | None = None) -> bool:
    """Detect B(beta_args) B(A+k, A) / pi^(n/2) as algebraic via an integer relation search."""
    import mpmath

    from ..algebraicity.minpoly import minimal_polynomial
    from ..errors import NotFound
    from .numeric import GUARD_DIGITS, BigComplex, eval_beta

    a_weight = Fraction(a_weight)
    with mpmath.workdps(precision + GUARD_DIGITS):
        v = eval_beta(list(beta_args), precision) * eval_beta([a_weight + k, a_weight], precision)
        pi = mpmath.pi ** (mpmath.mpf(n) / 2)
        v = v / BigComplex(pi, abs(pi) * mpmath.mpf(10) ** (-(precision + GUARD_DIGITS - 1)))
    try:
        minimal_polynomial(v, max_degree, precision, height_bound)
    except NotFound:
        return False
    return True
