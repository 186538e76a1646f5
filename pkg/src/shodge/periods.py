"""Periods of omega_beta / f^k over joint cycles, as hypergeometric expressions.

Only the cubic family P(y) = y(1-y)(lambda-y) is supported for joint cycles.
Cycle 0 joins the roots 0 and 1 of P, cycle 1 joins 1 and lambda.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import mpmath

from .errors import BranchAmbiguity, DimensionMismatch, IntegerWeight
from .exact.cyclotomic import CyclotomicNumber
from .exact.ratfun import LAMBDA, RationalFunction
from .expression import (
    ARG_INV,
    ARG_REFLECT,
    BASE_LAMBDA,
    BASE_LAMBDA_MINUS_ONE,
    BASE_MINUS_ONE,
    BetaMonomial,
    GaussianRational,
    HyperFn,
    HypergeometricExpression,
    HyperTerm,
)
from .fermat import DegreeProfile, weight
from .forms import FormCombination, FormTerm, cubic_coefficients, cubic_decomposition, reduce_to_order_one
from .hodge_space import JointCycleVector
from .hyper.numeric import GUARD_DIGITS, BigComplex, _ulp, eval_beta, mpq
from .hyper.quadrature import tanh_sinh


def _check_alpha_beta(alpha, beta_prime, profile: DegreeProfile):
    if len(alpha) != profile.n or len(beta_prime) != profile.n:
        raise DimensionMismatch("alpha and beta' need n entries")


def fermat_cyclo_factor(alpha: Sequence[int], beta_prime: Sequence[int], profile: DegreeProfile) -> CyclotomicNumber:
    """prod_j (zeta_{m_j}^{(alpha_j+1)(beta_j+1)} - zeta_{m_j}^{alpha_j(beta_j+1)}) in Q(zeta_lcm)."""
    degs = profile.fermat_degrees
    big_n = lcm(*degs)
    acc = CyclotomicNumber.rational(big_n, 1)
    for a, b, m in zip(alpha, beta_prime, degs):
        step = big_n // m
        acc = acc * (
            CyclotomicNumber.zeta(big_n, (a + 1) * (b + 1) * step) - CyclotomicNumber.zeta(big_n, a * (b + 1) * step)
        )
    return acc


def fermat_beta(beta_prime: Sequence[int], profile: DegreeProfile) -> BetaMonomial:
    return BetaMonomial((tuple(Fraction(b + 1, m) for b, m in zip(beta_prime, profile.fermat_degrees)),))


def fermat_period(alpha, beta_prime, profile: DegreeProfile, fiber=None) -> HyperTerm:
    """Period of x^beta' dx / dg over the Fermat vanishing cycle alpha.

    ((-1)^(n-1)/prod m_j) prod_j (zeta^{(a_j+1)(b_j+1)} - zeta^{a_j(b_j+1)}) B((b_j+1)/m_j).
    ``fiber`` = b scales the value by b^(A_beta' - 1) (b must be a positive rational).
    """
    _check_alpha_beta(alpha, beta_prime, profile)
    n = profile.n
    denom = 1
    for m in profile.fermat_degrees:
        denom *= m
    cy = fermat_cyclo_factor(alpha, beta_prime, profile) * Fraction((-1) ** (n - 1), denom)
    if fiber is not None and Fraction(fiber) != 1:
        a_prime = weight(beta_prime, profile, "fermatOnly")
        fb = Fraction(fiber)
        if fb <= 0:
            raise ValueError("fiber scaling needs a positive rational")
        e = a_prime - 1
        # b^e with rational b > 0: keep it exact when e is an integer
        if e.denominator != 1:
            raise ValueError("non-integral fiber exponent needs an algebraic constant")
        cy = cy * fb ** int(e)
    return HyperTerm(cy, (), RationalFunction(1), fermat_beta(beta_prime, profile), None)


def _weight_qg(a_prime: Fraction) -> tuple[int, int]:
    """(q, gamma) with A' = (gamma+1)/q in lowest terms."""
    return a_prime.denominator, a_prime.numerator - 1


def _joint_constant(alpha, beta_prime, profile: DegreeProfile) -> tuple[CyclotomicNumber, Fraction]:
    """p/(zeta_q^{gamma+1}-1) without its sign power, and A'."""
    _check_alpha_beta(alpha, beta_prime, profile)
    a_prime = weight(beta_prime, profile, "fermatOnly")
    if a_prime.denominator == 1:
        raise IntegerWeight(f"A_beta' = {a_prime} is an integer")
    q, g = _weight_qg(a_prime)
    denom = 1
    for m in profile.fermat_degrees:
        denom *= m
    big_n = lcm(*profile.fermat_degrees, q)
    base = fermat_cyclo_factor(alpha, beta_prime, profile).embed(big_n) * Fraction(1, denom)
    zq = CyclotomicNumber.zeta(big_n, (g + 1) * (big_n // q)) - 1
    return base / zq, a_prime


def _require_cubic(profile: DegreeProfile):
    if profile.pert_degree != 3:
        raise DimensionMismatch("joint-cycle periods are implemented for the cubic family only")


def joint_period_order1(cycle: int, alpha, beta, profile: DegreeProfile) -> HypergeometricExpression:
    """Period of omega_beta/f over the joint cycle (cycle, alpha)."""
    _require_cubic(profile)
    beta = tuple(beta)
    bp, b3 = beta[:-1], beta[-1]
    const, ap = _joint_constant(alpha, bp, profile)
    fb = fermat_beta(bp, profile)
    sign = (BASE_MINUS_ONE, ap)  # (-1)^{n+A'} with n even
    if cycle == 0:
        term = HyperTerm(
            const,
            (sign, (BASE_LAMBDA, ap - 1)),
            RationalFunction(1),
            fb * BetaMonomial(((ap + b3, ap),)),
            HyperFn(ap + b3, 1 - ap, 2 * ap + b3, ARG_INV),
        )
    elif cycle == 1:
        term = HyperTerm(
            const,
            (sign, (BASE_MINUS_ONE, ap - 1), (BASE_LAMBDA_MINUS_ONE, 2 * ap - 1)),
            RationalFunction(1),
            fb * BetaMonomial(((ap, ap),)),
            HyperFn(ap, 1 - ap - b3, 2 * ap, ARG_REFLECT),
        )
    else:
        raise ValueError("cycle index must be 0 or 1")
    return HypergeometricExpression([term])


def _poch(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def joint_period_order2(cycle: int, alpha, beta, profile: DegreeProfile) -> HypergeometricExpression:
    """Closed three-term formula for the period of omega_beta/f^2."""
    _require_cubic(profile)
    beta = tuple(beta)
    bp, b3 = beta[:-1], beta[-1]
    const, ap = _joint_constant(alpha, bp, profile)
    cc = cubic_coefficients()
    a_l, b_l, c_l, e_l = cc["a"], cc["b"], cc["c"], cc["e"]
    fb = fermat_beta(bp, profile)
    sign = (BASE_MINUS_ONE, ap)
    mid = (1 - ap) * e_l + (1 + b3) * b_l
    terms = []
    if cycle == 0:
        pw = (sign, (BASE_LAMBDA, ap - 3))
        pre = RationalFunction(1) / (1 - LAMBDA) ** 2
        x, s = ap + b3 - 1, 2 * ap + b3 - 1
        if s != 0:
            bm = BetaMonomial(((x, ap),))
            coefs = [_poch(x, 2) / _poch(s, 2), x / s, Fraction(1)]
            betas = [bm, bm, bm]
        else:
            # B(x,A') vanishes here; use B(x+k,A') = B(x,A') (x)_k/(x+A')_k instead
            coefs = [Fraction(1)] * 3
            betas = [BetaMonomial(((x + 2, ap),)), BetaMonomial(((x + 1, ap),)), None]
        rats = [(3 * ap + b3 - 1) * a_l, mid, b3 * c_l]
        fns = [
            HyperFn(ap + b3 + 1, 1 - ap, 2 * ap + b3 + 1, ARG_INV),
            HyperFn(ap + b3, 1 - ap, 2 * ap + b3, ARG_INV),
            HyperFn(ap + b3 - 1, 1 - ap, 2 * ap + b3 - 1, ARG_INV) if b3 or s != 0 else None,
        ]
        for co, bm, rf, fn in zip(coefs, betas, rats, fns):
            if rf.is_zero() or bm is None or fn is None:
                continue
            terms.append(HyperTerm(const * co, pw, pre * rf, fb * bm, fn))
    elif cycle == 1:
        pw = (sign, (BASE_MINUS_ONE, ap - 1), (BASE_LAMBDA_MINUS_ONE, 2 * ap - 3))
        pre = RationalFunction(1) / LAMBDA ** 2
        bm = fb * BetaMonomial(((ap, ap),))
        rats = [(3 * ap + b3 - 1) * a_l, mid, b3 * c_l]
        for shift, rf in zip((0, 1, 2), rats):
            if rf.is_zero():
                continue
            terms.append(HyperTerm(const, pw, pre * rf, bm, HyperFn(ap, -(ap + b3 - shift), 2 * ap, ARG_REFLECT)))
    else:
        raise ValueError("cycle index must be 0 or 1")
    return HypergeometricExpression(terms)


def joint_period_general(cycle: int, alpha, beta, pole_order: int, profile: DegreeProfile) -> HypergeometricExpression:
    """Pole-reduce omega_beta/f^k to order one, then sum order-one periods."""
    _require_cubic(profile)
    weight(tuple(beta)[:-1], profile, "fermatOnly")
    form = FormCombination(profile, [FormTerm(tuple(beta), pole_order)])
    reduced = reduce_to_order_one(form, cubic_decomposition())
    out = HypergeometricExpression([])
    for (b, _k), coeff in reduced.items():
        out = out + joint_period_order1(cycle, alpha, b, profile).scale(1, coeff)
    return out.simplify()


def cycle_period(cycle: JointCycleVector, beta, pole_order: int, profile: DegreeProfile) -> HypergeometricExpression:
    """Period over a rational combination of joint cycles (alpha, k).

    The alpha dependence sits in the factor prod_j zeta^{alpha_j(beta_j+1)}, so
    each k collapses to one cyclotomic coefficient times the alpha = 0 period
    with the Fermat cyclotomic factor removed.
    """
    _require_cubic(profile)
    beta = tuple(beta)
    bp = beta[:-1]
    out = HypergeometricExpression([])
    zero = (0,) * profile.n
    base_factor = fermat_cyclo_factor(zero, bp, profile)
    for k in (0, 1):
        coeffs = cycle.slice(k)
        if not coeffs:
            continue
        total = CyclotomicNumber.rational(base_factor.order, 0)
        for alpha, n_ak in coeffs.items():
            total = total + fermat_cyclo_factor(alpha, bp, profile) * n_ak
        if total.is_zero():
            continue
        if base_factor.is_zero():
            continue
        ratio = total / base_factor
        expr = joint_period_general(k, zero, beta, pole_order, profile)
        out = out + HypergeometricExpression([t.scale(ratio) for t in expr.terms])
    return out.simplify()


# ---------------------------------------------------------------------------
# direct quadrature of the line integral


def quadrature_oracle(
    cycle: int,
    beta,
    lam: GaussianRational,
    precision: int,
    profile: DegreeProfile,
    alpha=None,
    pole_order: int = 1,
) -> BigComplex:
    """p/(zeta_q^{gamma+1}-1) * c_k * int_C y^b P(y)^(A'-k) dy by tanh-sinh.

    c_k = (1-A')_{k-1}/(k-1)! turns the order-one integrand into the order-k
    one; this needs A' > k-1 so that the integral converges.

    P(y)^r is the product of principal powers of its linear factors.  On
    cycle 0 these are y, 1-y, lambda-y.  On cycle 1, y = 1+(lambda-1)u and
    1-y = exp(i pi)(lambda-1)u, lambda-y = (lambda-1)(1-u), so the constant
    part exp(i pi r)(lambda-1)^(2r+1) is pulled out of the integral.
    """
    _require_cubic(profile)
    if cycle not in (0, 1):
        raise ValueError("cycle index must be 0 or 1")
    beta = tuple(beta)
    bp, b3 = beta[:-1], beta[-1]
    alpha = (0,) * profile.n if alpha is None else tuple(alpha)
    const, ap = _joint_constant(alpha, bp, profile)
    r = ap - pole_order
    if r <= -1:
        raise ValueError("integral diverges for this pole order; reduce first")
    if lam.is_real() and lam.re in (0, 1):
        raise BranchAmbiguity("P has a repeated root")
    if cycle == 0 and lam.is_real() and lam.re < 1:
        raise BranchAmbiguity("lambda - y vanishes or is negative on the segment [0,1]")
    if cycle == 1 and lam.is_real() and lam.re < 0:
        raise BranchAmbiguity("y is negative on the segment [1,lambda]")
    ck = Fraction(1)
    for i in range(pole_order - 1):
        ck *= (1 - ap + i) / Fraction(i + 1)
    with mpmath.workdps(precision + 2 * GUARD_DIGITS):
        lv = lam.to_mpc()
        rm = mpq(r)
        bf = mpmath.mpf(b3)
        if cycle == 0:
            def integrand(u, uc):
                return u ** (bf + rm) * uc ** rm * (lv - u) ** rm

            scale = mpmath.mpf(1)
        else:
            d = lv - 1

            def integrand(u, uc):
                y = 1 + d * u
                return y ** (bf + rm) * u ** rm * uc ** rm

            scale = mpmath.expjpi(rm) * d ** (2 * rm + 1)
        val, err = tanh_sinh(integrand)
        fb = eval_beta([Fraction(b + 1, m) for b, m in zip(bp, profile.fermat_degrees)], precision + GUARD_DIGITS)
        pre = const.to_complex() * mpmath.expjpi(mpq(ap)) * mpq(ck) * scale
        res = BigComplex(val, err) * BigComplex(pre, _ulp(pre) * 64) * fb
        v = +res.value
    with mpmath.workdps(precision + GUARD_DIGITS):
        return BigComplex(+v, res.error + _ulp(v))
