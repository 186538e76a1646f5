"""Numeric verification drivers for algebraic hypergeometric combinations.

Each check evaluates its expressions at exact sample points, runs the
minimal-polynomial search, and compares against the closed form found by
contiguous rewriting.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import BranchCut, NotFound
from ..exact.cyclotomic import CyclotomicNumber
from ..exact.ratfun import LAMBDA, RationalFunction
from ..expression import (
    ARG_INV,
    ARG_REFLECT,
    BetaMonomial,
    GaussianRational,
    HyperFn,
    HypergeometricExpression,
    HyperTerm,
)
from ..hyper.contiguity import contiguous_rewrite
from ..hyper.hyp2f1 import HyperParams, eval_hyper
from ..hyper.numeric import GUARD_DIGITS, BigComplex
from .minpoly import NOT_FOUND_LABEL, minimal_polynomial, power_relation

R = Fraction


def _f(coeff, a, b, c, arg, ratfun=None) -> HyperTerm:
    rf = RationalFunction(1) if ratfun is None else ratfun
    return HyperTerm(CyclotomicNumber.rational(1, 1), (), rf * R(coeff), BetaMonomial(()), HyperFn(a, b, c, arg))


def _combinations(arg: str) -> dict[str, HypergeometricExpression]:
    L = LAMBDA
    q = L * L - L + 1
    s5 = (L + 1) * (5 * L * L - 8 * L + 5)
    s8 = (L + 1) * (8 * L * L - 11 * L + 8)
    s7 = (L + 1) * (7 * L * L - 10 * L + 7)
    t = L * (1 - L) ** 2
    if arg == ARG_REFLECT:
        X = ARG_REFLECT
        rows = {
            "G1": [_f(6, R(4, 3), R(-4, 3), R(8, 3), X, q), _f(R(-2, 3), R(4, 3), R(-1, 3), R(8, 3), X, s5)],
            "G2": [_f(2, R(2, 3), R(-2, 3), R(4, 3), X), _f(R(-2, 3), R(2, 3), R(1, 3), R(4, 3), X, L + 1)],
            "G3": [
                _f(4, R(2, 3), R(-5, 3), R(4, 3), X, q),
                _f(R(-1, 3), R(2, 3), R(-2, 3), R(4, 3), X, s8),
                _f(1, R(2, 3), R(1, 3), R(4, 3), X, t),
            ],
            "G4": [
                _f(6, R(2, 3), R(-8, 3), R(4, 3), X, q),
                _f(R(-2, 3), R(2, 3), R(-5, 3), R(4, 3), X, s7),
                _f(2, R(2, 3), R(-2, 3), R(4, 3), X, t),
            ],
        }
    else:
        W = ARG_INV
        rows = {
            "H1": [_f(R(3, 5), R(7, 3), R(-1, 3), R(11, 3), W, q), _f(R(-2, 15), R(4, 3), R(-1, 3), R(8, 3), W, s5)],
            "H2": [_f(1, R(5, 3), R(1, 3), R(7, 3), W), _f(R(-2, 3), R(2, 3), R(1, 3), R(4, 3), W, L + 1)],
            "H3": [
                _f(R(10, 7), R(8, 3), R(1, 3), R(10, 3), W, q),
                _f(R(-1, 6), R(5, 3), R(1, 3), R(7, 3), W, s8),
                _f(1, R(2, 3), R(1, 3), R(4, 3), W, t),
            ],
            "H4": [
                _f(R(24, 7), R(11, 3), R(1, 3), R(13, 3), W, q),
                _f(R(-10, 21), R(8, 3), R(1, 3), R(10, 3), W, s7),
                _f(2, R(5, 3), R(1, 3), R(7, 3), W, t),
            ],
        }
    return {k: HypergeometricExpression(v) for k, v in rows.items()}


def reflect_combinations() -> dict[str, HypergeometricExpression]:
    """Four combinations of reducible F(.;1-lambda) that are algebraic in lambda."""
    return _combinations(ARG_REFLECT)


def inverse_combinations() -> dict[str, HypergeometricExpression]:
    """Their counterparts in F(.;1/lambda)."""
    return _combinations(ARG_INV)


def lone_functions(combos: dict[str, HypergeometricExpression]) -> list[HyperFn]:
    """Distinct hypergeometric functions occurring in the combinations, in order."""
    seen: dict = {}
    for e in combos.values():
        for t in e.terms:
            seen.setdefault(t.hyper.key(), t.hyper)
    return list(seen.values())


TETRAHEDRAL_PAIR = [HyperFn(R(5, 6), R(1, 6), R(5, 3), ARG_REFLECT), HyperFn(R(7, 6), R(-1, 6), R(7, 3), ARG_REFLECT)]
QUARTICS = ([91125, 0, -54000, 0, 256], [81000, 0, -48000, 0, -1])

PROPOSITIONS = ("reflect-combinations", "inverse-combinations", "tetrahedral-pair", "quartic-ratio")


@dataclass
class Entry:
    name: str
    value: BigComplex | None
    polynomial: str | None
    expect_found: bool
    closed_form: str | None = None
    closed_form_residual: mpmath.mpf | None = None
    note: str = ""
    passed: bool | None = False  # None: skipped


def _search(v: BigComplex, max_degree: int, precision: int, height_bound):
    try:
        return minimal_polynomial(v, max_degree, precision, height_bound)
    except NotFound:
        return None


def _combination_entries(combos, lam, precision, max_degree, include_lone, lone_degree, lone_height):
    entries = []
    tol = mpmath.mpf(10) ** (-(precision - 20))
    for name, expr in combos.items():
        v = expr.evaluate(lam, precision)
        res = _search(v, max_degree, precision, None)
        closed = contiguous_rewrite(expr)
        with mpmath.workdps(precision + GUARD_DIGITS):
            cv = closed.evaluate(lam, precision)
            resid = abs(cv.value - v.value)
        ok = res is not None and resid < tol and not any(t.hyper for t in closed.terms)
        entries.append(Entry(name, v, str(res) if res else None, True, str(closed), resid, passed=ok))
    if include_lone:
        for fn in lone_functions(combos):
            v = fn.evaluate(lam, precision)
            res = _search(v, lone_degree, precision, lone_height)
            entries.append(Entry(str(fn), v, str(res) if res else None, False, passed=res is None))
    return entries


def _tetrahedral_entries(lam, precision, max_degree):
    # the minimal polynomials are sparse (polynomials in F^3 at the samples
    # tried), so powers of the value are searched before high degrees
    entries = []
    for fn in TETRAHEDRAL_PAIR:
        v = fn.evaluate(lam, precision)
        try:
            res = power_relation(v, max_degree, precision)
        except NotFound:
            res = None
        entries.append(Entry(str(fn), v, str(res) if res else None, True, passed=res is not None))
    return entries


def _in_q_zeta3(poly) -> bool:
    c = [Fraction(x) for x in poly.coeffs]
    if len(c) == 2:
        return True
    if len(c) != 3:
        return False
    disc = c[1] ** 2 - 4 * c[0] * c[2]
    # Q(sqrt(disc)) = Q(sqrt(-3)) iff disc / -3 is a rational square
    r = disc / -3
    if r <= 0:
        return False
    from math import isqrt

    n, d = r.numerator, r.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _quartic_entries(precision):
    entries = []
    a, b, c = R(5, 6), R(1, 6), R(1)
    p = HyperParams(a, b, c)
    for quartic in QUARTICS:
        with mpmath.workdps(precision + 3 * GUARD_DIGITS):
            roots = mpmath.polyroots(quartic, maxsteps=400, extraprec=4 * precision)
        for t in roots:
            name = f"root {mpmath.nstr(t, 8)} of {quartic}"
            with mpmath.workdps(precision + 3 * GUARD_DIGITS):
                x = 27 * t * t / 16
                if abs(mpmath.im(x)) < mpmath.mpf(10) ** (-precision):
                    x = mpmath.mpc(mpmath.re(x), 0)
                err = abs(x) * mpmath.mpf(10) ** (-(precision + 2 * GUARD_DIGITS))
                xb, yb = BigComplex(x, err), BigComplex(1 - x, err)
            try:
                num = eval_hyper(p, xb, precision)
                den = eval_hyper(p, yb, precision)
            except BranchCut as exc:
                entries.append(Entry(name, None, None, True, note=f"skipped: {exc}", passed=None))
                continue
            with mpmath.workdps(precision + GUARD_DIGITS):
                phase = mpmath.expjpi(-mpmath.mpf(5) / 6)
                v = BigComplex(phase, abs(phase) * mpmath.mpf(10) ** (-(precision + GUARD_DIGITS))) * num / den
            res = _search(v, 2, precision, None)
            ok = res is not None and _in_q_zeta3(res.polynomial)
            entries.append(Entry(name, v, str(res) if res else None, True, note="ratio in Q(zeta3)" if ok else "", passed=ok))
    return entries


def verify_proposition(prop: str, samples, precision: int, max_degree: int = 8, include_lone: bool = False,
                       lone_degree: int = 12, lone_height: int = 10 ** 40) -> dict:
    """Run one verification; returns {"prop", "precision", "samples": [...], "all_pass"}.

    NotFound entries are reported as "no relation detected at this
    precision/height", which is evidence only.
    """
    if prop not in PROPOSITIONS:
        raise ValueError(f"unknown proposition {prop!r}; choose from {', '.join(PROPOSITIONS)}")
    samples = [s if isinstance(s, GaussianRational) else GaussianRational.parse(str(s)) for s in samples]
    report = {"prop": prop, "precision": precision, "samples": []}
    if prop == "quartic-ratio":
        groups = [("fixed quartic roots", _quartic_entries(precision))]
    else:
        groups = []
        for lam in samples:
            if prop == "tetrahedral-pair":
                entries = _tetrahedral_entries(lam, precision, max_degree)
            else:
                combos = reflect_combinations() if prop == "reflect-combinations" else inverse_combinations()
                entries = _combination_entries(combos, lam, precision, max_degree, include_lone, lone_degree, lone_height)
            groups.append((str(lam), entries))
    all_pass = True
    for label, entries in groups:
        rows = []
        for e in entries:
            if e.passed is not None:
                all_pass = all_pass and e.passed
            rows.append(
                {
                    "name": e.name,
                    "value": None if e.value is None else mpmath.nstr(e.value.value, 30),
                    "polynomial": e.polynomial if e.polynomial else NOT_FOUND_LABEL,
                    "expected": "algebraic" if e.expect_found else "no relation",
                    "closed_form": e.closed_form,
                    "closed_form_residual": None if e.closed_form_residual is None else mpmath.nstr(e.closed_form_residual, 3),
                    "note": e.note,
                    "pass": e.passed,
                }
            )
        report["samples"].append({"lambda": label, "entries": rows})
    report["all_pass"] = all_pass
    return report
