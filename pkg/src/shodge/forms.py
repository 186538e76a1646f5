"""Calculus on the meromorphic forms omega_beta / f^k with coefficients in Q(lambda).

Here f = x1^m1 + ... + xn^mn + P(y) and omega_beta = x^beta' y^beta_{n+1} dx dy.
Only the last exponent moves under the operations below, because P depends on
y alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import DimensionMismatch, WeightEqualsOrder, ZeroDiscriminant
from .exact.polynomial import UniPoly, ext_gcd
from .exact.ratfun import LAMBDA, RationalFunction
from .fermat import DegreeProfile, weight


def _rf(c) -> RationalFunction:
    return c if isinstance(c, RationalFunction) else RationalFunction(Fraction(c))


def ypoly(coeffs: Iterable) -> UniPoly:
    """Polynomial in y with Q(lambda) coefficients."""
    return UniPoly([_rf(c) for c in coeffs])


def cubic_family() -> UniPoly:
    """P(y) = y(1-y)(lambda-y) = y^3 - (1+lambda) y^2 + lambda y."""
    return ypoly([0, LAMBDA, -(LAMBDA + 1), 1])


@dataclass(frozen=True)
class FormTerm:
    beta: tuple[int, ...]
    pole_order: int
    coeff: RationalFunction = field(default_factory=lambda: RationalFunction(1))

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        object.__setattr__(self, "coeff", _rf(self.coeff))
        if self.pole_order < 1:
            raise ValueError("pole order must be positive")


class FormCombination:
    """Finite Q(lambda)-combination of omega_beta / f^k keyed by (beta, k)."""

    def __init__(self, profile: DegreeProfile, terms: Iterable[FormTerm] = ()):
        self.profile = profile
        self._terms: dict[tuple[tuple[int, ...], int], RationalFunction] = {}
        for t in terms:
            self.add(t.beta, t.pole_order, t.coeff)

    def add(self, beta, k: int, coeff) -> None:
        beta = tuple(beta)
        if len(beta) != self.profile.n + 1:
            raise DimensionMismatch("exponent vector length does not match profile")
        if beta[-1] < 0:
            raise ValueError("negative y exponent")
        key = (beta, k)
        val = self._terms.get(key, RationalFunction()) + _rf(coeff)
        if val.is_zero():
            self._terms.pop(key, None)
        else:
            self._terms[key] = val

    @property
    def terms(self) -> list[FormTerm]:
        return [FormTerm(b, k, c) for (b, k), c in sorted(self._terms.items())]

    def items(self):
        return sorted(self._terms.items())

    def max_order(self) -> int:
        return max((k for _, k in self._terms), default=0)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return (
            isinstance(other, FormCombination)
            and self.profile == other.profile
            and self._terms == other._terms
        )

    def __repr__(self):
        inner = ", ".join(f"[{c}] w{b}/f^{k}" for (b, k), c in self.items())
        return f"FormCombination({inner})"


@dataclass(frozen=True)
class DiscriminantDecomposition:
    """Delta = Q1 * P' + P * Q2 with Delta in Q[lambda]."""

    p: UniPoly
    delta: RationalFunction
    q1: UniPoly
    q2: UniPoly

    def residual(self) -> UniPoly:
        return ypoly([self.delta]) - self.q1 * self.p.derivative() - self.p * self.q2

    def check(self) -> bool:
        return self.residual().is_zero()


def cubic_decomposition() -> DiscriminantDecomposition:
    L = LAMBDA
    a = 2 * (L * L - L + 1)
    b = -(2 * L ** 3 - L * L - L + 2)
    c = L * (1 - L) ** 2
    e = 4 * L ** 3 - 3 * L * L - 3 * L + 4
    dec = DiscriminantDecomposition(
        cubic_family(), L * L * (1 - L) ** 2, ypoly([c, b, a]), ypoly([e, -3 * a])
    )
    if not dec.check():
        raise AssertionError("cubic decomposition identity failed")
    return dec


def cubic_coefficients() -> dict[str, RationalFunction]:
    dec = cubic_decomposition()
    return {"a": dec.q1[2], "b": dec.q1[1], "c": dec.q1[0], "e": dec.q2[0], "delta": dec.delta}


def general_decomposition(p: UniPoly) -> DiscriminantDecomposition:
    """Extended Euclid on (P', P) over Q(lambda), denominators cleared into Delta."""
    p = ypoly(p.coeffs)
    if p.degree < 1:
        raise ZeroDiscriminant("P must have positive degree")
    g, s, t = ext_gcd(p.derivative(), p)
    if g.degree != 0:
        raise ZeroDiscriminant("P and P' share a factor")
    den = UniPoly([1])
    for c in list(s.coeffs) + list(t.coeffs):
        d = _rf(c).den
        den = den * d.exact_div(_poly_gcd_q(den, d))
    delta = RationalFunction(den)
    dec = DiscriminantDecomposition(p, delta, s * delta, t * delta)
    if not dec.check():
        raise AssertionError("decomposition identity failed")
    return dec


def _poly_gcd_q(a: UniPoly, b: UniPoly) -> UniPoly:
    from .exact.polynomial import poly_gcd

    return poly_gcd(a, b)


def _mul_ypoly(out: FormCombination, beta, k: int, poly: UniPoly, scale, shift: int = 0) -> None:
    """Add scale * poly(y) * y^shift * omega_beta / f^k to ``out``."""
    for i, c in enumerate(poly.coeffs):
        if not c:
            continue
        e = beta[-1] + shift + i
        out.add(beta[:-1] + (e,), k, c * scale)


def pole_reduce(form: FormCombination, dec: DiscriminantDecomposition) -> FormCombination:
    """Lower the pole order of every term with order >= 2 by one.

    [w_b/f^j] = (1/Delta) [ (b_y Q1/(j-1)) w_{b-(0',1)}
                            + ((1 - A'/(j-1)) Q2 + Q1'/(j-1)) w_b ] / f^{j-1}
    with A' the Fermat part of the weight.
    """
    prof = form.profile
    out = FormCombination(prof)
    inv_delta = 1 / dec.delta
    dq1 = dec.q1.derivative()
    for (beta, j), coeff in form.items():
        if j == 1:
            out.add(beta, 1, coeff)
            continue
        a_prime = weight(beta, prof, "fermatOnly")
        c = coeff * inv_delta
        jm1 = Fraction(1, j - 1)
        if beta[-1]:
            _mul_ypoly(out, beta, j - 1, dec.q1, c * (beta[-1] * jm1), shift=-1)
        _mul_ypoly(out, beta, j - 1, dec.q2, c * (1 - a_prime * jm1))
        _mul_ypoly(out, beta, j - 1, dq1, c * jm1)
    return out


def reduce_to_order_one(form: FormCombination, dec: DiscriminantDecomposition) -> FormCombination:
    while form.max_order() > 1:
        form = pole_reduce(form, dec)
    return form


def increment_coefficient(a_beta: Fraction, k: int) -> Fraction:
    """Scalar in front of the pole increment: k / (A_beta - k)."""
    if a_beta == k:
        raise WeightEqualsOrder(f"A_beta = {a_beta} equals the pole order")
    return Fraction(k) / (a_beta - k)


def pole_increment(term: FormTerm, profile: DegreeProfile, p: UniPoly | None = None) -> FormCombination:
    """Rewrite omega_beta/f^k as a combination of order k+1 forms.

    [w_b/f^k] = k/(A_b-k) * (1/m) sum_{j<m} (j-m) c_j w_{b+(0',j)} / f^{k+1},
    c_j the coefficients of P (degree m).
    """
    p = cubic_family() if p is None else ypoly(p.coeffs)
    m = p.degree
    if m != profile.pert_degree:
        raise DimensionMismatch("P degree does not match the profile")
    a_beta = weight(term.beta, profile)
    scale = term.coeff * (increment_coefficient(a_beta, term.pole_order) / m)
    out = FormCombination(profile)
    for j in range(m):
        cj = p[j]
        if not cj:
            continue
        out.add(term.beta[:-1] + (term.beta[-1] + j,), term.pole_order + 1, cj * (j - m) * scale)
    return out


GOOD = "Good"
NOT_GOOD = "NotGood"


@dataclass
class GoodFormResult:
    verdict: str
    trace: dict

    @property
    def good(self) -> bool:
        return self.verdict == GOOD


class GoodFormClassifier:
    """Good-form test with a memo on (beta, k); the memo only caches results."""

    def __init__(self, profile: DegreeProfile, p: UniPoly | None = None):
        self.profile = profile
        self.p = cubic_family() if p is None else ypoly(p.coeffs)
        if self.p.degree != profile.pert_degree:
            raise DimensionMismatch("P degree does not match the profile")
        m = self.p.degree
        self.shifts = [j for j in range(m) if self.p[j]]
        self._memo: dict = {}

    def classify(self, beta, k: int) -> GoodFormResult:
        beta = tuple(beta)
        a = weight(beta, self.profile)
        if a < k:
            return GoodFormResult(GOOD, {"beta": list(beta), "order": k, "weight": str(a), "stop": "A<k"})
        if a.denominator == 1:
            return GoodFormResult(
                NOT_GOOD, {"beta": list(beta), "order": k, "weight": str(a), "stop": "integral weight"}
            )
        ok, trace = self._expand(beta, k)
        return GoodFormResult(GOOD if ok else NOT_GOOD, trace)

    def _expand(self, beta, k):
        key = (beta, k)
        if key in self._memo:
            return self._memo[key]
        a = weight(beta, self.profile)
        node = {"beta": list(beta), "order": k, "weight": str(a)}
        if a <= k:
            ok = a < k
            node["stop"] = "A<k" if ok else "A=k"
        else:
            children = []
            ok = True
            for j in self.shifts:
                child = beta[:-1] + (beta[-1] + j,)
                c_ok, c_trace = self._expand(child, k + 1)
                children.append(c_trace)
                ok = ok and c_ok
            node["children"] = children
        node["good"] = ok
        self._memo[key] = (ok, node)
        return ok, node


def classify_good_form(term: FormTerm, profile: DegreeProfile, p: UniPoly | None = None) -> GoodFormResult:
    return GoodFormClassifier(profile, p).classify(term.beta, term.pole_order)
