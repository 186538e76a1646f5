"""JSON encoding of results.  Rationals are written as "p/q" strings so that
parse(emit(x)) == x exactly."""
from __future__ import annotations

import json
from fractions import Fraction

import mpmath

from .algebraicity.minpoly import MinPolyResult
from .exact.cyclotomic import CyclotomicNumber
from .exact.polynomial import UniPoly
from .exact.ratfun import RationalFunction
from .expression import BetaMonomial, HyperFn, HypergeometricExpression, HyperTerm
from .fermat import DegreeProfile
from .forms import GoodFormResult
from .hodge_space import HodgeSpaceResult
from .hyper.numeric import BigComplex


def q(x) -> str:
    return str(Fraction(x))


def unq(s) -> Fraction:
    return Fraction(s)


def poly_to(p: UniPoly) -> list[str]:
    return [q(c) for c in p.coeffs]


def poly_from(data) -> UniPoly:
    return UniPoly([unq(c) for c in data])


def ratfun_to(r: RationalFunction) -> dict:
    return {"num": poly_to(r.num), "den": poly_to(r.den)}


def ratfun_from(data) -> RationalFunction:
    return RationalFunction(poly_from(data["num"]), poly_from(data["den"]))


def cyclo_to(c: CyclotomicNumber) -> dict:
    return {"order": c.order, "coeffs": [q(x) for x in c.coeffs]}


def cyclo_from(data) -> CyclotomicNumber:
    return CyclotomicNumber(int(data["order"]), [unq(x) for x in data["coeffs"]])


def term_to(t: HyperTerm) -> dict:
    out = {
        "cyclo": cyclo_to(t.cyclo),
        "powers": [{"base": b, "exp": q(e)} for b, e in t.powers],
        "ratfun": ratfun_to(t.ratfun),
        "beta": [[q(x) for x in f] for f in t.beta.factors],
        "hyper": None,
    }
    if t.hyper is not None:
        h = t.hyper
        out["hyper"] = {"a": q(h.a), "b": q(h.b), "c": q(h.c), "arg": h.arg}
    return out


def term_from(data) -> HyperTerm:
    h = data.get("hyper")
    hyper = None if not h else HyperFn(unq(h["a"]), unq(h["b"]), unq(h["c"]), h["arg"])
    return HyperTerm(
        cyclo_from(data["cyclo"]),
        tuple((p["base"], unq(p["exp"])) for p in data.get("powers", [])),
        ratfun_from(data["ratfun"]),
        BetaMonomial(tuple(tuple(unq(x) for x in f) for f in data.get("beta", []))),
        hyper,
    )


def expression_to(e: HypergeometricExpression) -> dict:
    return {"terms": [term_to(t) for t in e.terms]}


def expression_from(data) -> HypergeometricExpression:
    return HypergeometricExpression([term_from(t) for t in data["terms"]])


def profile_to(p: DegreeProfile) -> dict:
    return {"fermat_degrees": list(p.fermat_degrees), "pert_degree": p.pert_degree}


def profile_from(data) -> DegreeProfile:
    return DegreeProfile(tuple(data["fermat_degrees"]), data["pert_degree"])


def hodge_space_to(r: HodgeSpaceResult) -> dict:
    return {
        "dimension": r.dimension,
        "method": r.method,
        "slices": r.slices,
        "slice_basis": [[q(x) for x in v] for v in r.slice_basis],
        "profile": None if r.profile is None else profile_to(r.profile),
    }


def hodge_space_from(data) -> HodgeSpaceResult:
    prof = data.get("profile")
    return HodgeSpaceResult(
        data["dimension"],
        data["method"],
        [tuple(unq(x) for x in v) for v in data["slice_basis"]],
        None if prof is None else profile_from(prof),
        data.get("slices", 1),
    )


def good_form_to(r: GoodFormResult) -> dict:
    return {"verdict": r.verdict, "trace": r.trace}


def good_form_from(data) -> GoodFormResult:
    return GoodFormResult(data["verdict"], data["trace"])


def bigcomplex_to(v: BigComplex, digits: int) -> dict:
    with mpmath.workdps(digits + 5):
        return {
            "re": mpmath.nstr(v.value.real, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf),
            "im": mpmath.nstr(v.value.imag, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf),
            "error": mpmath.nstr(v.error, 3),
        }


def bigcomplex_from(data, digits: int) -> BigComplex:
    with mpmath.workdps(digits + 5):
        return BigComplex(mpmath.mpc(mpmath.mpf(data["re"]), mpmath.mpf(data["im"])), mpmath.mpf(data["error"]))


def minpoly_to(r: MinPolyResult) -> dict:
    with mpmath.workdps(20):
        resid = mpmath.nstr(r.residual, 5, min_fixed=mpmath.inf)
    return {
        "polynomial": [str(c) for c in r.int_coeffs()],
        "text": str(r),
        "residual": resid,
        "certified": r.certified,
    }


def minpoly_from(data) -> MinPolyResult:
    with mpmath.workdps(20):
        resid = mpmath.mpf(data["residual"])
    return MinPolyResult(UniPoly([Fraction(int(c)) for c in data["polynomial"]]), resid, data["certified"])


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2)
