"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 a required relation
was not found.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import serialize as ser
from .errors import NoApplicableRelation, NotFound, ShodgeError
from .expression import ARG_INV, ARG_REFLECT, GaussianRational
from .fermat import DegreeProfile, hodge_numbers, hodge_table
from .forms import classify_good_form, FormTerm
from .hodge_space import dim_strong_hodge, nullspace_oracle
from .hyper.hyp2f1 import HyperParams, eval_hyper
from .hyper.numeric import BigComplex
from .hyper.contiguity import contiguous_rewrite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NOT_FOUND = 0, 1, 2, 3
DEFAULT_PRECISION = 50
PRECISION_ENV = "SHODGE_PRECISION"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class RunConfig:
    degrees: list[int] = field(default_factory=list)
    pert_degree: int = 3
    lambda_values: list[GaussianRational] = field(default_factory=list)
    precision: int = DEFAULT_PRECISION
    output_format: str = "text"
    seed: int = 0
    perturbation: list[Fraction] | None = None  # None: the cubic family


    def __post_init__(self):
        if self.precision < 20:
            raise UsageError("precision must be at least 20 digits")
        if any(d < 2 for d in self.degrees):
            raise UsageError("all degrees must be at least 2")

    def profile(self) -> DegreeProfile:
        if not self.degrees:
            raise UsageError("--degrees is required")
        return DegreeProfile(tuple(self.degrees), self.pert_degree)

    def pert_poly(self):
        """P(y) as a UniPoly over Q(lambda), or None for the cubic family."""
        if self.perturbation is None:
            return None
        from .forms import ypoly

        return ypoly(self.perturbation)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _lambdas(text: str) -> list[GaussianRational]:
    try:
        return [GaussianRational.parse(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_config(path: str) -> dict[str, str]:
    """key = value (or key: value) lines; '#' starts a comment; keys mirror flags."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            for sep in ("=", ":"):
                if sep in line:
                    k, v = line.split(sep, 1)
                    out[k.strip().lstrip("-").replace("_", "-")] = v.strip()
                    break
            else:
                raise UsageError(f"bad config line: {raw.rstrip()}")
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--degrees", help="Fermat degrees, e.g. 2,6")
    common.add_argument("--pert-degree", type=int, help="degree of the perturbation polynomial (default 3)")
    common.add_argument("--pert", help='"cubic" (y(1-y)(lambda-y), the default) or rational coefficients c0,c1,... of P(y)')
    common.add_argument("--prec", type=int, help=f"digits (default ${PRECISION_ENV} or {DEFAULT_PRECISION})")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, help="seed for randomized checks")
    common.add_argument("--config", help="key = value file with defaults for these flags")

    p = _Parser(prog="shodge", description="Hodge cycles, periods and algebraic hypergeometric values.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, text in (("dim", "dimension of the joint Hodge-cycle space"), ("gens", "basis of the joint Hodge-cycle space")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--oracle", action="store_true", help="solve the full linear system instead of the fast paths")
    sub.add_parser("hodge-numbers", parents=[common], help="primitive Hodge numbers")

    c = sub.add_parser("classify", parents=[common], help="good-form test for omega_beta/f^k")
    c.add_argument("--beta", required=True)
    c.add_argument("--order", type=int, default=1)

    pe = sub.add_parser("period", parents=[common], help="symbolic period over a joint cycle")
    pe.add_argument("--beta", required=True)
    pe.add_argument("--order", type=int, default=1)
    pe.add_argument("--cycle", type=int, choices=(0, 1), default=0)
    pe.add_argument("--alpha", help="Fermat cycle index (default all zero)")
    pe.add_argument("--eval-lambda", help="also evaluate at this lambda")

    ev = sub.add_parser("eval", parents=[common], help="evaluate F(a,b,c;z)")
    ev.add_argument("--f", required=True, help="a,b,c")
    ev.add_argument("--z", required=True, help='"1-lambda", "1/lambda" or a complex rational')
    ev.add_argument("--lambda", dest="lam", help="lambda when z is given in terms of it")

    rw = sub.add_parser("rewrite", parents=[common], help="contiguous-relation rewriting of an expression")
    rw.add_argument("--expr", required=True, help="expression JSON file")

    mp_ = sub.add_parser("minpoly", parents=[common], help="minimal polynomial of an expression value")
    mp_.add_argument("--value-expr", required=True, help="expression JSON file")
    mp_.add_argument("--lambda", dest="lam", required=True)
    mp_.add_argument("--max-degree", type=int, default=8)
    mp_.add_argument("--height-bound", type=int)
    mp_.add_argument("--allow-missing", action="store_true", help="exit 0 even when nothing is found")

    ve = sub.add_parser("verify", parents=[common], help="numeric verification of algebraic combinations")
    ve.add_argument("--prop", required=True)
    ve.add_argument("--lambda", dest="lam", default="2")
    ve.add_argument("--max-degree", type=int, default=8)
    ve.add_argument("--include-lone", action="store_true", help="also test each lone F (expects no relation)")
    ve.add_argument("--require", action="store_true", help="exit 3 unless every check passes")

    sub.add_parser("selftest", parents=[common], help="quick end-to-end checks")
    return p


def _config(args) -> RunConfig:
    file_vals = read_config(args.config) if getattr(args, "config", None) else {}

    def pick(flag, attr, conv, default):
        v = getattr(args, attr, None)
        if v is not None and v is not False:
            return v
        if flag in file_vals:
            return conv(file_vals[flag])
        return default

    env_prec = os.environ.get(PRECISION_ENV)
    try:
        default_prec = int(env_prec) if env_prec else DEFAULT_PRECISION
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be an integer") from None
    degrees = pick("degrees", "degrees", str, "")
    pert = pick("pert", "pert", str, "cubic")
    coeffs = None
    pert_degree = pick("pert-degree", "pert_degree", int, None)
    if pert.strip().lower() != "cubic":
        coeffs = _fractions(pert)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 3:
            raise UsageError("--pert needs a polynomial of degree at least 2")
        if pert_degree is not None and pert_degree != len(coeffs) - 1:
            raise UsageError("--pert-degree disagrees with the degree of --pert")
        pert_degree = len(coeffs) - 1
    as_json = args.json or file_vals.get("json", "").lower() in ("1", "true", "yes")
    return RunConfig(
        degrees=_ints(degrees) if degrees else [],
        pert_degree=3 if pert_degree is None else pert_degree,
        perturbation=coeffs,
        precision=pick("prec", "prec", int, default_prec),
        output_format="json" if as_json else "text",
        seed=pick("seed", "seed", int, 0),
    )


def _emit(cfg: RunConfig, obj, text: str) -> None:
    if cfg.output_format == "json":
        print(ser.dumps(obj))
    else:
        print(text)


def _value_dict(v: BigComplex, digits: int) -> dict:
    return ser.bigcomplex_to(v, digits)


def _value_text(v: BigComplex, digits: int) -> str:
    d = ser.bigcomplex_to(v, digits)
    return f"{d['re']} + {d['im']}*i  (error <= {d['error']})"


def _space(args, cfg):
    prof = cfg.profile()
    return nullspace_oracle(prof) if args.oracle else dim_strong_hodge(prof)


def cmd_dim(args, cfg):
    res = _space(args, cfg)
    _emit(cfg, ser.hodge_space_to(res), str(res.dimension))


def cmd_gens(args, cfg):
    res = _space(args, cfg)
    lines = [f"dimension {res.dimension} ({res.method}); {res.slices} identical k-slices, basis per slice:"]
    lines += ["(" + ",".join(str(x) for x in v) + ")" for v in res.slice_basis]
    out = ser.hodge_space_to(res)
    out["generators"] = [
        [{"alpha": list(a), "k": k, "coeff": ser.q(v)} for (a, k), v in sorted(g.coefficients.items())]
        for g in res.generators
    ]
    _emit(cfg, out, "\n".join(lines))


def cmd_hodge_numbers(args, cfg):
    prof = cfg.profile()
    table = hodge_table(prof)
    out = {"levels": [{"level": k, "count": c} for k, c in hodge_numbers(prof)], "table": table}
    _emit(cfg, out, ", ".join(f"{k}: {v}" for k, v in reversed(table.items())))


def cmd_classify(args, cfg):
    beta = tuple(_ints(args.beta))
    res = classify_good_form(FormTerm(beta, args.order), cfg.profile(), cfg.pert_poly())
    _emit(cfg, ser.good_form_to(res), res.verdict)


def cmd_period(args, cfg):
    from .periods import joint_period_general

    prof = cfg.profile()
    beta = tuple(_ints(args.beta))
    alpha = tuple(_ints(args.alpha)) if args.alpha else (0,) * prof.n
    expr = joint_period_general(args.cycle, alpha, beta, args.order, prof)
    out = ser.expression_to(expr)
    text = str(expr)
    if args.eval_lambda:
        lam = GaussianRational.parse(args.eval_lambda)
        v = expr.evaluate(lam, cfg.precision)
        out = {"expression": out, "lambda": str(lam), "value": _value_dict(v, cfg.precision)}
        text += "\n= " + _value_text(v, cfg.precision)
    _emit(cfg, out, text)


def _z_value(text: str, lam_text: str | None):
    t = text.replace(" ", "")
    if t in (ARG_REFLECT, ARG_INV):
        if not lam_text:
            raise UsageError("--lambda is needed when z is given in terms of lambda")
        lam = GaussianRational.parse(lam_text)
        return 1 - lam if t == ARG_REFLECT else 1 / lam
    return GaussianRational.parse(t)


def cmd_eval(args, cfg):
    a, b, c = _fractions(args.f)
    z = _z_value(args.z, args.lam)
    p = HyperParams(a, b, c)
    if z.is_real():
        v = eval_hyper(p, z.re, cfg.precision)
    else:
        with mpmath.workdps(cfg.precision + 10):
            v = eval_hyper(p, BigComplex(z.to_mpc(), abs(z.to_mpc()) * mpmath.mpf(10) ** -(cfg.precision + 10)), cfg.precision)
    _emit(cfg, {"f": [str(a), str(b), str(c)], "z": str(z), "value": _value_dict(v, cfg.precision)}, _value_text(v, cfg.precision))


def _load_expr(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if "expression" in data:
        data = data["expression"]
    return ser.expression_from(data)


def cmd_rewrite(args, cfg):
    expr = _load_expr(args.expr)
    try:
        out = contiguous_rewrite(expr)
    except NoApplicableRelation as exc:
        if exc.partial is not None:
            _emit(cfg, {"partial": ser.expression_to(exc.partial), "error": str(exc)}, f"partial: {exc.partial}")
        raise
    _emit(cfg, ser.expression_to(out), str(out))


def cmd_minpoly(args, cfg):
    from .algebraicity.minpoly import NOT_FOUND_LABEL, minimal_polynomial

    expr = _load_expr(args.value_expr)
    lam = GaussianRational.parse(args.lam)
    v = expr.evaluate(lam, cfg.precision)
    try:
        res = minimal_polynomial(v, args.max_degree, cfg.precision, args.height_bound)
    except NotFound:
        _emit(cfg, {"polynomial": None, "status": NOT_FOUND_LABEL}, NOT_FOUND_LABEL)
        return EXIT_OK if args.allow_missing else EXIT_NOT_FOUND
    _emit(cfg, ser.minpoly_to(res), str(res))
    return EXIT_OK


def cmd_verify(args, cfg):
    from .algebraicity.verify import verify_proposition

    report = verify_proposition(args.prop, _lambdas(args.lam), cfg.precision, args.max_degree, args.include_lone)
    lines = [f"{report['prop']} at {report['precision']} digits"]
    for s in report["samples"]:
        for e in s["entries"]:
            status = "SKIP" if e["pass"] is None else ("PASS" if e["pass"] else "FAIL")
            extra = f"  closed form {e['closed_form']} (residual {e['closed_form_residual']})" if e["closed_form"] else ""
            note = f"  [{e['note']}]" if e["note"] else ""
            lines.append(f"{status} lambda={s['lambda']} {e['name']}: {e['polynomial']}{extra}{note}")
    lines.append("all checks passed" if report["all_pass"] else "some checks failed")
    _emit(cfg, report, "\n".join(lines))
    if args.require and not report["all_pass"]:
        return EXIT_NOT_FOUND
    return EXIT_OK


def cmd_selftest(args, cfg):
    from .algebraicity.verify import reflect_combinations
    from .periods import joint_period_order1, quadrature_oracle

    rng = random.Random(cfg.seed)
    checks = []
    checks.append(("dimension (2,6;3) is 10", dim_strong_hodge(DegreeProfile((2, 6), 3)).dimension == 10))
    prof = DegreeProfile((2, 6), 3)
    lam = GaussianRational(rng.choice([3, Fraction(5, 2), 4]))
    beta = rng.choice([(0, 1, 0), (0, 3, 0), (0, 4, 1)])
    cyc = rng.randrange(2)
    a = joint_period_order1(cyc, (0, 0), beta, prof).evaluate(lam, 30)
    b = quadrature_oracle(cyc, beta, lam, 30, prof)
    with mpmath.workdps(40):
        checks.append((f"period formula vs quadrature, beta={beta}, cycle {cyc}, lambda={lam}",
                       abs(a.value - b.value) < mpmath.mpf(10) ** -25 * abs(b.value)))
    g = reflect_combinations()["G2"]
    closed = contiguous_rewrite(g)
    checks.append(("rewrite gives an algebraic term", all(t.hyper is None for t in closed.terms)))
    with mpmath.workdps(40):
        d = abs(g.evaluate(lam, 30).value - closed.evaluate(lam, 30).value)
        checks.append(("rewritten value matches", d < mpmath.mpf(10) ** -25))
    ok = all(c[1] for c in checks)
    _emit(cfg, {"checks": [{"name": n, "pass": p} for n, p in checks], "all_pass": ok},
          "\n".join(f"{'PASS' if p else 'FAIL'} {n}" for n, p in checks))
    return EXIT_OK if ok else EXIT_DOMAIN


COMMANDS = {
    "dim": cmd_dim,
    "gens": cmd_gens,
    "hodge-numbers": cmd_hodge_numbers,
    "classify": cmd_classify,
    "period": cmd_period,
    "eval": cmd_eval,
    "rewrite": cmd_rewrite,
    "minpoly": cmd_minpoly,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        rc = COMMANDS[args.command](args, cfg)
        return EXIT_OK if rc is None else rc
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ShodgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
