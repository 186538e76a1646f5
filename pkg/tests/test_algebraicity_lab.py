import random
from fractions import Fraction as R

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shodge.algebraicity import IntegerLattice, lll_reduce, minimal_polynomial, power_relation
from shodge.algebraicity.lll import is_lll_reduced
from shodge.algebraicity.minpoly import NOT_FOUND_LABEL, significance_bound
from shodge.algebraicity.verify import PROPOSITIONS, _in_q_zeta3, verify_proposition
from shodge.errors import DependentRows, NotFound
from shodge.exact import UniPoly
from shodge.hyper import BigComplex


def _bc(x, digits):
    with mpmath.workdps(digits + 20):
        return BigComplex(x, mpmath.mpf(10) ** -(digits + 5))


def _gram_det(rows):
    from shodge.algebraicity.lll import gram_schmidt_exact

    bs, _ = gram_schmidt_exact(rows)
    out = R(1)
    for v in bs:
        out *= sum(x * x for x in v)
    return out


def test_lll_identity_and_small_example():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert sorted(map(sorted, lll_reduce(eye).basis)) == sorted(map(sorted, eye))
    red = lll_reduce(IntegerLattice([[1, 0, 0], [0, 1, 0], [201, 198, 1]]))
    assert min(max(abs(x) for x in row) for row in red.basis) <= 5
    assert is_lll_reduced(red.basis)


def test_lll_rejects_dependent_rows():
    with pytest.raises(DependentRows):
        lll_reduce([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        lll_reduce([[1, 0], [0, 1]], delta=R(1, 5))


def test_lll_sqrt2_relation():
    with mpmath.workdps(70):
        v = mpmath.sqrt(2)
        s = mpmath.mpf(10) ** 60
        rows = [[1, 0, 0, int(s)], [0, 1, 0, int(mpmath.nint(s * v))], [0, 0, 1, int(mpmath.nint(s * v * v))]]
    first = lll_reduce(rows).basis[0][:3]
    assert tuple(abs(c) for c in first) == (2, 0, 1) and first[0] == -first[2] * 2


@given(
    st.integers(2, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n)
    ),
    st.sampled_from([R(3, 4), R(99, 100), R(1, 2)]),
)
def test_lll_lovasz_condition(rows, delta):
    from shodge.exact import rref

    if len(rref(rows)[1]) < len(rows):
        return
    red = lll_reduce(rows, delta)
    assert is_lll_reduced(red.basis, delta)
    # same lattice volume
    assert _gram_det(red.basis) == _gram_det(rows)


def test_minpoly_rational_and_gaussian():
    assert minimal_polynomial(_bc(2, 50), 4, 50).polynomial.coeffs == (-2, 1)
    with mpmath.workdps(60):
        r = minimal_polynomial(_bc(mpmath.mpc(1, 1) / 3, 50), 4, 50)
    assert r.int_coeffs() == [2, -6, 9]


@pytest.mark.parametrize(
    "make, coeffs",
    [
        (lambda: mpmath.sqrt(2), [-2, 0, 1]),
        (lambda: 2 * mpmath.cos(2 * mpmath.pi / 5), [-1, 1, 1]),
        (lambda: mpmath.cbrt(2), [-2, 0, 0, 1]),
    ],
)
def test_minpoly_known_algebraic(make, coeffs):
    with mpmath.workdps(120):
        v = make()
    r = minimal_polynomial(_bc(v, 100), 6, 100)
    assert r.int_coeffs() == coeffs
    assert r.certified
    with mpmath.workdps(220):
        v2 = make()
    assert minimal_polynomial(_bc(v2, 200), 6, 200).int_coeffs() == coeffs


@pytest.mark.parametrize("make", [lambda: mpmath.pi, lambda: mpmath.e])
def test_minpoly_transcendental_not_found(make):
    with mpmath.workdps(120):
        v = make()
    with pytest.raises(NotFound) as exc:
        minimal_polynomial(_bc(v, 100), 8, 100)
    assert NOT_FOUND_LABEL in str(exc.value)


def test_minpoly_rejects_inaccurate_value():
    with pytest.raises(ValueError):
        minimal_polynomial(BigComplex(1, mpmath.mpf(10) ** -5), 2, 100)


def test_significance_bound_shape():
    assert significance_bound(100, 4, False) == 10 ** 10
    assert significance_bound(100, 4, True) == 10 ** 20


def test_power_relation():
    with mpmath.workdps(120):
        v = mpmath.root(3, 6)
    r = power_relation(_bc(v, 100), 2, 100, exponents=(1, 2, 3, 6))
    # v^3 = sqrt(3) already has degree 2
    assert r.exponent == 3 and r.relation.int_coeffs() == [-3, 0, 1]
    r = power_relation(_bc(v, 100), 1, 100, exponents=(1, 2, 3, 6))
    assert r.exponent == 6 and r.relation.int_coeffs() == [-3, 1]


def test_random_integer_polynomial_roots():
    rng = random.Random(3)
    for _ in range(5):
        deg = rng.randint(2, 4)
        while True:
            coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 5)]
            p = UniPoly([R(c) for c in coeffs])
            # squarefree and irreducible enough: require no rational root
            if coeffs[0] and all(p(R(a, b)) != 0 for a in range(-9, 10) for b in range(1, 6)):
                break
        with mpmath.workdps(130):
            root = mpmath.polyroots(coeffs[::-1], maxsteps=200, extraprec=200)[0]
        r = minimal_polynomial(_bc(root, 110), 4, 110)
        assert r.polynomial.degree <= deg
        # the detected polynomial divides the generator
        assert (p % r.polynomial).is_zero()


def test_quartic_field_test():
    assert _in_q_zeta3(UniPoly([R(3), R(3), R(1)]))
    assert not _in_q_zeta3(UniPoly([R(-2), R(0), R(1)]))


def test_verify_unknown_id():
    with pytest.raises(ValueError):
        verify_proposition("no-such-check", ["2"], 50)
    assert "reflect-combinations" in PROPOSITIONS


def test_verify_reflect_at_two():
    rep = verify_proposition("reflect-combinations", ["2"], 200)
    assert rep["all_pass"]
    g2 = next(e for e in rep["samples"][0]["entries"] if e["name"] == "G2")
    assert mpmath.mpf(g2["closed_form_residual"]) < mpmath.mpf(10) ** -180
    assert g2["polynomial"] == "27*z^3 - 16"


def test_verify_inverse_with_lone_functions():
    rep = verify_proposition("inverse-combinations", ["3"], 120, include_lone=True, lone_degree=6, lone_height=10 ** 20)
    assert rep["all_pass"]
    lone = [e for e in rep["samples"][0]["entries"] if e["expected"] == "no relation"]
    assert len(lone) == 6 and all(e["polynomial"] == NOT_FOUND_LABEL for e in lone)


def test_verify_quartic_ratio():
    rep = verify_proposition("quartic-ratio", [], 80)
    entries = rep["samples"][0]["entries"]
    assert rep["all_pass"]
    assert sum(e["pass"] is True for e in entries) == 4
    assert all(e["pass"] is None and e["note"].startswith("skipped") for e in entries if e["pass"] is not True)


@pytest.mark.slow
def test_verify_tetrahedral_pair():
    rep = verify_proposition("tetrahedral-pair", ["3"], 650)
    assert rep["all_pass"]
    for e in rep["samples"][0]["entries"]:
        assert "(w = z^3)" in e["polynomial"]
