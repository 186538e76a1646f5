"""The coefficient space of strong generic Hodge cycles and its fast-path solvers.

A candidate cycle is a rational vector n_{alpha,k} indexed by alpha in J and
k in {0..m-2}.  It is a strong generic Hodge cycle when, for every beta' in J
with A_{beta'} < n/2 - 1/m,

    sum_alpha n_{alpha,k} prod_j zeta_{m_j}^{alpha_j (beta_j+1)} = 0.

The conditions do not depend on k, so the space splits into m-1 identical
slices; everything below solves one slice and replicates it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .errors import NotCoprime, NotPrime, TooLarge
from .exact.cyclotomic import CyclotomicNumber, cyclotomic_polynomial, divisors, euler_totient
from .exact.linalg import rational_nullspace, rref
from .exact.polynomial import UniPoly
from .fermat import DegreeProfile, weight

ORACLE_MAX_UNKNOWNS = 2000

CYCLOTOMIC_DIVISIBILITY = "CyclotomicDivisibility"
TENSOR_SPLIT = "TensorSplit"
DISTINCT_PRIMES = "DistinctPrimes"
EXACT_NULLSPACE = "ExactNullspace"


@dataclass(frozen=True)
class JointCycleVector:
    """Sparse rational coefficients keyed by (alpha, k)."""

    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {key: Fraction(v) for key, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", clean)

    def __add__(self, other: "JointCycleVector") -> "JointCycleVector":
        out = dict(self.coefficients)
        for key, v in other.coefficients.items():
            out[key] = out.get(key, 0) + v
        return JointCycleVector(out)

    def scale(self, c) -> "JointCycleVector":
        return JointCycleVector({key: v * c for key, v in self.coefficients.items()})

    def slice(self, k: int) -> dict:
        return {a: v for (a, kk), v in self.coefficients.items() if kk == k}

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other):
        return isinstance(other, JointCycleVector) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def dense(self, profile: DegreeProfile) -> list[Fraction]:
        """Coefficient list in the order (alpha lexicographic) x k."""
        return [
            self.coefficients.get((a, k), Fraction(0))
            for a in profile.fermat_index_set()
            for k in range(profile.pert_degree - 1)
        ]


@dataclass
class HodgeSpaceResult:
    dimension: int
    method: str
    slice_basis: list[tuple[Fraction, ...]]
    profile: DegreeProfile | None = None
    slices: int = 1

    @property
    def generators(self) -> list:
        """JointCycleVectors when a profile is attached, else the plain slice vectors."""
        if self.profile is None:
            return list(self.slice_basis)
        alphas = list(self.profile.fermat_index_set())
        out = []
        for k in range(self.slices):
            for vec in self.slice_basis:
                out.append(JointCycleVector({(a, k): v for a, v in zip(alphas, vec)}))
        return out


def _threshold_set(m_n: int, bound: Fraction) -> list[int]:
    return [e for e in divisors(m_n) if e < m_n * bound]


def boundary_set(m_n: int, m: int) -> list[int]:
    """S = {e | m_n : 1 <= e < m_n (1/2 - 1/m)}."""
    return _threshold_set(m_n, Fraction(1, 2) - Fraction(1, m))


def _divisibility_space(m_n: int, s_set: Iterable[int], method: str) -> HodgeSpaceResult:
    """Vectors of length m_n-1 whose polynomial is divisible by prod Phi_{m_n/e}."""
    base = UniPoly([1])
    for e in s_set:
        base = base * cyclotomic_polynomial(m_n // e)
    dim = max(0, m_n - 1 - base.degree)
    gens = []
    for i in range(dim):
        p = UniPoly.monomial(i) * base
        vec = [Fraction(0)] * (m_n - 1)
        for j, c in enumerate(p.coeffs):
            vec[j] = Fraction(c)
        gens.append(tuple(vec))
    return HodgeSpaceResult(dim, method, gens)


def dim_axis_space(m_n: int, m: int) -> HodgeSpaceResult:
    """One slice of the space when all Fermat degrees but the last equal 2."""
    if m_n < 2 or m < 2:
        raise ValueError("degrees must be at least 2")
    s = boundary_set(m_n, m)
    res = _divisibility_space(m_n, s, CYCLOTOMIC_DIVISIBILITY)
    assert res.dimension == m_n - 1 - sum(euler_totient(m_n // e) for e in s)
    return res


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def tensor_split_dim(m_prev: int, m_n: int, m: int) -> HodgeSpaceResult:
    """The factor space B when the second-to-last degree is a prime coprime to m_n."""
    if not _is_prime(m_prev):
        raise NotPrime(f"{m_prev} is not prime")
    if gcd(m_prev, m_n) != 1:
        raise NotCoprime(f"gcd({m_prev}, {m_n}) != 1")
    s = _threshold_set(m_n, 1 - Fraction(1, m) - Fraction(1, m_prev))
    return _divisibility_space(m_n, s, TENSOR_SPLIT)


def constraint_set(profile: DegreeProfile) -> list[tuple[int, ...]]:
    """beta' in J with A_{beta'} < n/2 - 1/m."""
    bound = Fraction(profile.n, 2) - Fraction(1, profile.pert_degree)
    return [b for b in profile.fermat_index_set() if weight(b, profile, "fermatOnly") < bound]


def _slice_matrix(profile: DegreeProfile) -> list[list[Fraction]]:
    degs = profile.fermat_degrees
    big_n = lcm(*degs)
    alphas = list(profile.fermat_index_set())
    cache: dict[int, tuple] = {}

    def zeta_coeffs(e: int):
        e %= big_n
        if e not in cache:
            cache[e] = CyclotomicNumber.zeta(big_n, e).coeffs
        return cache[e]

    rows = []
    for bp in constraint_set(profile):
        cols = []
        for a in alphas:
            e = sum(aj * (bj + 1) * (big_n // mj) for aj, bj, mj in zip(a, bp, degs))
            cols.append(zeta_coeffs(e))
        for r in range(euler_totient(big_n)):
            row = [c[r] for c in cols]
            if any(row):
                rows.append(row)
    return rows


def constraint_matrix(profile: DegreeProfile) -> list[list[Fraction]]:
    """Full rational constraint matrix over columns (alpha, k), alpha-major order.

    Exposed to check that the k-slices decouple: the matrix is block diagonal
    with one copy of the slice matrix per k after permuting columns.
    """
    slice_rows = _slice_matrix(profile)
    nk = profile.pert_degree - 1
    na = profile.fermat_index_count()
    rows = []
    for k in range(nk):
        for r in slice_rows:
            full = [Fraction(0)] * (na * nk)
            for ai, v in enumerate(r):
                full[ai * nk + k] = v
            rows.append(full)
    return rows


def nullspace_oracle(profile: DegreeProfile) -> HodgeSpaceResult:
    """Solve the defining linear system exactly over Q (one slice, replicated)."""
    na = profile.fermat_index_count()
    if na * (profile.pert_degree - 1) > ORACLE_MAX_UNKNOWNS:
        raise TooLarge(f"{na * (profile.pert_degree - 1)} unknowns exceeds {ORACLE_MAX_UNKNOWNS}")
    rows = _slice_matrix(profile)
    basis = rational_nullspace(rows, na)
    if basis:
        basis, _ = rref(basis)
    gens = [tuple(v) for v in basis]
    return _attach(HodgeSpaceResult(len(gens), EXACT_NULLSPACE, gens), profile)


def _attach(res: HodgeSpaceResult, profile: DegreeProfile) -> HodgeSpaceResult:
    slices = profile.pert_degree - 1
    return HodgeSpaceResult(len(res.slice_basis) * slices, res.method, res.slice_basis, profile, slices)


def dim_strong_hodge(profile: DegreeProfile) -> HodgeSpaceResult:
    """Dimension and generators, using a fast path when the profile allows one."""
    degs = profile.fermat_degrees
    n, m = profile.n, profile.pert_degree
    if all(d == 2 for d in degs[:-1]):
        return _attach(dim_axis_space(degs[-1], m), profile)
    if (
        n >= 2
        and all(d == 2 for d in degs[:-2])
        and _is_prime(degs[-2])
        and gcd(degs[-2], degs[-1]) == 1
    ):
        b = tensor_split_dim(degs[-2], degs[-1], m)
        # alpha_{n-1} = i selects an independent copy of B
        width = degs[-1] - 1
        gens = []
        for i in range(degs[-2] - 1):
            for g in b.slice_basis:
                vec = [Fraction(0)] * ((degs[-2] - 1) * width)
                vec[i * width:(i + 1) * width] = g
                gens.append(tuple(vec))
        return _attach(HodgeSpaceResult(len(gens), TENSOR_SPLIT, gens), profile)
    distinct_primes = len(set(degs)) == n and all(_is_prime(d) for d in degs)
    zero_constrained = weight((0,) * n, profile, "fermatOnly") < Fraction(n, 2) - Fraction(1, m)
    if distinct_primes and zero_constrained:
        # the monomials prod zeta^{alpha_j} are a Q-basis, so beta'=0 alone forces n=0
        return _attach(HodgeSpaceResult(0, DISTINCT_PRIMES, []), profile)
    return nullspace_oracle(profile)
