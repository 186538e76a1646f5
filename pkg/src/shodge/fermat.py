"""Exponent combinatorics of the perturbed Fermat variety x1^m1+...+xn^mn+P(y)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterator, Sequence

from .errors import DimensionMismatch, InvalidProfile


@dataclass(frozen=True)
class DegreeProfile:
    """Fermat degrees (m1..mn) plus the degree m of the perturbation P(y)."""

    fermat_degrees: tuple[int, ...]
    pert_degree: int

    def __post_init__(self):
        object.__setattr__(self, "fermat_degrees", tuple(int(d) for d in self.fermat_degrees))
        if not self.fermat_degrees:
            raise InvalidProfile("at least one Fermat degree is required")
        if len(self.fermat_degrees) % 2:
            raise InvalidProfile("the number of Fermat variables must be even")
        if any(d < 2 for d in self.fermat_degrees) or self.pert_degree < 2:
            raise InvalidProfile("all degrees must be at least 2")

    @property
    def n(self) -> int:
        return len(self.fermat_degrees)

    @property
    def degrees(self) -> tuple[int, ...]:
        """All n+1 degrees, perturbation last."""
        return self.fermat_degrees + (self.pert_degree,)

    def fermat_index_set(self) -> Iterator[tuple[int, ...]]:
        """J = prod {0..m_j-2}, lexicographic."""
        return itertools.product(*(range(d - 1) for d in self.fermat_degrees))

    def index_set(self) -> Iterator[tuple[int, ...]]:
        """I = J x {0..m-2}, lexicographic."""
        return itertools.product(*(range(d - 1) for d in self.degrees))

    def fermat_index_count(self) -> int:
        out = 1
        for d in self.fermat_degrees:
            out *= d - 1
        return out

    def __str__(self):
        return f"({','.join(map(str, self.fermat_degrees))};{self.pert_degree})"


@dataclass(frozen=True)
class ExponentVector:
    beta: tuple[int, ...]
    profile: DegreeProfile

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        if len(self.beta) != self.profile.n + 1:
            raise DimensionMismatch(
                f"beta has {len(self.beta)} entries, profile needs {self.profile.n + 1}"
            )
        if any(b < 0 for b in self.beta):
            raise ValueError("exponents must be non-negative")

    @property
    def prime(self) -> tuple[int, ...]:
        return self.beta[:-1]

    @property
    def last(self) -> int:
        return self.beta[-1]

    def in_index_set(self) -> bool:
        return all(b <= d - 2 for b, d in zip(self.beta, self.profile.degrees))

    def shifted(self, k: int) -> "ExponentVector":
        """beta + (0', k)."""
        return ExponentVector(self.beta[:-1] + (self.beta[-1] + k,), self.profile)

    def weight(self, range_: str = "full") -> Fraction:
        return weight(self.beta, self.profile, range_)


def weight(beta: Sequence[int], profile: DegreeProfile, range_: str = "full") -> Fraction:
    """A_beta = sum (beta_j+1)/m_j over all n+1 coordinates or the Fermat ones only."""
    if range_ == "full":
        if len(beta) != profile.n + 1:
            raise DimensionMismatch("full weight needs n+1 exponents")
        degs = profile.degrees
    elif range_ in ("fermatOnly", "fermat"):
        if len(beta) not in (profile.n, profile.n + 1):
            raise DimensionMismatch("Fermat weight needs n or n+1 exponents")
        degs = profile.fermat_degrees
        beta = beta[: profile.n]
    else:
        raise ValueError(f"unknown range {range_!r}")
    return sum((Fraction(b + 1, d) for b, d in zip(beta, degs)), Fraction(0))


def hodge_numbers(profile: DegreeProfile) -> list[tuple[int, int]]:
    """(k, #{beta in I : k-1 < A_beta < k}) for k = 1..n+1."""
    n = profile.n
    counts = [0] * (n + 2)
    for beta in profile.index_set():
        a = weight(beta, profile)
        if a.denominator == 1:
            continue
        k = floor(a) + 1
        if 1 <= k <= n + 1:
            counts[k] += 1
    return [(k, counts[k]) for k in range(1, n + 2)]


def hodge_table(profile: DegreeProfile) -> dict[str, int]:
    """Hodge numbers keyed 'h{p}{q}' with p = k-1, q = n-k+1."""
    n = profile.n
    return {f"h{k - 1}{n - k + 1}": c for k, c in hodge_numbers(profile)}


def integral_weight_set(profile: DegreeProfile) -> list[tuple[int, ...]]:
    """Members of I whose weight is an integer (counted in no Hodge number)."""
    return [b for b in profile.index_set() if weight(b, profile).denominator == 1]


def cubic_hodge_formula(m_n: int) -> tuple[int, int]:
    """Closed form for (h^{2,0}, h^{1,1}) of the profile (2,...,2,m_n;3)."""
    if m_n < 2:
        raise ValueError("m_n must be at least 2")
    off = (m_n - 1) // 6
    diag = m_n - 2 + ceil(Fraction(5 * m_n, 6)) - m_n // 6
    return off, diag
