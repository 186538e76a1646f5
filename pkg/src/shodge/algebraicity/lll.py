"""Integral LLL reduction (all arithmetic in Python integers).

Gram-Schmidt data is kept as the integers d_i (Gram determinants) and
lambda_ij = d_j mu_ij, so no rounding ever happens.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DependentRows


@dataclass(frozen=True)
class IntegerLattice:
    basis: tuple[tuple[int, ...], ...]

    def __init__(self, basis: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in basis)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("rows must have equal length")
        object.__setattr__(self, "basis", rows)

    def __len__(self):
        return len(self.basis)


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def lll_reduce(lattice: IntegerLattice | Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> IntegerLattice:
    """Lovasz-reduced basis with parameter delta in (1/4, 1]."""
    if not isinstance(lattice, IntegerLattice):
        lattice = IntegerLattice(lattice)
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    p, q = delta.numerator, delta.denominator
    b = [list(r) for r in lattice.basis]
    n = len(b)
    if n == 0:
        return lattice
    d = [0] * (n + 1)  # d[i] = Gram determinant of the first i vectors
    lam = [[0] * n for _ in range(n)]
    d[0] = 1
    d[1] = _dot(b[0], b[0])
    if d[1] == 0:
        raise DependentRows("zero vector in basis")

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            r = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            bk, bl = b[k], b[l]
            for i in range(len(bk)):
                bk[i] -= r * bl[i]
            lam[k][l] -= r * d[l + 1]
            for i in range(l):
                lam[k][i] -= r * lam[l][i]

    def swap(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lk = lam[k][k - 1]
        nb = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
            lam[i][k - 1] = (nb * t + lk * lam[i][k]) // d[k + 1]
        d[k] = nb

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = _dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise DependentRows("basis rows are linearly dependent")
                    d[k + 1] = u
        red(k, k - 1)
        if q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lam[k][k - 1] ** 2:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return IntegerLattice(b)


def gram_schmidt_exact(basis: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """(b*, mu) in exact rationals, for checking reduction conditions."""
    bs: list[list[Fraction]] = []
    mu = [[Fraction(0)] * len(basis) for _ in basis]
    for i, row in enumerate(basis):
        v = [Fraction(x) for x in row]
        for j in range(i):
            nj = _dot(bs[j], bs[j])
            mu[i][j] = _dot(row, bs[j]) / nj
            v = [a - mu[i][j] * c for a, c in zip(v, bs[j])]
        bs.append(v)
    return bs, mu


def is_lll_reduced(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> bool:
    bs, mu = gram_schmidt_exact(basis)
    for i in range(len(basis)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, len(basis)):
        lhs = _dot(bs[k], bs[k])
        rhs = (Fraction(delta) - mu[k][k - 1] ** 2) * _dot(bs[k - 1], bs[k - 1])
        if lhs < rhs:
            return False
    return True
