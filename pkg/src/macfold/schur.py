"""Schur functions through the fundamental quasisymmetric basis.

A symmetric function is carried as a :class:`FundExpansion`.  Decomposing
into Schur functions goes through monomial coefficients: the coefficient of
``m_mu`` in ``F_D`` is 1 exactly when ``D`` lies inside the partial sums of
``mu``, and monomial to Schur is the unitriangular Kostka system.  Every
decomposition is checked by rebuilding the input from the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .core import (
    ZERO,
    FundExpansion,
    NotSymmetricError,
    Partition,
    Perm,
    QtPoly,
    SchurExpansion,
    as_partition,
    conjugate,
    dominance_leq,
    partitions,
)
from .stats import inverse_descents


@dataclass(frozen=True)
class StandardTableau:
    """Rows listed bottom (longest) first; rows increase rightward, columns upward."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def reading_word(self) -> Perm:
        return tuple(x for row in reversed(self.rows) for x in row)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in reversed(self.rows))


def enumerate_syt(lam: Partition) -> list[StandardTableau]:
    """All standard Young tableaux of shape ``lam``, sorted by reading word."""
    lam = as_partition(lam)
    out = []
    for rows in _syt_rows(lam):
        out.append(StandardTableau(lam, rows))
    out.sort(key=lambda T: T.reading_word)
    return out


@lru_cache(maxsize=None)
def _syt_rows(lam: Partition) -> tuple:
    n = sum(lam)
    if n == 0:
        return ((),)
    results = []
    # the largest entry sits in a corner
    for r in range(len(lam)):
        if r + 1 < len(lam) and lam[r + 1] == lam[r]:
            continue
        smaller = list(lam)
        smaller[r] -= 1
        smaller = tuple(p for p in smaller if p)
        for rows in _syt_rows(smaller):
            rows = [list(x) for x in rows] + [[]] * (len(lam) - len(rows))
            rows[r] = rows[r] + [n]
            results.append(tuple(tuple(x) for x in rows))
    return tuple(results)


def hook_length_count(lam: Partition) -> int:
    """f_lambda from the hook length formula."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    prod = 1
    for r, row in enumerate(lam):
        for c in range(row):
            prod *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(lam)) // prod


@lru_cache(maxsize=None)
def schur_fund_expansion(lam: Partition) -> FundExpansion:
    lam = as_partition(lam)
    counts: dict[frozenset, int] = {}
    for T in enumerate_syt(lam):
        d = inverse_descents(T.reading_word)
        counts[d] = counts.get(d, 0) + 1
    return FundExpansion(sum(lam), {d: QtPoly.constant(c) for d, c in counts.items()})


def partial_sums(mu: Partition) -> frozenset:
    out, s = set(), 0
    for p in mu[:-1]:
        s += p
        out.add(s)
    return frozenset(out)


def fund_monomial_coeff(D, mu: Partition) -> int:
    """Coefficient of the monomial ``x^mu`` in ``F_D``."""
    return int(frozenset(D) <= partial_sums(mu))


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    # strip the largest letter: it fills a horizontal strip of size mu[-1]
    total = 0
    for nu in _horizontal_strips(lam, mu[-1]):
        total += kostka(nu, mu[:-1])
    return total


def _horizontal_strips(lam: Partition, k: int):
    """Partitions ``nu`` inside ``lam`` with ``lam/nu`` a horizontal strip of size k."""
    rows = len(lam)

    def rec(r, left, acc):
        if r == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lower = lam[r + 1] if r + 1 < rows else 0
        for take in range(0, min(left, lam[r] - lower) + 1):
            yield from rec(r + 1, left - take, acc + [lam[r] - take])

    yield from rec(0, k, [])


def dominance_order(n: int) -> list[Partition]:
    """A linear extension of dominance, largest first (reverse lexicographic)."""
    return list(partitions(n))


def decompose_to_schur(f: FundExpansion) -> SchurExpansion:
    """Schur expansion of ``f``, or :class:`NotSymmetricError` if ``f`` has none."""
    n = f.n
    order = dominance_order(n)
    mono = {
        mu: sum((c for D, c in f.coeffs.items() if D <= partial_sums(mu)), ZERO)
        for mu in order
    }
    coeffs: dict[Partition, QtPoly] = {}
    for mu in order:
        c = mono[mu]
        for lam, a in coeffs.items():
            k = kostka(lam, mu)
            if k:
                c = c - a * k
        if c:
            coeffs[mu] = c
    result = SchurExpansion(n, coeffs)
    if schur_to_fund(result) != f:
        raise NotSymmetricError(f"not a symmetric function: {f}")
    return result


def schur_to_fund(s: SchurExpansion) -> FundExpansion:
    out = FundExpansion(s.n)
    for lam, c in s.coeffs.items():
        out = out + schur_fund_expansion(lam).scale(c)
    return out


__all__ = [
    "StandardTableau",
    "enumerate_syt",
    "hook_length_count",
    "schur_fund_expansion",
    "partial_sums",
    "fund_monomial_coeff",
    "kostka",
    "dominance_leq",
    "dominance_order",
    "decompose_to_schur",
    "schur_to_fund",
]
