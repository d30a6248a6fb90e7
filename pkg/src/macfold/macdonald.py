"""Transformed Macdonald polynomials and their Schur coefficients.

Two independent routes to the coefficients ``K~_{lambda,mu}(q, t)``:

``kostka_macdonald_oracle``
    sum ``q^inv t^maj F_iDes`` over every permutation, then decompose;
``kostka_macdonald_folding``
    for each lambda, sum ``q^inv t^maj`` of ``phi_mu(u)`` over the
    super-standard ``u`` of type lambda (shapes with second part <= 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    ZERO,
    FundExpansion,
    InvariantViolation,
    NotSymmetricError,
    Partition,
    QtPoly,
    SchurExpansion,
    as_partition,
    partitions,
)
from .dual_equivalence import MU, ClassPartition, class_fund_gf
from .enumeration import check_budget, macdonald_counts, mask_to_set, super_standard_table
from .folding import fold_parameters, phi_mu
from .schur import decompose_to_schur
from .stats import stats_fast

ORACLE = "oracle"
FOLDING = "folding"
BOTH = "both"


@dataclass
class KostkaMacdonaldTable:
    mu: Partition
    entries: SchurExpansion
    method: str

    def __getitem__(self, lam) -> QtPoly:
        return self.entries[tuple(lam)]

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "method": self.method, "entries": self.entries.to_json()}

    @classmethod
    def from_json(cls, data) -> "KostkaMacdonaldTable":
        return cls(tuple(data["mu"]), SchurExpansion.from_json(data["entries"]), data["method"])


def macdonald_fund(mu: Partition, threads: int | None = None,
                   max_n: int | None = None) -> FundExpansion:
    """``H~_mu`` in the fundamental basis, by summing over all of S_n."""
    mu = as_partition(mu)
    n = sum(mu)
    counts = macdonald_counts(mu, threads, max_n)
    coeffs: dict[frozenset, dict] = {}
    for (mask, inv, maj), c in counts.items():
        coeffs.setdefault(mask, {})[(inv, maj)] = c
    return FundExpansion(n, {mask_to_set(m): QtPoly(terms) for m, terms in coeffs.items()})


def kostka_macdonald_oracle(mu: Partition, threads: int | None = None,
                            max_n: int | None = None) -> KostkaMacdonaldTable:
    mu = as_partition(mu)
    try:
        entries = decompose_to_schur(macdonald_fund(mu, threads, max_n))
    except NotSymmetricError as exc:
        raise InvariantViolation(f"H~_{mu} failed to decompose: {exc}") from exc
    for lam, c in entries.coeffs.items():
        if not c.is_nonnegative():
            raise InvariantViolation(f"negative coefficient {c} at {lam} for mu={mu}")
    return KostkaMacdonaldTable(mu, entries, ORACLE)


def kostka_macdonald_folding(mu: Partition, max_n: int | None = None) -> KostkaMacdonaldTable:
    """Coefficients from the folded super-standard permutations."""
    mu = as_partition(mu)
    fold_parameters(mu)
    n = sum(mu)
    check_budget(n, max_n)
    entries: dict[Partition, QtPoly] = {}
    for lam, us in super_standard_table(n, max_n).items():
        terms: dict[tuple[int, int], int] = {}
        for u in us:
            k = stats_fast(mu, phi_mu(mu, u))
            terms[k] = terms.get(k, 0) + 1
        entries[lam] = QtPoly(terms)
    return KostkaMacdonaldTable(mu, SchurExpansion(n, entries), FOLDING)


@dataclass
class Comparison:
    mu: Partition
    equal: bool
    diff: list[tuple[Partition, QtPoly, QtPoly]] = field(default_factory=list)
    oracle: KostkaMacdonaldTable | None = None
    folding: KostkaMacdonaldTable | None = None


def compare_methods(mu: Partition, threads: int | None = None,
                    max_n: int | None = None) -> Comparison:
    """Entry-wise comparison; the oracle is the reference in the diff."""
    mu = as_partition(mu)
    oracle = kostka_macdonald_oracle(mu, threads, max_n)
    folding = kostka_macdonald_folding(mu, max_n)
    lams = sorted(set(oracle.entries.coeffs) | set(folding.entries.coeffs), reverse=True)
    diff = [(lam, oracle[lam], folding[lam]) for lam in lams if oracle[lam] != folding[lam]]
    return Comparison(mu, not diff, diff, oracle, folding)


def kostka_macdonald(mu: Partition, method: str = ORACLE, threads: int | None = None,
                     max_n: int | None = None) -> KostkaMacdonaldTable:
    if method == ORACLE:
        return kostka_macdonald_oracle(mu, threads, max_n)
    if method == FOLDING:
        return kostka_macdonald_folding(mu, max_n)
    if method == BOTH:
        cmp = compare_methods(mu, threads, max_n)
        if not cmp.equal:
            raise InvariantViolation(f"oracle and folding disagree for {mu}: {cmp.diff}")
        return KostkaMacdonaldTable(cmp.oracle.mu, cmp.oracle.entries, BOTH)
    raise ValueError(f"unknown method {method!r}")


# ----------------------------------------------------------------------------
# class positivity scan

@dataclass
class ScanFailure:
    mu: Partition
    representative: tuple
    size: int
    reason: str


@dataclass
class ScanReport:
    n: int
    shapes: int = 0
    classes: int = 0
    failures: list[ScanFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def conjecture_scan(n: int, shapes=None, max_n: int | None = None) -> ScanReport:
    """Check every generalized class of every shape of size ``n`` for symmetry
    and Schur positivity of its generating function.

    Each class is decomposed unweighted, and weighted by ``q^inv t^maj``; a
    class whose statistics are not constant is reported too.
    """
    check_budget(n, max_n)
    report = ScanReport(n)
    for mu in shapes if shapes is not None else partitions(n):
        mu = as_partition(mu)
        report.shapes += 1
        for c in ClassPartition(n, MU, mu).classes():
            report.classes += 1
            weights = {stats_fast(mu, w) for w in c.members}
            if len(weights) != 1:
                report.failures.append(
                    ScanFailure(mu, c.representative, len(c), f"statistics vary: {sorted(weights)}")
                )
                continue
            for weighted in (False, True):
                gf = class_fund_gf(c, mu if weighted else None)
                try:
                    s = decompose_to_schur(gf)
                except NotSymmetricError:
                    report.failures.append(
                        ScanFailure(mu, c.representative, len(c), "not symmetric")
                    )
                    break
                if not s.is_positive():
                    report.failures.append(
                        ScanFailure(mu, c.representative, len(c), f"not Schur positive: {s}")
                    )
                    break
    return report


def total_mass(table: KostkaMacdonaldTable) -> int:
    """``sum_lambda K~(1,1) f_lambda``; equals n! for every shape."""
    from .schur import hook_length_count

    return sum(c.eval_at_one() * hook_length_count(lam) for lam, c in table.entries.coeffs.items())


__all__ = [
    "ZERO",
    "KostkaMacdonaldTable",
    "macdonald_fund",
    "kostka_macdonald_oracle",
    "kostka_macdonald_folding",
    "kostka_macdonald",
    "compare_methods",
    "Comparison",
    "conjecture_scan",
    "ScanReport",
    "ScanFailure",
    "total_mass",
]
