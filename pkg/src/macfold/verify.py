"""Verification suites shared by the ``verify`` command and the test suite.

Every suite returns a list of :class:`Check`; a check carries how many
cases it looked at and, on failure, a short description of the first few
counterexamples.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from .core import (
    Filling,
    QtPoly,
    SchurExpansion,
    as_partition,
    format_word,
    partitions,
)
from .dual_equivalence import (
    MU,
    STANDARD,
    TWISTED,
    ClassPartition,
    D_mu_word,
    class_fund_gf,
    d,
    d_twisted,
    super_standard_representative,
    uses_twisted,
)
from .enumeration import super_standard_table
from .folding import (
    beta,
    beta_indices,
    fold_schedule,
    gamma,
    gamma_blocks,
    gamma_inverse,
    phi_ab,
    phi_k,
    phi_mu,
    sigma,
)
from .macdonald import compare_methods, conjecture_scan, kostka_macdonald_oracle
from .schur import decompose_to_schur, enumerate_syt, hook_length_count
from .stats import (
    descents,
    destandardize,
    inverse_descents,
    inversions,
    major_index,
    maj_mu,
    mu_descent_cells,
    mu_inversion_pairs,
    inv_mu,
    stats_fast,
    super_standard_type,
)

MAX_SHOWN = 3


@dataclass
class Check:
    name: str
    passed: bool
    count: int
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.count} cases ({self.seconds:.2f}s)"
        if self.detail:
            text += f" {self.detail}"
        return text


class _Tally:
    """Counts cases and keeps the first few failures."""

    def __init__(self):
        self.count = 0
        self.failures: list[str] = []
        self.nfail = 0

    def check(self, ok: bool, what: Callable[[], str] | str = ""):
        self.count += 1
        if not ok:
            self.nfail += 1
            if len(self.failures) < MAX_SHOWN:
                self.failures.append(what() if callable(what) else what)

    def result(self, name: str, start: float) -> Check:
        detail = ""
        if self.nfail:
            detail = f"{self.nfail} failures, e.g. " + "; ".join(self.failures)
        return Check(name, not self.nfail, self.count, detail, time.perf_counter() - start)


def _perms(n: int):
    return permutations(range(1, n + 1))


def _w(text: str) -> tuple[int, ...]:
    return tuple(int(c) for c in text)


def _shapes_folding(n: int):
    return [mu for mu in partitions(n) if len(mu) < 2 or mu[1] <= 2]


# ----------------------------------------------------------------------------
# worked examples

def worked_examples() -> list[Check]:
    start = time.perf_counter()
    t = _Tally()
    mu = (4, 2, 2, 1)
    w = _w("583691724")
    f = Filling(mu, w)
    t.check(maj_mu(f) == 7, "maj 583691724")
    t.check(inv_mu(f) == 2, "inv 583691724")
    t.check({f.entry(c) for c in mu_descent_cells(f)} == {8, 6, 9}, "descent cells")
    t.check(set(mu_inversion_pairs(f)) == {(8, 3), (9, 1), (7, 2), (7, 4)}, "inversion pairs")
    t.check(inverse_descents(w) == {2, 4, 7}, "iDes 583691724")
    t.check(destandardize(w).letters == _w("342341312"), "dst 583691724")
    t.check(super_standard_type(_w("719852364")) == (4, 2, 2, 1), "super-standard 719852364")
    t.check(super_standard_type(_w("213")) is None, "213 not super-standard")

    # folding maps
    t.check(gamma_blocks(5, _w("83691724")) == [(8, 3), (6,), (9, 1), (7, 2, 4)], "Gamma_5")
    t.check(gamma(5, _w("83691724")) == _w("38619247"), "gamma_5")
    t.check(gamma_inverse(5, _w("38619247")) == _w("83691724"), "gamma_5 inverse")
    t.check(phi_k(4, w) == _w("583619247"), "phi_4")
    t.check(beta_indices(5, _w("83691724")) == [1, 3, 5], "B_5")
    t.check(beta(5, _w("83691724")) == _w("38967124"), "beta_5")
    t.check(beta_indices(4, _w("1536")) == [1, 3], "B_4(1536)")
    t.check(beta(6, _w("73")) == _w("37"), "beta_6(73)")
    t.check(sigma(5, 2, _w("841567392")) == _w("841563792"), "sigma_(5,2)")
    t.check(sigma(4, 2, _w("841563792")) == _w("841536792"), "sigma_(4,2)")

    # involutions
    t.check(d(7, w) == _w("573691824"), "d_7")
    t.check(D_mu_word(mu, 7, w) == _w("573691824"), "D_7 standard pair")
    t.check(not uses_twisted(7, f), "D_7 standard predicate")
    w2 = _w("593687124")
    t.check(D_mu_word(mu, 7, w2) == _w("593768124"), "D_7 twisted pair")
    t.check(uses_twisted(7, Filling(mu, w2)), "D_7 twisted predicate")
    chain = ["2314", "3124", "2143", "1342", "1423"]
    for a, b, i in zip(chain, chain[1:], (2, 3, 2, 3)):
        t.check(d_twisted(i, _w(a)) == _w(b), f"twisted {a} -> {b}")
    t.check(d(2, _w("2314")) == _w("1324") and d(3, _w("1324")) == _w("1423"), "standard chain")

    # class memberships
    std = ClassPartition(4, STANDARD, perms=[p for p in _perms(4) if major_index(p) == 2])
    got = {frozenset(c.members) for c in std.classes()}
    want = {frozenset(map(_w, ("2314", "1324", "1423"))), frozenset(map(_w, ("2413", "3412")))}
    t.check(got == want, lambda: f"standard maj=2 classes {got}")
    tw = ClassPartition(4, TWISTED, perms=[p for p in _perms(4) if inversions(p) == 2])
    got = {frozenset(c.members) for c in tw.classes()}
    t.check(got == {frozenset(map(_w, chain))}, lambda: f"twisted inv=2 classes {got}")
    reps = {super_standard_representative(c) for c in std.classes()}
    t.check(reps == {(_w("1423"), (3, 1)), (_w("3412"), (2, 2))}, "super-standard representatives")
    s = decompose_to_schur(class_fund_gf(tw.classes()[0]))
    t.check(s == SchurExpansion(4, {(3, 1): QtPoly.constant(1), (2, 2): QtPoly.constant(1)}),
            "twisted class is s31 + s22")
    t.check([T.reading_word for T in enumerate_syt((3, 1))]
            == [_w("2134"), _w("3124"), _w("4123")], "SYT of (3,1)")

    # fold weights along the hooks and the two-column tower
    u = _w("841567392")
    hooks = [(1,) * 9, (2,) + (1,) * 7, (3,) + (1,) * 6, (4,) + (1,) * 5]
    weights = [stats_fast(h, phi_mu(h, u)) for h in hooks]
    t.check(weights == [(0, 17), (1, 9), (1, 9), (4, 3)], lambda: f"hook weights {weights}")
    t.check(phi_mu((4,) + (1,) * 5, u) == u, "hook fold fixes 841567392")
    trace = phi_mu(mu, u, trace=True)
    words = [s.word for s in trace[-3:]]
    t.check(words == [u, _w("841536729"), _w("845163279")], lambda: f"row trace {words}")
    ws = [stats_fast(s.shape, s.word) for s in trace[-3:]]
    t.check(ws == [(4, 3), (3, 3), (2, 5)], lambda: f"row weights {ws}")
    t.check(all(inverse_descents(s.word) == {2, 3, 7} for s in trace), "constant iDes")
    t.check(phi_ab(5, 0, u) == _w("841536729"), "phi_(5,0)")
    t.check(phi_ab(3, 1, _w("841536729")) == _w("845163279"), "phi_(3,1)")
    return [t.result("worked examples", start)]


# ----------------------------------------------------------------------------
# involutions

def involution_checks(max_n: int = 7) -> list[Check]:
    out = []
    start = time.perf_counter()
    t_inv, t_des = _Tally(), _Tally()
    start_t = time.perf_counter()
    t_tw, t_twinv = _Tally(), _Tally()
    for n in range(3, max_n + 1):
        for w in _perms(n):
            des = descents(w)
            inv = inversions(w)
            for i in range(2, n):
                v = d(i, w)
                t_inv.check(d(i, v) == w, lambda: f"d_{i} {format_word(w)}")
                t_des.check(descents(v) == des, lambda: f"d_{i} {format_word(w)}")
                v = d_twisted(i, w)
                t_tw.check(d_twisted(i, v) == w, lambda: f"dt_{i} {format_word(w)}")
                t_twinv.check(inversions(v) == inv, lambda: f"dt_{i} {format_word(w)}")
    out.append(t_inv.result("d_i is an involution", start))
    out.append(t_des.result("d_i preserves descent sets", start))
    out.append(t_tw.result("twisted d_i is an involution", start_t))
    out.append(t_twinv.result("twisted d_i preserves inv", start_t))

    start = time.perf_counter()
    t_inv, t_stat = _Tally(), _Tally()
    for n in range(3, max_n + 1):
        for mu in partitions(n):
            for w in _perms(n):
                st = stats_fast(mu, w)
                for i in range(2, n):
                    v = D_mu_word(mu, i, w)
                    t_inv.check(D_mu_word(mu, i, v) == w, lambda: f"{mu} D_{i} {format_word(w)}")
                    t_stat.check(stats_fast(mu, v) == st, lambda: f"{mu} D_{i} {format_word(w)}")
    out.append(t_inv.result("D_i^mu is an involution", start))
    out.append(t_stat.result("D_i^mu preserves (inv_mu, maj_mu)", start))
    return out


# ----------------------------------------------------------------------------
# standard classes and super-standard permutations

def standard_class_checks(max_n: int = 8, max_n_count: int = 9) -> list[Check]:
    start = time.perf_counter()
    t = _Tally()
    for n in range(1, max_n + 1):
        for c in ClassPartition(n, STANDARD).classes():
            try:
                w, lam = super_standard_representative(c)
            except Exception as exc:  # noqa: BLE001 - reported as a failed case
                t.check(False, str(exc))
                continue
            s = decompose_to_schur(class_fund_gf(c))
            t.check(s == SchurExpansion(n, {lam: QtPoly.constant(1)}),
                    lambda: f"class of {format_word(w)} is {s}, expected s{lam}")
    out = [t.result("standard class is one Schur function", start)]
    start = time.perf_counter()
    t = _Tally()
    for n in range(1, max_n_count + 1):
        table = super_standard_table(n, max_n=max_n_count)
        for lam in partitions(n):
            got = len(table.get(lam, []))
            t.check(got == hook_length_count(lam), lambda: f"|SS{lam}| = {got}")
    out.append(t.result("super-standard count is f_lambda", start))
    return out


# ----------------------------------------------------------------------------
# bijections

def bijection_checks(max_n: int = 7, max_n_foata: int = 8, samples: int = 10_000,
                     seed: int = 0) -> list[Check]:
    out = []
    rng = random.Random(seed)

    start = time.perf_counter()
    t = _Tally()
    for _ in range(samples):
        n = rng.randint(1, 12)
        letters = rng.sample(range(1, 2 * n + 2), n + 1)
        x, word = letters[0], tuple(letters[1:])
        t.check(gamma_inverse(x, gamma(x, word)) == word, lambda: f"gamma_{x} {word}")
    out.append(t.result("gamma round trips", start))

    def injective(name, maps, descents=True):
        start = time.perf_counter()
        t_inj, t_des = _Tally(), _Tally()
        for n in range(2, max_n + 1):
            for label, fn in maps(n):
                seen = {}
                for w in _perms(n):
                    v = fn(w)
                    other = seen.setdefault(v, w)
                    t_inj.check(other == w, lambda: f"{label} {format_word(w)}")
                    t_des.check(inverse_descents(v) == inverse_descents(w),
                                lambda: f"{label} {format_word(w)}")
        out.append(t_inj.result(f"{name} injective", start))
        if descents:
            out.append(t_des.result(f"{name} preserves inverse descents", start))

    injective("phi_k", lambda n: [(f"phi_{k}", lambda w, k=k: phi_k(k, w)) for k in range(1, n)])
    injective("beta_x", lambda n: [
        (f"beta_{x}+1/2", lambda w, x=x: _beta_perm(x, w)) for x in range(0, n + 1)
    ], descents=False)
    injective("sigma", lambda n: [
        (f"sigma_({k},{m})", lambda w, k=k, m=m: sigma(k, m, w))
        for k in range(1, n) for m in range(1, n - k + 1)
    ])
    injective("phi_(a,b)", lambda n: [
        (f"phi_({a},{b})", lambda w, a=a, b=b: phi_ab(a, b, w))
        for b in range(0, n) for a in range(1, n) if a + 2 * b + 2 <= n
    ])
    injective("phi_mu", lambda n: [
        (f"phi_{mu}", lambda w, mu=mu: phi_mu(mu, w)) for mu in _shapes_folding(n)
    ])

    start = time.perf_counter()
    t = _Tally()
    for n in range(1, max_n_foata + 1):
        perms = list(_perms(n))
        # folding the column into a row carries t^maj to q^inv
        row = Counter(stats_fast((n,), phi_mu((n,), w))[0] for w in perms)
        col = Counter(stats_fast((1,) * n, w)[1] for w in perms)
        t.check(row == col == Counter(major_index(w) for w in perms), lambda: f"n={n}")
    out.append(t.result("Foata pipeline equidistributes maj and inv", start))
    return out


def _beta_perm(x: int, w: tuple) -> tuple:
    """``beta`` keyed by ``x + 1/2``, so every relative position of the key occurs."""
    shifted = tuple(2 * y for y in w)
    return tuple(y // 2 for y in beta(2 * x + 1, shifted))


# ----------------------------------------------------------------------------
# class merging along the fold tower

def fold_transitions(n: int) -> list[tuple[tuple, str, Callable, tuple]]:
    """Distinct ``(source, label, map, target)`` steps of every fold pipeline of size n."""
    seen = {}
    for mu in _shapes_folding(n):
        prev = (1,) * n
        for label, params, shape in fold_schedule(mu):
            if len(params) == 1:
                fn = lambda w, k=params[0]: phi_k(k, w)
            else:
                fn = lambda w, a=params[0], b=params[1]: phi_ab(a, b, w)
            seen.setdefault((prev, label), (prev, label, fn, shape))
            prev = shape
    return list(seen.values())


def class_merging_checks(max_n: int = 7) -> list[Check]:
    out = []
    for kind in ("hook", "row"):
        start = time.perf_counter()
        t = _Tally()
        for n in range(3, max_n + 1):
            parts = {}
            for src, label, fn, dst in fold_transitions(n):
                if (kind == "row") != ("(" in label):
                    continue
                if dst not in parts:
                    parts[dst] = ClassPartition(n, MU, dst)
                target = parts[dst]
                for w in _perms(n):
                    for i in range(2, n):
                        v = D_mu_word(src, i, w)
                        if v <= w:
                            continue
                        fw, fv = fn(w), fn(v)
                        t.check(target.same_class(fw, fv),
                                lambda: f"{src}->{dst} {label} i={i} "
                                        f"{format_word(w)},{format_word(v)}")
        name = "hook folds merge classes" if kind == "hook" else "row folds merge classes"
        out.append(t.result(name, start))
    return out


# ----------------------------------------------------------------------------
# Schur expansion from folding versus the oracle

def folding_formula_checks(max_n: int = 8, extra=((4, 2, 2, 1),), threads: int | None = None,
                           budget: int | None = None) -> list[Check]:
    start = time.perf_counter()
    t = _Tally()
    shapes = [mu for n in range(1, max_n + 1) for mu in _shapes_folding(n)]
    shapes += [as_partition(mu) for mu in extra if sum(mu) > max_n]
    for mu in shapes:
        cmp = compare_methods(mu, threads, budget or max(max_n, sum(mu)))
        t.check(cmp.equal, lambda: f"{mu}: " + ", ".join(
            f"s{lam} oracle {a} folding {b}" for lam, a, b in cmp.diff[:2]))
    return [t.result("folding formula matches oracle", start)]


# ----------------------------------------------------------------------------
# positivity, the class conjecture, small tables

def positivity_checks(max_n: int = 8, threads: int | None = None) -> list[Check]:
    start = time.perf_counter()
    t = _Tally()
    for n in range(1, max_n + 1):
        for mu in partitions(n):
            try:
                table = kostka_macdonald_oracle(mu, threads, max_n)
            except Exception as exc:  # noqa: BLE001
                t.check(False, f"{mu}: {exc}")
                continue
            t.check(table.entries.is_positive(), lambda: f"{mu}")
    return [t.result("oracle coefficients nonnegative", start)]


def conjecture_checks(max_n: int = 7) -> list[Check]:
    start = time.perf_counter()
    t = _Tally()
    for n in range(1, max_n + 1):
        report = conjecture_scan(n, max_n=max_n)
        for _ in range(report.classes):
            t.check(True)
        for f in report.failures:
            t.check(False, f"{f.mu} class of {format_word(f.representative)}: {f.reason}")
    return [t.result("generalized classes are Schur positive", start)]


def small_table_checks(max_n: int = 7, threads: int | None = None) -> list[Check]:
    start = time.perf_counter()
    t = _Tally()
    q, tt, one = QtPoly.monomial(1, 0), QtPoly.monomial(0, 1), QtPoly.constant(1)
    known = {
        (2,): {(2,): one, (1, 1): q},
        (1, 1): {(2,): one, (1, 1): tt},
        (2, 1): {(3,): one, (2, 1): q + tt, (1, 1, 1): q * tt},
    }
    for mu, want in known.items():
        got = kostka_macdonald_oracle(mu, threads).entries
        t.check(got == SchurExpansion(sum(mu), want), lambda: f"{mu}: {got}")
    for n in range(1, max_n + 1):
        for mu in partitions(n):
            table = kostka_macdonald_oracle(mu, threads, max_n)
            for lam in partitions(n):
                got = table[lam].eval_at_one()
                t.check(got == hook_length_count(lam), lambda: f"K({lam},{mu})(1,1) = {got}")
    return [t.result("known small tables", start)]


SUITES = {
    "examples": lambda max_n, threads: worked_examples(),
    "involutions": lambda max_n, threads: involution_checks(min(max_n, 7)),
    "bijections": lambda max_n, threads: bijection_checks(min(max_n, 7), max_n),
    "folding": lambda max_n, threads: (
        folding_formula_checks(max_n, extra=(), threads=threads)
        + class_merging_checks(min(max_n, 7))
    ),
    "conjecture": lambda max_n, threads: (
        standard_class_checks(max_n, max_n)
        + positivity_checks(max_n, threads)
        + conjecture_checks(min(max_n, 7))
        + small_table_checks(min(max_n, 7), threads)
    ),
}


def run_suite(name: str, max_n: int = 8, threads: int | None = None) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_n, threads)


__all__ = [
    "Check",
    "SUITES",
    "run_suite",
    "worked_examples",
    "involution_checks",
    "standard_class_checks",
    "bijection_checks",
    "fold_transitions",
    "class_merging_checks",
    "folding_formula_checks",
    "positivity_checks",
    "conjecture_checks",
    "small_table_checks",
]
