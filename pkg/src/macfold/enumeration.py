"""Vectorized exhaustive scans over the symmetric group.

S_n is cut into shards by first letter; each shard is an ``((n-1)!, n)``
int8 array in lexicographic order.  Per-shard results are plain dicts merged
by addition in shard order, so the outcome does not depend on how many
worker threads processed them.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable

import numpy as np

from .core import BudgetExceeded, Partition, shape_of

DEFAULT_MAX_N = 9
THREADS_ENV = "MACFOLD_THREADS"
MAX_N_ENV = "MACFOLD_MAX_N"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def check_budget(n: int, max_n: int | None = None):
    if max_n is None:
        max_n = int(os.environ.get(MAX_N_ENV, DEFAULT_MAX_N))
    if n > max_n:
        raise BudgetExceeded(
            f"enumerating S_{n} ({factorial(n)} permutations) exceeds the limit n <= {max_n}; "
            f"raise it with max_n= or {MAX_N_ENV}"
        )


@lru_cache(maxsize=4)
def all_perms(n: int) -> np.ndarray:
    """All of S_n as rows, lexicographic order."""
    if n <= 7:
        return np.array(list(permutations(range(1, n + 1))), dtype=np.int8).reshape(-1, n)
    return np.concatenate([shard(n, f) for f in range(1, n + 1)])


def shard(n: int, first: int) -> np.ndarray:
    """Permutations of S_n starting with ``first``, lexicographic order."""
    if n == 1:
        return np.ones((1, 1), dtype=np.int8)
    rest = all_perms(n - 1)
    rest = rest + (rest >= first).astype(np.int8)
    head = np.full((rest.shape[0], 1), first, dtype=np.int8)
    return np.concatenate([head, rest], axis=1)


def inverse_descent_masks(P: np.ndarray) -> np.ndarray:
    """Bit ``i-1`` set iff ``i`` is an inverse descent, row-wise."""
    n = P.shape[1]
    Q = np.argsort(P, axis=1)  # Q[:, v-1] = position of v
    mask = np.zeros(P.shape[0], dtype=np.int64)
    for i in range(1, n):
        mask |= (Q[:, i] < Q[:, i - 1]).astype(np.int64) << (i - 1)
    return mask


def mu_statistics(P: np.ndarray, mu: Partition) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise ``(inv_mu, maj_mu)``."""
    g = shape_of(tuple(mu))
    inv = np.zeros(P.shape[0], dtype=np.int64)
    maj = np.zeros(P.shape[0], dtype=np.int64)
    for i, j in g.attacks:
        inv += P[:, i - 1] > P[:, j - 1]
    for p, b in enumerate(g.below, 1):
        if b:
            c = g.cells[p - 1]
            desc = P[:, p - 1] > P[:, b - 1]
            maj += desc * (g.leg(c) + 1)
            inv -= desc * g.arm(c)
    return inv, maj


def mask_to_set(mask: int) -> frozenset:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def scan(n: int, work: Callable[[np.ndarray], Counter], threads: int | None = None,
         max_n: int | None = None) -> Counter:
    """Apply ``work`` to every shard of S_n and sum the counters in shard order."""
    check_budget(n, max_n)
    threads = threads or default_threads()
    firsts = range(1, n + 1)

    def run(f):
        return work(shard(n, f))

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(run, firsts))
    else:
        parts = [run(f) for f in firsts]
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


def macdonald_counts(mu: Partition, threads: int | None = None,
                     max_n: int | None = None) -> Counter:
    """Counter keyed by ``(ides_mask, inv_mu, maj_mu)`` over all of S_n."""
    mu = tuple(mu)
    n = sum(mu)

    def work(P):
        masks = inverse_descent_masks(P)
        inv, maj = mu_statistics(P, mu)
        keys = np.stack([masks, inv, maj], axis=1)
        uniq, counts = np.unique(keys, axis=0, return_counts=True)
        return Counter({tuple(int(x) for x in k): int(c) for k, c in zip(uniq, counts)})

    return scan(n, work, threads, max_n)


def super_standard_mask(P: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise super-standard flag and destandardized letters."""
    N, n = P.shape
    Q = np.argsort(P, axis=1)
    ides = Q[:, 1:] < Q[:, :-1]  # column i-1 holds "i is an inverse descent"
    block = np.concatenate(
        [np.ones((N, 1), dtype=np.int64), 1 + np.cumsum(ides, axis=1)], axis=1
    )  # block[:, v-1] = dst letter of value v
    letters = np.take_along_axis(block, P.astype(np.int64) - 1, axis=1)
    counts = np.zeros((N, n + 2), dtype=np.int64)
    ok = np.ones(N, dtype=bool)
    rows = np.arange(N)
    for p in range(n - 1, -1, -1):
        x = letters[:, p]
        counts[rows, x] += 1
        ok &= (x == 1) | (counts[rows, x] <= counts[rows, x - 1])
    return ok, letters


def super_standard_table(n: int, max_n: int | None = None) -> dict[Partition, list[tuple]]:
    """Super-standard permutations of S_n grouped by type, each list lexicographic."""
    check_budget(n, max_n)
    out: dict[Partition, list[tuple]] = {}
    for f in range(1, n + 1):
        P = shard(n, f)
        ok, letters = super_standard_mask(P)
        for w, lt in zip(P[ok], letters[ok]):
            weight = tuple(int(c) for c in np.bincount(lt)[1:])
            out.setdefault(weight, []).append(tuple(int(x) for x in w))
    return out
