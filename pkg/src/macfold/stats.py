"""Permutation statistics: inverse descents, de-standardization and the
shape-dependent descent/inversion statistics attached to a filling."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import Cell, Filling, Partition, Perm, as_partition, shape_of


def positions(w: Perm) -> list[int]:
    """``pos[v]`` is the 1-based position of letter ``v`` in ``w`` (index 0 unused)."""
    pos = [0] * (len(w) + 1)
    for p, x in enumerate(w, 1):
        pos[x] = p
    return pos


def inverse_descents(w: Perm) -> frozenset:
    """Values ``i`` in [n-1] with ``i+1`` to the left of ``i``."""
    pos = positions(w)
    return frozenset(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def descents(w: Perm) -> frozenset:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def major_index(w: Perm) -> int:
    return sum(descents(w))


def inversions(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@dataclass(frozen=True)
class Destandardized:
    letters: tuple[int, ...]
    weight: tuple[int, ...]


def destandardize(w: Perm) -> Destandardized:
    """Collapse the value blocks cut by ``iDes(w)`` to 1, 2, 3, ..."""
    ides = inverse_descents(w)
    block = [0] * (len(w) + 1)
    b = 1
    for v in range(1, len(w) + 1):
        block[v] = b
        if v in ides:
            b += 1
    letters = tuple(block[x] for x in w)
    weight = [0] * b
    for x in letters:
        weight[x - 1] += 1
    return Destandardized(letters, tuple(weight))


def super_standard_type(w: Perm) -> Partition | None:
    """The weight of ``w`` if it is super-standard, else ``None``.

    Super-standard means every suffix of ``dst(w)`` has at least as many
    ``i-1`` as ``i`` for all ``i``.
    """
    d = destandardize(w)
    counts = [0] * (len(d.weight) + 2)
    for x in reversed(d.letters):
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return None
    return d.weight


def is_super_standard(w: Perm) -> bool:
    return super_standard_type(w) is not None


def enumerate_super_standard(lam: Partition) -> list[Perm]:
    """All super-standard permutations of weight ``lam``, in lexicographic order.

    Filters the whole symmetric group, so this is for small n only; see
    :func:`macfold.enumeration.super_standard_table` for the vectorized
    version used by the folding formula.
    """
    lam = as_partition(lam)
    n = sum(lam)
    return [w for w in permutations(range(1, n + 1)) if super_standard_type(w) == lam]


# ----------------------------------------------------------------------------
# statistics of a filling

def mu_descent_cells(f: Filling) -> list[Cell]:
    """Cells whose entry is larger than the entry directly below, in reading order."""
    g = f.geometry
    w = f.word
    return [
        g.cells[p - 1]
        for p in range(1, f.n + 1)
        if g.below[p - 1] and w[p - 1] > w[g.below[p - 1] - 1]
    ]


def maj_mu(f: Filling) -> int:
    g = f.geometry
    return sum(g.leg(c) + 1 for c in mu_descent_cells(f))


def mu_inversion_pairs(f: Filling) -> list[tuple[int, int]]:
    """Value pairs ``(w_i, w_j)`` with ``w_i > w_j`` on attacking positions ``i < j``."""
    w = f.word
    return sorted(
        (w[i - 1], w[j - 1]) for i, j in f.geometry.attacks if w[i - 1] > w[j - 1]
    )


def inv_mu(f: Filling) -> int:
    g = f.geometry
    return len(mu_inversion_pairs(f)) - sum(g.arm(c) for c in mu_descent_cells(f))


def qt_weight(f: Filling) -> tuple[int, int]:
    """``(inv_mu, maj_mu)``, the exponents of q and t."""
    return inv_mu(f), maj_mu(f)


def stats_fast(mu: Partition, w: Perm) -> tuple[int, int]:
    """``(inv_mu, maj_mu)`` without building a :class:`Filling`; no validation."""
    g = shape_of(mu)
    inv = 0
    for i, j in g.attacks:
        if w[i - 1] > w[j - 1]:
            inv += 1
    maj = 0
    for p, b in enumerate(g.below, 1):
        if b and w[p - 1] > w[b - 1]:
            c = g.cells[p - 1]
            maj += g.heights[c.col - 1] - c.row + 1
            inv -= mu[c.row - 1] - c.col
    return inv, maj
