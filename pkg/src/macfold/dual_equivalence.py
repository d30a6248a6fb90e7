"""Dual equivalence involutions and the equivalence classes they generate.

Three families act on permutations for ``1 < i < n``:

* ``d(i, w)`` exchanges ``i`` with whichever of ``i-1, i+1`` is positionally
  farther from it (identity when ``i`` sits between them);
* ``d_twisted(i, w)`` cyclically rotates the three letters so ``i`` jumps to
  the other side;
* ``D_mu(i, f)`` picks one of the two according to where ``i-1, i, i+1`` sit
  in the filling of a shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable

from .core import (
    DomainError,
    Filling,
    FundExpansion,
    InvariantViolation,
    Partition,
    Perm,
    QtPoly,
    as_partition,
    format_word,
    shape_of,
)
from .stats import inverse_descents, positions, stats_fast, super_standard_type

STANDARD = "standard"
TWISTED = "twisted"
MU = "mu"
KINDS = (STANDARD, TWISTED, MU)


def _check_index(i: int, n: int):
    if not 1 < i < n:
        raise DomainError(f"involution index {i} must satisfy 1 < i < {n}")


def _triple(w: Perm, i: int) -> tuple[int, int, int]:
    pos = positions(w)
    return pos[i - 1], pos[i], pos[i + 1]


def d(i: int, w: Perm) -> Perm:
    """Elementary dual equivalence involution."""
    _check_index(i, len(w))
    a, b, c = _triple(w, i)
    if min(a, c) < b < max(a, c):
        return w
    # the farther neighbour is the one at the opposite extreme
    far = i - 1 if abs(a - b) > abs(c - b) else i + 1
    out = list(w)
    pb = b - 1
    pf = (a if far == i - 1 else c) - 1
    out[pb], out[pf] = out[pf], out[pb]
    return tuple(out)


def d_twisted(i: int, w: Perm) -> Perm:
    """Elementary twisted dual equivalence involution."""
    _check_index(i, len(w))
    a, b, c = _triple(w, i)
    if min(a, c) < b < max(a, c):
        return w
    slots = sorted((a, b, c))
    vals = [w[p - 1] for p in slots]
    if slots[0] == b:
        # i leftmost: everything shifts left, i goes to the right end
        vals = vals[1:] + vals[:1]
    else:
        vals = vals[-1:] + vals[:-1]
    out = list(w)
    for p, v in zip(slots, vals):
        out[p - 1] = v
    return tuple(out)


def uses_twisted(i: int, f: Filling) -> bool:
    """Whether ``D_mu`` acts on ``f`` by the twisted involution.

    ``d`` would exchange ``i`` with its farther neighbour ``j``.  The twisted
    move is used exactly when that exchange could change a statistic, i.e.
    the cells of ``i`` and ``j`` attack (same row, or adjacent rows with the
    lower cell strictly left) or one sits directly below the other.  When
    ``i`` lies between ``i-1`` and ``i+1`` both moves fix ``f``; the answer
    then only reports whether ``i`` attacks a neighbour.
    """
    _check_index(i, f.n)
    return _uses_twisted(shape_of(f.shape), f.word, i)


def _uses_twisted(g, w: Perm, i: int) -> bool:
    a, b, c = _triple(w, i)
    if min(a, c) < b < max(a, c):
        return g.attacking(a, b) or g.attacking(b, c)
    far = a if abs(a - b) > abs(c - b) else c
    return g.attacking(b, far) or g.below[b - 1] == far or g.below[far - 1] == b


def D_mu(i: int, f: Filling) -> Filling:
    """Generalized dual equivalence involution on a filling."""
    _check_index(i, f.n)
    return Filling(f.shape, D_mu_word(f.shape, i, f.word))


def D_mu_word(mu: Partition, i: int, w: Perm) -> Perm:
    """:func:`D_mu` acting on bare words; ``mu`` is trusted to fit ``w``."""
    if _uses_twisted(shape_of(mu), w, i):
        return d_twisted(i, w)
    return d(i, w)


def involution(kind: str, mu: Partition | None = None) -> Callable[[int, Perm], Perm]:
    """``(i, w) -> w'`` for the chosen generator family."""
    if kind == STANDARD:
        return d
    if kind == TWISTED:
        return d_twisted
    if kind == MU:
        if mu is None:
            raise DomainError("the mu-generalized involutions need a shape")
        mu = as_partition(mu)
        shape_of(mu)
        return lambda i, w: D_mu_word(mu, i, w)
    raise DomainError(f"unknown generator kind {kind!r}")


# ----------------------------------------------------------------------------
# equivalence classes

@dataclass(frozen=True)
class EquivClass:
    members: tuple[Perm, ...]
    kind: str
    mu: Partition | None = None
    edges: tuple[tuple[int, Perm, Perm], ...] = field(default=(), compare=False, repr=False)

    @property
    def representative(self) -> Perm:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(format_word(w) for w in self.members) + "}"


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller index wins so roots are canonical minima
            if rx < ry:
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry


class ClassPartition:
    """Orbit partition of S_n (or of a subset) under a generator family.

    ``label[w]`` is the lexicographically smallest member of the class of
    ``w``; :meth:`classes` lists them in order of that representative.
    """

    def __init__(self, n: int, kind: str, mu: Partition | None = None,
                 perms: Iterable[Perm] | None = None, keep_edges: bool = False):
        if kind == MU:
            if mu is None:
                raise DomainError("the mu-generalized involutions need a shape")
            mu = as_partition(mu)
            if sum(mu) != n:
                raise DomainError(f"shape {mu} is not a partition of {n}")
        self.n = n
        self.kind = kind
        self.mu = mu
        move = involution(kind, mu)
        if perms is None:
            elems = list(permutations(range(1, n + 1)))
        else:
            elems = sorted(set(perms))
        index = {w: k for k, w in enumerate(elems)}
        uf = _UnionFind(len(elems))
        edges = []
        for k, w in enumerate(elems):
            for i in range(2, n):
                v = move(i, w)
                if v == w:
                    continue
                j = index.get(v)
                if j is None:
                    raise DomainError("the supplied set is not closed under the involutions")
                if keep_edges and k < j:
                    edges.append((i, w, v))
                uf.union(k, j)
        self.label = {w: elems[uf.find(k)] for k, w in enumerate(elems)}
        groups: dict[Perm, list[Perm]] = {}
        for w in elems:
            groups.setdefault(self.label[w], []).append(w)
        self._groups = groups
        self._edges = edges

    def same_class(self, u: Perm, v: Perm) -> bool:
        return self.label[u] == self.label[v]

    def classes(self) -> list[EquivClass]:
        by_root: dict[Perm, list] = {}
        for e in self._edges:
            by_root.setdefault(self.label[e[1]], []).append(e)
        return [
            EquivClass(tuple(ms), self.kind, self.mu, tuple(by_root.get(root, ())))
            for root, ms in sorted(self._groups.items())
        ]

    def class_of(self, w: Perm) -> EquivClass:
        root = self.label[tuple(w)]
        return EquivClass(tuple(self._groups[root]), self.kind, self.mu)


def enumerate_classes(n: int, kind: str = STANDARD, mu: Partition | None = None,
                      keep_edges: bool = False) -> list[EquivClass]:
    """All classes of S_n under ``d``, ``d_twisted`` or ``D_mu`` (``kind`` = standard,
    twisted, mu), sorted by smallest member."""
    if n < 1:
        raise DomainError("n must be positive")
    return ClassPartition(n, kind, mu, keep_edges=keep_edges).classes()


def class_fund_gf(c: EquivClass | Iterable[Perm], mu: Partition | None = None) -> FundExpansion:
    """Quasisymmetric generating function of a class.

    With ``mu``, each member carries the weight ``q^inv_mu t^maj_mu``.
    """
    members = c.members if isinstance(c, EquivClass) else tuple(c)
    if not members:
        raise DomainError("empty class")
    n = len(members[0])
    out: dict[frozenset, QtPoly] = {}
    for w in members:
        term = QtPoly.constant(1)
        if mu is not None:
            term = QtPoly.monomial(*stats_fast(mu, w))
        d_ = inverse_descents(w)
        out[d_] = out.get(d_, QtPoly()) + term
    return FundExpansion(n, out)


def super_standard_representative(c: EquivClass) -> tuple[Perm, Partition]:
    """The unique super-standard member of a standard class, with its type.

    Raises :class:`InvariantViolation` if there are zero or several.
    """
    found = [(w, lam) for w in c.members if (lam := super_standard_type(w)) is not None]
    if len(found) != 1:
        raise InvariantViolation(
            f"class {c} has {len(found)} super-standard members, expected exactly one"
        )
    return found[0]


def to_dot(classes: Iterable[EquivClass]) -> str:
    """Graphviz text for the classes; edges need ``keep_edges=True``."""
    lines = ["graph classes {"]
    for k, c in enumerate(classes):
        lines.append(f"  subgraph cluster_{k} {{")
        for w in c.members:
            lines.append(f'    "{format_word(w)}";')
        for i, u, v in c.edges:
            name = f"d{i}" if c.kind == STANDARD else f"dt{i}"
            if c.kind == MU:
                name = f"dt{i}" if d_twisted(i, u) == v and d(i, u) != v else f"d{i}"
            lines.append(f'    "{format_word(u)}" -- "{format_word(v)}" [label="{name}"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
