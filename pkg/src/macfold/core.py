"""Value types shared by every module.

Permutations and words are plain tuples of ints, partitions are weakly
decreasing tuples, descent sets are frozensets.  Positions and cell
coordinates are 1-based.  Rows are counted from the bottom (row 1 is the
longest part) and fillings are read from the top row down, left to right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]
Partition = tuple[int, ...]
DescentSet = frozenset


class DomainError(ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedShapeError(DomainError):
    """The folding pipeline only exists for partitions with second part at most 2."""


class InvariantViolation(RuntimeError):
    """A property that must hold (mathematically or by construction) failed."""


class NotSymmetricError(ValueError):
    """A fundamental expansion is not a symmetric function."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured size limit."""


# ----------------------------------------------------------------------------
# validation and parsing

def as_perm(w: Iterable[int] | str) -> Perm:
    """Coerce ``w`` to a permutation tuple, checking it is a rearrangement of 1..n.

    Strings are accepted either as digit strings (``"583691724"``) or
    comma separated (``"10,2,1,..."``).
    """
    if isinstance(w, str):
        w = parse_word(w)
    w = tuple(int(x) for x in w)
    if not w or sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"not a permutation of 1..n: {w}")
    return w


def as_word(w: Iterable[int] | str) -> Word:
    if isinstance(w, str):
        w = parse_word(w)
    w = tuple(int(x) for x in w)
    if any(x < 1 for x in w) or len(set(w)) != len(w):
        raise DomainError(f"a word must have distinct positive letters: {w}")
    return w


def as_partition(parts: Iterable[int] | str) -> Partition:
    if isinstance(parts, str):
        parts = [p for p in parts.replace(" ", "").split(",") if p]
    parts = tuple(int(p) for p in parts)
    if not parts or any(p <= 0 for p in parts):
        raise DomainError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise DomainError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x.strip())
    return tuple(int(c) for c in text)


def format_word(w: Sequence[int]) -> str:
    """Digit string for n <= 9, comma separated otherwise."""
    if len(w) <= 9 and all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def dominance_leq(mu: Partition, nu: Partition) -> bool:
    """True iff ``mu`` is dominated by ``nu`` (every prefix sum of mu <= that of nu)."""
    if sum(mu) != sum(nu):
        raise DomainError(f"dominance needs equal sizes: {mu} vs {nu}")
    a = b = 0
    for i in range(max(len(mu), len(nu))):
        a += mu[i] if i < len(mu) else 0
        b += nu[i] if i < len(nu) else 0
        if a > b:
            return False
    return True


# ----------------------------------------------------------------------------
# shapes and fillings

@dataclass(frozen=True)
class Cell:
    row: int
    col: int


class Shape:
    """Cell geometry of a Young diagram, with reading order fixed.

    Use :func:`shape_of` rather than constructing directly; instances are
    cached per partition.
    """

    def __init__(self, mu: Partition):
        self.mu = mu
        self.n = sum(mu)
        self.heights = conjugate(mu)
        cells = []
        for row in range(len(mu), 0, -1):
            for col in range(1, mu[row - 1] + 1):
                cells.append(Cell(row, col))
        # cells[p - 1] is the cell at reading position p
        self.cells: tuple[Cell, ...] = tuple(cells)
        self._position = {c: p for p, c in enumerate(cells, 1)}
        # reading position of the cell directly below, or 0 in the bottom row
        self.below = tuple(
            self._position[Cell(c.row - 1, c.col)] if c.row > 1 else 0 for c in cells
        )
        self.attacks = frozenset(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if _attacking(cells[i - 1], cells[j - 1])
        )

    def __repr__(self) -> str:
        return f"Shape({self.mu})"

    def contains(self, c: Cell) -> bool:
        return 1 <= c.row <= len(self.mu) and 1 <= c.col <= self.mu[c.row - 1]

    def cell_of(self, position: int) -> Cell:
        if not 1 <= position <= self.n:
            raise DomainError(f"position {position} outside 1..{self.n}")
        return self.cells[position - 1]

    def position_of(self, c: Cell) -> int:
        if not self.contains(c):
            raise DomainError(f"{c} is not a cell of {self.mu}")
        return self._position[c]

    def arm(self, c: Cell) -> int:
        if not self.contains(c):
            raise DomainError(f"{c} is not a cell of {self.mu}")
        return self.mu[c.row - 1] - c.col

    def leg(self, c: Cell) -> int:
        if not self.contains(c):
            raise DomainError(f"{c} is not a cell of {self.mu}")
        return self.heights[c.col - 1] - c.row

    def attacking(self, p: int, q: int) -> bool:
        """Whether reading positions ``p`` and ``q`` can form a mu-inversion pair."""
        return (min(p, q), max(p, q)) in self.attacks


def _attacking(first: Cell, later: Cell) -> bool:
    # ``first`` precedes ``later`` in reading order
    if first.row == later.row:
        return True
    return later.row == first.row - 1 and later.col < first.col


@lru_cache(maxsize=None)
def shape_of(mu: Partition) -> Shape:
    return Shape(as_partition(mu))


def cell_of(mu: Partition, position: int) -> Cell:
    return shape_of(mu).cell_of(position)


def position_of(mu: Partition, c: Cell) -> int:
    return shape_of(mu).position_of(c)


def arm(mu: Partition, c: Cell) -> int:
    return shape_of(mu).arm(c)


def leg(mu: Partition, c: Cell) -> int:
    return shape_of(mu).leg(c)


@dataclass(frozen=True)
class Filling:
    """A permutation written into the diagram of ``shape`` in reading order."""

    shape: Partition
    word: Perm

    def __post_init__(self):
        object.__setattr__(self, "shape", as_partition(self.shape))
        object.__setattr__(self, "word", as_perm(self.word))
        if sum(self.shape) != len(self.word):
            raise DomainError(f"shape {self.shape} does not have {len(self.word)} cells")

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def geometry(self) -> Shape:
        return shape_of(self.shape)

    def cell_of(self, position: int) -> Cell:
        return self.geometry.cell_of(position)

    def position_of(self, c: Cell) -> int:
        return self.geometry.position_of(c)

    def entry(self, c: Cell) -> int:
        return self.word[self.position_of(c) - 1]

    def cell_of_letter(self, letter: int) -> Cell:
        return self.cell_of(self.word.index(letter) + 1)

    def rows(self) -> list[Perm]:
        """Rows from bottom to top."""
        g = self.geometry
        out: list[list[int]] = [[] for _ in self.shape]
        for p, x in enumerate(self.word, 1):
            out[g.cells[p - 1].row - 1].append(x)
        return [tuple(r) for r in out]

    def pretty(self) -> str:
        width = len(str(self.n))
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in reversed(self.rows())
        )


# ----------------------------------------------------------------------------
# polynomials in q and t

class QtPoly:
    """Sparse polynomial in q, t with exact integer coefficients.

    Stored as ``{(q_exponent, t_exponent): coefficient}`` with no zero entries.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if c:
                clean[(int(a), int(b))] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 1) -> "QtPoly":
        return cls({(a, b): c})

    @classmethod
    def constant(cls, c: int) -> "QtPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QtPoly.constant(other)
        if not isinstance(other, QtPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "QtPoly":
        if isinstance(other, int):
            other = QtPoly.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QtPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QtPoly":
        return QtPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "QtPoly":
        if isinstance(other, int):
            other = QtPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "QtPoly":
        return (-self) + other

    def __mul__(self, other) -> "QtPoly":
        if isinstance(other, int):
            return QtPoly({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return QtPoly(out)

    __rmul__ = __mul__

    def __call__(self, q: int = 1, t: int = 1):
        return sum(c * q**a * t**b for (a, b), c in self._terms.items())

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def __repr__(self) -> str:
        return f"QtPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for (a, b), c in self._terms.items():
            vars_ = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("q", a), ("t", b)) if e
            )
            mag = abs(c)
            if not vars_:
                body = str(mag)
            elif mag == 1:
                body = vars_
            else:
                body = f"{mag}*{vars_}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def latex(self) -> str:
        s = str(self).replace("*", "")
        return s

    def to_json(self) -> list[dict]:
        return [{"q": a, "t": b, "c": c} for (a, b), c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "QtPoly":
        out: dict[tuple[int, int], int] = {}
        for term in data:
            k = (int(term["q"]), int(term["t"]))
            out[k] = out.get(k, 0) + int(term["c"])
        return cls(out)


ZERO = QtPoly()
ONE = QtPoly.constant(1)
q = QtPoly.monomial(1, 0)
t = QtPoly.monomial(0, 1)


# ----------------------------------------------------------------------------
# symmetric function data

def _descent_key(d: frozenset) -> tuple:
    return (len(d), sorted(d))


class FundExpansion:
    """Sum of ``coeff * F_D`` over descent sets ``D`` of [n-1]."""

    def __init__(self, n: int, coeffs: Mapping[frozenset, QtPoly] | None = None):
        self.n = n
        clean = {}
        for d, c in (coeffs or {}).items():
            d = frozenset(d)
            if any(not 1 <= i <= n - 1 for i in d):
                raise DomainError(f"descent set {sorted(d)} not inside [{n - 1}]")
            if isinstance(c, int):
                c = QtPoly.constant(c)
            if c:
                clean[d] = c
        self.coeffs: dict[frozenset, QtPoly] = dict(
            sorted(clean.items(), key=lambda kv: _descent_key(kv[0]))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FundExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other: "FundExpansion") -> "FundExpansion":
        if self.n != other.n:
            raise DomainError("cannot add expansions of different degree")
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, ZERO) + c
        return FundExpansion(self.n, out)

    def scale(self, c: QtPoly | int) -> "FundExpansion":
        return FundExpansion(self.n, {d: v * c for d, v in self.coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"FundExpansion({self.n}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in self.coeffs.items():
            label = "F_{" + ",".join(map(str, sorted(d))) + "}"
            parts.append(label if c == ONE else f"({c})*{label}")
        return " + ".join(parts)

    def eval_at_one(self) -> int:
        return sum(c.eval_at_one() for c in self.coeffs.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"D": sorted(d), "coeff": c.to_json()} for d, c in self.coeffs.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FundExpansion":
        out: dict[frozenset, QtPoly] = {}
        for term in data["terms"]:
            d = frozenset(term["D"])
            out[d] = out.get(d, ZERO) + QtPoly.from_json(term["coeff"])
        return cls(int(data["n"]), out)


class SchurExpansion:
    """Sum of ``coeff * s_lambda`` over partitions of n."""

    def __init__(self, n: int, coeffs: Mapping[Partition, QtPoly] | None = None):
        self.n = n
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = as_partition(lam)
            if sum(lam) != n:
                raise DomainError(f"{lam} is not a partition of {n}")
            if isinstance(c, int):
                c = QtPoly.constant(c)
            if c:
                clean[lam] = c
        self.coeffs: dict[Partition, QtPoly] = dict(
            sorted(clean.items(), reverse=True)
        )

    def __getitem__(self, lam) -> QtPoly:
        return self.coeffs.get(tuple(lam), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise DomainError("cannot add expansions of different degree")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, ZERO) + c
        return SchurExpansion(self.n, out)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"SchurExpansion({self.n}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in self.coeffs.items():
            label = "s" + str(lam).replace(" ", "").replace(",)", ")")
            parts.append(label if c == ONE else f"({c})*{label}")
        return " + ".join(parts)

    def is_positive(self) -> bool:
        return all(c.is_nonnegative() for c in self.coeffs.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"lambda": list(lam), "coeff": c.to_json()}
                for lam, c in self.coeffs.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurExpansion":
        return cls(
            int(data["n"]),
            {tuple(t["lambda"]): QtPoly.from_json(t["coeff"]) for t in data["terms"]},
        )


def dumps(obj) -> str:
    """Canonical JSON text for the value types above."""
    return json.dumps(_jsonable(obj), sort_keys=True)


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, Cell):
        return {"row": obj.row, "col": obj.col}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj
