"""Inverse-descent preserving bijections that fold a column into a shape.

``gamma`` is the block rotation from Foata's bijection; ``phi_k`` applies
it to the tail of a permutation, sliding one leg cell into the arm of a
hook.  ``beta`` percolates adjacent swaps down a two-column leg;
``sigma`` and ``phi_ab`` combine the two to move a leg cell into the
second column.  ``phi_mu`` composes the whole tower for shapes
``(m, 2^b, 1^a)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, Partition, Perm, UnsupportedShapeError, Word, as_partition


def _check_letter(x: int, w: Word):
    if x in w:
        raise DomainError(f"letter {x} occurs in {w}")


def gamma_blocks(x: int, w: Word) -> list[Word]:
    """Cut ``w`` before every letter on the same side of ``x`` as ``w[0]``."""
    _check_letter(x, w)
    if not w:
        return []
    small = w[0] < x
    blocks: list[list[int]] = []
    for y in w:
        if not blocks or (y < x) == small:
            blocks.append([y])
        else:
            blocks[-1].append(y)
    return [tuple(b) for b in blocks]


def gamma(x: int, w: Word) -> Word:
    """Move the first letter of each block of ``gamma_blocks(x, w)`` to its end."""
    out: list[int] = []
    for b in gamma_blocks(x, w):
        out.extend(b[1:])
        out.append(b[0])
    return tuple(out)


def gamma_inverse(x: int, v: Word) -> Word:
    """Inverse of :func:`gamma`: cut after each letter on the side of ``x``
    where the last letter lies, then move each block's last letter to the front."""
    _check_letter(x, v)
    if not v:
        return ()
    small = v[-1] < x
    blocks: list[list[int]] = [[]]
    for y in v:
        blocks[-1].append(y)
        if (y < x) == small:
            blocks.append([])
    out: list[int] = []
    for b in blocks:
        if b:
            out.append(b[-1])
            out.extend(b[:-1])
    return tuple(out)


def phi_k(k: int, w: Perm) -> Perm:
    """Keep ``w[:k]`` and apply ``gamma`` keyed by ``w_k`` to the rest."""
    n = len(w)
    if not 1 <= k <= n - 1:
        raise DomainError(f"phi_k needs 1 <= k <= {n - 1}, got {k}")
    return tuple(w[:k]) + gamma(w[k - 1], tuple(w[k:]))


def phi_k_inverse(k: int, w: Perm) -> Perm:
    n = len(w)
    if not 1 <= k <= n - 1:
        raise DomainError(f"phi_k needs 1 <= k <= {n - 1}, got {k}")
    return tuple(w[:k]) + gamma_inverse(w[k - 1], tuple(w[k:]))


def _between(x: int, a: int, b: int) -> bool:
    return min(a, b) < x < max(a, b)


def beta_indices(x: int, w: Word) -> list[int]:
    """1-based starting indices of the pairs swapped by :func:`beta`."""
    _check_letter(x, w)
    if len(w) < 2 or not _between(x, w[0], w[1]):
        return []
    out = [1]
    i = 1
    # a further pair joins only when all four letters w_i..w_{i+3} exist
    while i + 3 <= len(w):
        a, b, c, e = w[i - 1], w[i], w[i + 1], w[i + 2]
        if _between(a, c, e) != _between(b, c, e):
            i += 2
            out.append(i)
        else:
            break
    return out


def beta(x: int, w: Word) -> Word:
    out = list(w)
    for i in beta_indices(x, w):
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def sigma(k: int, m: int, w: Perm) -> Perm:
    """Apply ``beta`` keyed by ``w_k`` to the window ``w_{k+1} .. w_{k+m}``."""
    n = len(w)
    if k < 1 or m < 0 or k + m > n:
        raise DomainError(f"sigma window ({k}, {m}) does not fit a word of length {n}")
    return tuple(w[:k]) + beta(w[k - 1], tuple(w[k:k + m])) + tuple(w[k + m:])


def phi_ab(a: int, b: int, w: Perm) -> Perm:
    """Fold the ``a``-th cell from the top of ``(n-2b-a, 2^b, 1^a)`` into column 2."""
    n = len(w)
    if a < 1 or b < 0 or a + 2 * b + 2 > n:
        raise DomainError(f"phi_(a,b) parameters ({a}, {b}) out of range for n={n}")
    u = sigma(a, 2 * b + 2, w)
    v = sigma(a - 1, 2 * b + 2, u) if a > 1 else u
    p = a + 2 * b + 1
    if u[p - 1] != v[p - 1]:
        if p > n - 1:
            raise DomainError(f"phi_(a,b) needs a nonempty tail after position {p}")
        return phi_k(p, v)
    return v


def phi_ab_inverse(a: int, b: int, w: Perm) -> Perm:
    """Inverse of :func:`phi_ab`, undoing the optional ``phi_k`` then both sigmas."""
    n = len(w)
    if a < 1 or b < 0 or a + 2 * b + 2 > n:
        raise DomainError(f"phi_(a,b) parameters ({a}, {b}) out of range for n={n}")
    p = a + 2 * b + 1
    candidates = [w]
    if p <= n - 1:
        candidates.append(phi_k_inverse(p, w))
    found = set()
    for v in candidates:
        u = sigma(a - 1, 2 * b + 2, v) if a > 1 else v
        x = sigma(a, 2 * b + 2, u)
        if phi_ab(a, b, x) == w:
            found.add(x)
    if len(found) != 1:
        raise DomainError(f"no unique preimage of {w} under phi_({a},{b})")
    return found.pop()


# ----------------------------------------------------------------------------
# the full pipeline

def fold_parameters(mu: Partition) -> tuple[int, int, int]:
    """``(m, b, a)`` with ``mu = (m, 2^b, 1^a)``; raises for ``mu_2 > 2``."""
    mu = as_partition(mu)
    if len(mu) > 1 and mu[1] > 2:
        raise UnsupportedShapeError(f"no folding map for {mu}: second part exceeds 2")
    rest = mu[1:]
    return mu[0], rest.count(2), rest.count(1)


@dataclass(frozen=True)
class FoldStep:
    label: str
    word: Perm
    shape: Partition


def fold_schedule(mu: Partition) -> list[tuple[str, tuple[int, ...], Partition]]:
    """The bijections applied by :func:`phi_mu`, in order, with the shape reached
    after each one."""
    m, b, a = fold_parameters(mu)
    n = sum(as_partition(mu))
    steps = []
    # hook folds lengthen the bottom row one cell at a time
    for k in range(n - 1, a + 2 * b, -1):
        arm = n - k + 1
        steps.append((f"phi_{k}", (k,), (arm,) + (1,) * (k - 1)))
    # row folds move leg cells into the second column, bottom rows first
    for j in range(b):
        aa = a + 2 * b - 2 * j
        shape = (m,) + (2,) * (j + 1) + (1,) * (aa - 2)
        steps.append((f"phi_({aa},{j})", (aa, j), shape))
    return steps


def phi_mu(mu: Partition, w: Perm, trace: bool = False):
    """Transport ``w`` from the column shape to ``mu``.

    With ``trace=True`` returns the list of :class:`FoldStep`, starting from
    the column ``(1^n)`` and ending at ``mu``; otherwise the final word.
    """
    mu = as_partition(mu)
    w = tuple(w)
    n = len(w)
    if sum(mu) != n:
        raise DomainError(f"shape {mu} does not have {n} cells")
    schedule = fold_schedule(mu)
    steps = [FoldStep("start", w, (1,) * n)]
    for label, params, shape in schedule:
        if len(params) == 1:
            w = phi_k(params[0], w)
        else:
            w = phi_ab(params[0], params[1], w)
        steps.append(FoldStep(label, w, shape))
    return steps if trace else w


def phi_mu_inverse(mu: Partition, w: Perm) -> Perm:
    w = tuple(w)
    for label, params, _ in reversed(fold_schedule(mu)):
        if len(params) == 1:
            w = phi_k_inverse(params[0], w)
        else:
            w = phi_ab_inverse(params[0], params[1], w)
    return w
