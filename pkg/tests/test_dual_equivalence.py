from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from macfold.core import (
    DomainError,
    Filling,
    InvariantViolation,
    QtPoly,
    SchurExpansion,
    partitions,
    shape_of,
)
from macfold.dual_equivalence import (
    MU,
    STANDARD,
    TWISTED,
    ClassPartition,
    D_mu,
    D_mu_word,
    EquivClass,
    class_fund_gf,
    d,
    d_twisted,
    enumerate_classes,
    super_standard_representative,
    to_dot,
    uses_twisted,
)
from macfold.schur import decompose_to_schur
from macfold.stats import descents, inversions, major_index, positions, stats_fast


def w(s):
    return tuple(int(c) for c in s)


def test_standard_moves():
    assert d(2, w("2314")) == w("1324")
    assert d(3, w("1324")) == w("1423")
    assert d(7, w("583691724")) == w("573691824")
    # medial i is fixed
    assert d(2, w("123")) == w("123")
    with pytest.raises(DomainError):
        d(1, w("123"))


def test_twisted_moves():
    chain = ["2314", "3124", "2143", "1342", "1423"]
    for (a, b), i in zip(zip(chain, chain[1:]), (2, 3, 2, 3)):
        assert d_twisted(i, w(a)) == w(b)
    assert d_twisted(3, w("2143")) == w("3124")
    assert d_twisted(7, w("593687124")) == w("593768124")


def test_generalized_moves_on_the_worked_shape():
    mu = (4, 2, 2, 1)
    assert not uses_twisted(7, Filling(mu, w("583691724")))
    assert D_mu(7, Filling(mu, w("583691724"))).word == w("573691824")
    assert uses_twisted(7, Filling(mu, w("593687124")))
    assert D_mu_word(mu, 7, w("593687124")) == w("593768124")


def test_column_and_row_extremes():
    for p in permutations(range(1, 6)):
        for i in range(2, 5):
            assert D_mu_word((1,) * 5, i, p) == d(i, p)
            assert D_mu_word((5,), i, p) == d_twisted(i, p)


@given(st.permutations(list(range(1, 9))), st.integers(2, 7))
def test_involution_properties(p, i):
    p = tuple(p)
    assert d(i, d(i, p)) == p and descents(d(i, p)) == descents(p)
    assert d_twisted(i, d_twisted(i, p)) == p and inversions(d_twisted(i, p)) == inversions(p)
    for mu in [(4, 2, 2), (3, 3, 2), (5, 1, 1, 1), (2, 2, 2, 2)]:
        v = D_mu_word(mu, i, p)
        assert D_mu_word(mu, i, v) == p
        assert stats_fast(mu, v) == stats_fast(mu, p)


def test_small_classes_by_statistic():
    std = ClassPartition(4, STANDARD, perms=[p for p in permutations(range(1, 5)) if major_index(p) == 2])
    got = [c.members for c in std.classes()]
    assert got == [(w("1324"), w("1423"), w("2314")), (w("2413"), w("3412"))]
    assert [super_standard_representative(c) for c in std.classes()] == [
        (w("1423"), (3, 1)),
        (w("3412"), (2, 2)),
    ]
    tw = ClassPartition(4, TWISTED, perms=[p for p in permutations(range(1, 5)) if inversions(p) == 2])
    (c,) = tw.classes()
    assert set(c.members) == set(map(w, ["2314", "3124", "2143", "1342", "1423"]))
    one = QtPoly.constant(1)
    assert decompose_to_schur(class_fund_gf(c)) == SchurExpansion(4, {(3, 1): one, (2, 2): one})
    assert decompose_to_schur(class_fund_gf(std.classes()[1])) == SchurExpansion(4, {(2, 2): one})


def test_class_partition_basics():
    (c,) = enumerate_classes(1)
    assert c.members == ((1,),)
    classes = enumerate_classes(5, STANDARD)
    assert len(classes) == 26  # number of standard tableaux of size 5
    assert sum(len(c) for c in classes) == 120
    part = ClassPartition(4, MU, (2, 2))
    assert all(part.same_class(m, c.representative) for c in part.classes() for m in c.members)
    with pytest.raises(DomainError):
        ClassPartition(4, MU, (2, 1))
    with pytest.raises(DomainError):
        ClassPartition(4, STANDARD, perms=[w("2314")])


def test_generalized_class_weights_constant():
    for mu in [(3, 2), (2, 2, 1), (3, 1, 1)]:
        for c in enumerate_classes(5, MU, mu):
            assert len({stats_fast(mu, m) for m in c.members}) == 1


def test_super_standard_representative_requires_exactly_one():
    with pytest.raises(InvariantViolation):
        super_standard_representative(EquivClass((w("2314"), w("2413")), STANDARD))


def test_dot_output():
    text = to_dot(enumerate_classes(3, STANDARD, keep_edges=True))
    assert text.startswith("graph classes {") and '"213" -- "312" [label="d2"]' in text


# ----------------------------------------------------------------------------
# alternative twist predicates, kept to document why the implemented one was chosen

def _triple(p, i):
    pos = positions(p)
    return pos[i - 1], pos[i], pos[i + 1]


def literal_attack_predicate(g, p, i):
    """Twist when the cell of i attacks the cell of i-1 or of i+1."""
    a, b, c = _triple(p, i)
    return g.attacking(a, b) or g.attacking(b, c)


def any_relation_predicate(g, p, i):
    """Twist when i attacks or is vertically adjacent to either neighbour."""
    a, b, c = _triple(p, i)
    adj = lambda x, y: g.attacking(x, y) or g.below[x - 1] == y or g.below[y - 1] == x
    return adj(a, b) or adj(b, c)


def outer_pair_predicate(g, p, i):
    """Twist when the cells of i-1 and i+1 attack each other."""
    a, _, c = _triple(p, i)
    return g.attacking(a, c)


def _failures(predicate, max_n=5):
    bad = 0
    for n in range(3, max_n + 1):
        for p in permutations(range(1, n + 1)):
            for mu in partitions(n):
                g = shape_of(mu)
                for i in range(2, n):
                    move = d_twisted if predicate(g, p, i) else d
                    v = move(i, p)
                    back = (d_twisted if predicate(g, v, i) else d)(i, v)
                    if back != p or stats_fast(mu, v) != stats_fast(mu, p):
                        bad += 1
    return bad


@pytest.mark.parametrize("predicate", [literal_attack_predicate, any_relation_predicate, outer_pair_predicate])
def test_alternative_predicates_break_the_involution(predicate):
    assert _failures(predicate) > 0


def test_implemented_predicate_is_clean():
    from macfold.dual_equivalence import _uses_twisted

    assert _failures(_uses_twisted) == 0
