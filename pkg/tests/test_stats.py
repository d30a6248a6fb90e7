from itertools import permutations

from hypothesis import given, strategies as st

from macfold.core import Filling
from macfold.stats import (
    destandardize,
    enumerate_super_standard,
    inv_mu,
    inverse_descents,
    inversions,
    is_super_standard,
    maj_mu,
    major_index,
    mu_descent_cells,
    mu_inversion_pairs,
    qt_weight,
    stats_fast,
    super_standard_type,
)


def w(s):
    return tuple(int(c) for c in s)


MU = (4, 2, 2, 1)


def test_worked_filling():
    f = Filling(MU, w("583691724"))
    assert [f.entry(c) for c in mu_descent_cells(f)] == [8, 6, 9]
    assert maj_mu(f) == 7
    assert mu_inversion_pairs(f) == [(7, 2), (7, 4), (8, 3), (9, 1)]
    assert inv_mu(f) == 2
    assert qt_weight(f) == (2, 7)


def test_folded_filling():
    f = Filling(MU, w("845163279"))
    assert {f.entry(c) for c in mu_descent_cells(f)} == {8, 4, 6}
    assert set(mu_inversion_pairs(f)) == {(3, 2), (5, 1), (6, 3)}
    assert qt_weight(f) == (2, 5)


def test_hook_and_column_weights():
    assert qt_weight(Filling((1,) * 9, w("841567392"))) == (0, 17)
    assert qt_weight(Filling((4,) + (1,) * 5, w("841567392"))) == (4, 3)


def test_inverse_descents():
    assert inverse_descents(w("583691724")) == {2, 4, 7}
    assert inverse_descents(w("841567392")) == {2, 3, 7}
    assert inverse_descents(w("12345")) == frozenset()


def test_destandardize():
    d = destandardize(w("583691724"))
    assert d.letters == w("342341312") and d.weight == (2, 2, 3, 2)
    d = destandardize(w("719852364"))
    assert d.letters == w("314321121") and d.weight == (4, 2, 2, 1)


def test_super_standard():
    assert super_standard_type(w("719852364")) == (4, 2, 2, 1)
    assert super_standard_type(w("3412")) == (2, 2)
    assert super_standard_type(w("1423")) == (3, 1)
    assert not is_super_standard(w("213"))
    assert enumerate_super_standard((4,)) == [w("1234")]
    assert len(enumerate_super_standard((3, 1))) == 3


def test_row_and_column_reduce_to_classical():
    for p in permutations(range(1, 6)):
        assert stats_fast((5,), p) == (inversions(p), 0)
        assert stats_fast((1,) * 5, p) == (0, major_index(p))


@given(st.permutations(list(range(1, 8))), st.sampled_from([(4, 2, 1), (3, 3, 1), (2, 2, 2, 1), (5, 2)]))
def test_fast_path_matches_definition(p, mu):
    f = Filling(mu, tuple(p))
    assert stats_fast(mu, tuple(p)) == (inv_mu(f), maj_mu(f))
    assert inv_mu(f) >= 0
