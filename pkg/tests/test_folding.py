from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from macfold.core import DomainError, UnsupportedShapeError
from macfold.folding import (
    beta,
    beta_indices,
    fold_parameters,
    fold_schedule,
    gamma,
    gamma_blocks,
    gamma_inverse,
    phi_ab,
    phi_ab_inverse,
    phi_k,
    phi_k_inverse,
    phi_mu,
    phi_mu_inverse,
    sigma,
)
from macfold.stats import inverse_descents, stats_fast


def w(s):
    return tuple(int(c) for c in s)


def test_gamma_examples():
    assert gamma_blocks(5, w("83691724")) == [w("83"), w("6"), w("91"), w("724")]
    assert gamma_blocks(6, w("91724")) == [w("91"), w("724")]
    assert gamma(5, w("83691724")) == w("38619247")
    assert gamma(6, w("91724")) == w("19247")
    assert gamma(9, w("2")) == w("2")
    assert gamma_inverse(5, w("38619247")) == w("83691724")
    assert gamma_blocks(3, ()) == []
    with pytest.raises(DomainError):
        gamma(8, w("83691724"))


def test_phi_k_examples():
    assert phi_k(4, w("583691724")) == w("583619247")
    assert phi_k(7, w("841567392")) == w("841567329")
    assert phi_k(6, w("841567329")) == w("841567392")
    assert phi_k(8, w("841567392")) == w("841567392")
    with pytest.raises(DomainError):
        phi_k(9, w("841567392"))


def test_beta_examples():
    assert beta_indices(5, w("83691724")) == [1, 3, 5]
    assert beta(5, w("83691724")) == w("38967124")
    assert beta_indices(4, w("1536")) == [1, 3]
    assert beta(6, w("73")) == w("37")
    assert beta(1, w("5367")) == w("5367")


def test_sigma_and_row_folds():
    assert sigma(5, 2, w("841567392")) == w("841563792")
    assert sigma(4, 2, w("841563792")) == w("841536792")
    assert sigma(3, 1, w("841567392")) == w("841567392")
    assert phi_ab(5, 0, w("841567392")) == w("841536729")
    assert phi_ab(3, 1, w("841536729")) == w("845163279")
    with pytest.raises(DomainError):
        sigma(8, 3, w("841567392"))
    with pytest.raises(DomainError):
        phi_ab(0, 1, w("841567392"))


def test_pipeline():
    assert phi_mu((4, 1, 1, 1, 1, 1), w("841567392")) == w("841567392")
    steps = phi_mu((4, 2, 2, 1), w("841567392"), trace=True)
    assert steps[0].label == "start" and steps[-1].word == w("845163279")
    assert [s.label for s in steps[-2:]] == ["phi_(5,0)", "phi_(3,1)"]
    assert [stats_fast(s.shape, s.word) for s in steps[-3:]] == [(4, 3), (3, 3), (2, 5)]
    assert all(inverse_descents(s.word) == {2, 3, 7} for s in steps)
    assert phi_mu((1, 1, 1), w("213")) == w("213")


def test_schedule_and_parameters():
    assert fold_parameters((4, 2, 2, 1)) == (4, 2, 1)
    assert [label for label, _, _ in fold_schedule((4, 2, 2, 1))] == [
        "phi_8", "phi_7", "phi_6", "phi_(5,0)", "phi_(3,1)",
    ]
    assert fold_schedule((4, 2, 2, 1))[-1][2] == (4, 2, 2, 1)
    with pytest.raises(UnsupportedShapeError):
        fold_parameters((3, 3))
    with pytest.raises(UnsupportedShapeError):
        phi_mu((3, 3), w("123456"))


words = st.lists(st.integers(1, 40), min_size=0, max_size=15, unique=True)


@given(words, st.integers(1, 40))
def test_gamma_round_trip(word, x):
    word = tuple(y for y in word if y != x)
    assert gamma_inverse(x, gamma(x, word)) == word


@given(st.permutations(list(range(1, 10))), st.integers(1, 8))
def test_phi_k_round_trip(p, k):
    p = tuple(p)
    v = phi_k(k, p)
    assert phi_k_inverse(k, v) == p
    assert inverse_descents(v) == inverse_descents(p)


@given(st.permutations(list(range(1, 10))), st.sampled_from([(1, 0), (2, 0), (3, 1), (5, 0), (1, 2), (3, 2)]))
def test_phi_ab_round_trip(p, ab):
    p = tuple(p)
    v = phi_ab(*ab, p)
    assert phi_ab_inverse(*ab, v) == p
    assert inverse_descents(v) == inverse_descents(p)


@pytest.mark.parametrize("mu", [(3, 2, 1), (4, 2), (2, 2, 1, 1), (5, 1), (2, 2, 2)])
def test_phi_mu_is_a_bijection(mu):
    n = sum(mu)
    images = set()
    for p in permutations(range(1, n + 1)):
        v = phi_mu(mu, p)
        assert phi_mu_inverse(mu, v) == p
        images.add(v)
    assert len(images) == len(list(permutations(range(n))))
