import doctest
import itertools
import random

import pytest

from braidsearch import permutations as perm
from conftest import all_reduced_words, oracle_compose, oracle_length, oracle_simple


def test_doctests():
    assert doctest.testmod(perm).failed == 0


def test_identity_simple_longest():
    assert perm.identity(4) == (1, 2, 3, 4)
    assert perm.simple(4, 1) == (2, 1, 3, 4)
    assert perm.simple(4, 3) == (1, 2, 4, 3)
    assert perm.longest_element(4) == (4, 3, 2, 1)
    assert perm.longest_element(2) == (2, 1)
    with pytest.raises(ValueError):
        perm.simple(4, 0)
    with pytest.raises(ValueError):
        perm.simple(4, 4)


def test_validate_rejects_non_permutations():
    with pytest.raises(ValueError):
        perm.validate((1, 1, 3))
    with pytest.raises(ValueError):
        perm.validate((0, 1, 2))
    perm.validate((3, 1, 2))


def test_compose_convention_frozen():
    # acts on positions right to left: (a compose b)(i) = a(b(i))
    assert perm.compose((2, 1, 4, 3), (1, 3, 2, 4)) == (2, 4, 1, 3)
    # and NOT the other order
    assert perm.compose((1, 3, 2, 4), (2, 1, 4, 3)) == (3, 1, 4, 2)


def test_compose_inverse_exhaustive_s4():
    e = perm.identity(4)
    for w in perm.symmetric_group(4):
        assert perm.compose(w, perm.inverse(w)) == e
        assert perm.compose(perm.inverse(w), w) == e
        assert perm.compose(w, e) == w
        for u in perm.symmetric_group(4):
            assert perm.compose(w, u) == oracle_compose(w, u)


def test_length_is_inversion_count():
    for w in perm.symmetric_group(4):
        assert perm.length(w) == oracle_length(w)
    rng = random.Random(3)
    for _ in range(50):
        w = tuple(rng.sample(range(1, 8), 7))
        assert perm.length(w) == oracle_length(w)
    assert perm.length(perm.longest_element(5)) == 10


def test_descents_match_length_drop():
    for n in (3, 4, 5):
        for w in perm.symmetric_group(n):
            right = {
                i
                for i in range(1, n)
                if oracle_length(oracle_compose(w, oracle_simple(n, i))) < oracle_length(w)
            }
            left = {
                i
                for i in range(1, n)
                if oracle_length(oracle_compose(oracle_simple(n, i), w)) < oracle_length(w)
            }
            assert perm.right_descents(w) == frozenset(right)
            assert perm.left_descents(w) == frozenset(left)


def test_reduced_word_is_lex_least_s4():
    for w in perm.symmetric_group(4):
        words = all_reduced_words(w)
        assert perm.reduced_word(w) == min(words)
        assert len(perm.reduced_word(w)) == perm.length(w)


def test_reduced_word_frozen_examples():
    assert perm.reduced_word(perm.longest_element(4)) == (1, 2, 1, 3, 2, 1)
    assert perm.reduced_word(perm.longest_element(3)) == (1, 2, 1)
    assert perm.reduced_word(perm.identity(4)) == ()
    assert perm.reduced_word((2, 1, 3, 4)) == (1,)


def test_from_word_round_trips():
    for n in (3, 4):
        for w in perm.symmetric_group(n):
            assert perm.from_word(n, perm.reduced_word(w)) == w
    # words compose left to right: w = s1 then s2
    assert perm.from_word(3, (1, 2)) == perm.compose(perm.simple(3, 1), perm.simple(3, 2))
    with pytest.raises(ValueError):
        perm.from_word(3, (3,))


def test_symmetric_group_enumeration():
    group = list(perm.symmetric_group(4))
    assert len(group) == 24
    assert len(set(group)) == 24
    assert group == sorted(group)
    assert group[0] == perm.identity(4)
    assert group[-1] == perm.longest_element(4)
    assert set(itertools.permutations(range(1, 4))) == set(perm.symmetric_group(3))
