import doctest
import itertools
import json
import random

import pytest

from braidsearch import braid as bm
from braidsearch import permutations as perm
from conftest import oracle_compose, oracle_length, oracle_simple, random_artin_letters


def test_doctests():
    assert doctest.testmod(bm).failed == 0


def test_trivial_and_prefix():
    t = bm.trivial(4)
    assert t.inf == 0 and t.factors == () and t.garside_length == 0
    assert t.exponent_sum() == 0
    b = bm.gnf_from_artin([1, 2, 1], n=3)
    assert b.prefix(0) == bm.Braid(3, b.inf, ())
    assert b.prefix(1).factors == b.factors[:1]


def test_gnf_frozen_examples():
    # the half twist itself
    delta_word = perm.reduced_word(perm.longest_element(4))
    b = bm.gnf_from_artin(delta_word, n=4)
    assert b.inf == 1 and b.factors == ()

    # a single generator
    b = bm.gnf_from_artin([2], n=4)
    assert b.inf == 0 and b.factors == (perm.simple(4, 2),)

    # sigma_1 sigma_1 does not merge
    b = bm.gnf_from_artin([1, 1], n=3)
    assert b.inf == 0 and b.factors == (perm.simple(3, 1), perm.simple(3, 1))

    # sigma_1 sigma_2 merges into one factor in B_3
    b = bm.gnf_from_artin([1, 2], n=3)
    assert b.inf == 0 and b.factors == (perm.from_word(3, (1, 2)),)

    # a single inverse generator costs one delta: delta sigma_1^-1 = s1 s2
    b = bm.gnf_from_artin([-1], n=3)
    assert b.inf == -1 and b.factors == (perm.from_word(3, (1, 2)),)


def test_gnf_normality_invariants():
    rng = random.Random(11)
    for n in (3, 4, 5):
        w0 = perm.longest_element(n)
        for _ in range(40):
            letters = random_artin_letters(rng, n, rng.randrange(0, 25))
            b = bm.gnf_from_artin(letters, n=n)
            b.check()
            assert b.n == n
            for w in b.factors:
                assert w != perm.identity(n) and w != w0
            if b.factors:
                assert b.factors[0] != w0
            for x, y in zip(b.factors, b.factors[1:]):
                assert perm.right_descents(x) >= perm.left_descents(y)
            assert b.exponent_sum() == sum(1 if a > 0 else -1 for a in letters)


def test_exponent_sum_counts_signed_letters():
    b = bm.gnf_from_artin([1, -2, -2, 3, 1], n=4)
    assert b.exponent_sum() == 1
    assert b.exponent_sum() == b.inf * 6 + sum(perm.length(w) for w in b.factors)


def test_braid_relations_normalize_equal():
    rng = random.Random(5)
    for n in (3, 4, 5):
        pairs = [(i, j) for i in range(1, n) for j in range(1, n) if i < j]
        for i, j in pairs:
            lhs = [i, j, i] if j == i + 1 else [i, j]
            rhs = [j, i, j] if j == i + 1 else [j, i]
            for _ in range(10):
                pre = random_artin_letters(rng, n, rng.randrange(0, 8))
                post = random_artin_letters(rng, n, rng.randrange(0, 8))
                assert bm.gnf_from_artin(pre + lhs + post, n=n) == bm.gnf_from_artin(
                    pre + rhs + post, n=n
                )


def test_inverse_word_cancels():
    rng = random.Random(8)
    for n in (3, 4):
        for _ in range(30):
            letters = random_artin_letters(rng, n, rng.randrange(0, 12))
            undo = [-a for a in reversed(letters)]
            assert bm.gnf_from_artin(letters + undo, n=n) == bm.trivial(n)


def test_round_trip_artin_letters_exhaustive_small():
    # every normal form with up to 3 factors and small delta power survives
    # the trip through its Artin word
    for n in (3, 4):
        perms = [
            w
            for w in perm.symmetric_group(n)
            if w != perm.identity(n) and w != perm.longest_element(n)
        ]
        chains = [()]
        chains += [(x,) for x in perms]
        chains += [
            (x, y)
            for x in perms
            for y in perms
            if perm.right_descents(x) >= perm.left_descents(y)
        ]
        if n == 3:
            chains += [
                (x, y, z)
                for x in perms
                for y in perms
                for z in perms
                if perm.right_descents(x) >= perm.left_descents(y)
                and perm.right_descents(y) >= perm.left_descents(z)
            ]
        for inf in (-2, -1, 0, 1, 2):
            for factors in chains:
                if factors and factors[0] == perm.longest_element(n):
                    continue
                b = bm.Braid(n, inf, tuple(factors))
                assert bm.gnf_from_artin(bm.artin_letters(b), n=n) == b


def test_normalize_factors_matches_left_greedy_oracle():
    # brute force: a product of permutation lifts equals the normal form's
    # product, checked in the symmetric group with delta bookkeeping
    rng = random.Random(13)
    for n in (3, 4):
        w0 = perm.longest_element(n)
        for _ in range(40):
            raw = [rng.choice(list(perm.symmetric_group(n))) for _ in range(rng.randrange(0, 6))]
            d, factors = bm.normalize_factors(n, list(raw))
            total_len = sum(perm.length(w) for w in raw)
            assert d * perm.length(w0) + sum(perm.length(w) for w in factors) == total_len
            bm.Braid(n, d, tuple(factors)).check()


def test_braid_check_rejects_bad_sequences():
    s1, s2 = perm.simple(3, 1), perm.simple(3, 2)
    with pytest.raises((ValueError, AssertionError)):
        bm.Braid(3, 0, (s1, s2))  # R(s1) = {1} does not cover L(s2) = {2}
    with pytest.raises((ValueError, AssertionError)):
        bm.Braid(3, 0, (perm.identity(3),))
    with pytest.raises((ValueError, AssertionError)):
        bm.Braid(3, 0, (perm.longest_element(3), s1))
    with pytest.raises((ValueError, AssertionError)):
        bm.Braid(3, 0, (s1, (2, 1)))  # wrong strand count inside factors


def test_garside_suffixes_examples():
    # B_3, last factor s1: exactly s1 and s1 s2 may follow
    s1 = perm.simple(3, 1)
    b = bm.Braid(3, 0, (s1,))
    assert bm.garside_suffixes(b) == (s1, perm.from_word(3, (1, 2)))

    # the empty braid accepts every factor except identity and w0
    assert len(bm.garside_suffixes(bm.trivial(3))) == 4
    assert len(bm.garside_suffixes(bm.trivial(4))) == 22


def test_garside_suffixes_against_descent_oracle():
    # valid suffixes are the u with L(u) inside R(last), by brute descent test
    rng = random.Random(2)
    for n in (3, 4):
        for _ in range(15):
            letters = [rng.randrange(1, n) for _ in range(rng.randrange(0, 8))]
            b = bm.gnf_from_artin(letters, n=n)
            last = b.factors[-1] if b.factors else perm.longest_element(n)
            right = {
                i
                for i in range(1, n)
                if oracle_length(oracle_compose(last, oracle_simple(n, i)))
                < oracle_length(last)
            }
            expected = sorted(
                u
                for u in perm.symmetric_group(n)
                if u != perm.identity(n)
                and u != perm.longest_element(n)
                and all(
                    i in right
                    for i in range(1, n)
                    if oracle_length(oracle_compose(oracle_simple(n, i), u))
                    < oracle_length(u)
                )
            )
            got = bm.garside_suffixes(b)
            assert list(got) == expected
            for u in got:
                b.append(u).check()


def test_append_extends_normal_form():
    b = bm.Braid(3, -2, (perm.simple(3, 2),))
    u = perm.simple(3, 2)
    b2 = b.append(u)
    assert b2.factors == b.factors + (u,) and b2.inf == b.inf
    with pytest.raises((ValueError, AssertionError)):
        b.append(perm.simple(3, 1))


def test_garside_prefixes():
    b = bm.gnf_from_artin([1, 2, 1, 1, 2, 1], n=3)
    prefixes = bm.garside_prefixes(b)
    assert len(prefixes) == b.garside_length + 1
    assert prefixes[0] == bm.Braid(3, b.inf, ())
    assert prefixes[-1] == b
    for p in prefixes:
        p.check()


def test_parse_and_format_artin_text():
    text = "# a comment\n1, 2 -1\n\t3\n-2, # trailing\n1\n"
    assert bm.parse_artin_text(text) == [1, 2, -1, 3, -2, 1]
    letters = list(range(1, 30)) + [-5]
    assert bm.parse_artin_text(bm.format_artin_text(letters)) == letters
    with pytest.raises(ValueError):
        bm.parse_artin_text("1 0 2")
    with pytest.raises(ValueError):
        bm.parse_artin_text("1 x 2")
    with pytest.raises(ValueError):
        bm.parse_artin_text("1.5")


def test_derive_strands():
    assert bm.derive_strands([1, -2, 1]) == 3
    assert bm.derive_strands([3]) == 4
    with pytest.raises(ValueError):
        bm.derive_strands([])


def test_json_round_trip():
    rng = random.Random(4)
    for n in (3, 4):
        for _ in range(20):
            b = bm.gnf_from_artin(random_artin_letters(rng, n, rng.randrange(0, 15)), n=n)
            data = json.loads(bm.braid_to_json(b))
            assert bm.braid_from_json_dict(data) == b
    # factor words are stored reduced; a non-reduced word is rejected
    with pytest.raises(ValueError):
        bm.braid_from_json_dict({"n": 3, "inf": 0, "factors": [[1, 1]]})
    with pytest.raises((ValueError, KeyError)):
        bm.braid_from_json_dict({"n": 3, "factors": [[1]]})


def test_load_braid_file(tmp_path):
    b = bm.gnf_from_artin([1, -2, 1, 1], n=3)
    json_path = tmp_path / "b.braid.json"
    json_path.write_text(bm.braid_to_json(b) + "\n")
    assert bm.load_braid_file(json_path) == b

    word_path = tmp_path / "b.word"
    word_path.write_text("# word input\n1 -2 1 1\n")
    assert bm.load_braid_file(word_path) == b
    assert bm.load_braid_file(word_path, n=4) == bm.gnf_from_artin([1, -2, 1, 1], n=4)


def test_two_strand_group_is_infinite_cyclic():
    assert bm.gnf_from_artin([1, 1, 1], n=2) == bm.Braid(2, 3, ())
    assert bm.gnf_from_artin([1, -1], n=2) == bm.trivial(2)
    assert bm.garside_suffixes(bm.trivial(2)) == ()
