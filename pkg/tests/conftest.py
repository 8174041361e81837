"""Shared brute-force oracles, kept independent of the package internals.

Everything here recomputes from first principles (inversion counting,
exhaustive word enumeration) so the package functions are checked against
a second route, not against themselves.
"""

import functools
import random

import pytest


def oracle_compose(a, b):
    # (a after b)(i) = a(b(i)), tuples are 1-based one-line notation
    return tuple(a[b[i] - 1] for i in range(len(b)))


def oracle_simple(n, i):
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def oracle_length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@functools.cache
def all_reduced_words(w):
    """Every reduced word of w, via length-decreasing right multiplications."""
    n = len(w)
    if oracle_length(w) == 0:
        return frozenset({()})
    out = set()
    for i in range(1, n):
        shorter = oracle_compose(w, oracle_simple(n, i))
        if oracle_length(shorter) < oracle_length(w):
            for rest in all_reduced_words(shorter):
                out.add(rest + (i,))
    return frozenset(out)


def random_artin_letters(rng, n, count):
    """Nonzero letters in -(n-1)..-1, 1..n-1."""
    letters = []
    for _ in range(count):
        i = rng.randrange(1, n)
        letters.append(i if rng.random() < 0.5 else -i)
    return letters


@pytest.fixture
def rng():
    return random.Random(20260815)
