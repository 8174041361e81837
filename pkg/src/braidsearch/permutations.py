"""Permutations of {1, ..., n} in one-line notation.

A permutation is a tuple ``w`` of length n whose i-th entry (0-indexed
``w[i-1]``) is the image w(i).  Composition is function composition,

    compose(a, b)(i) == a(b(i)),

so ``compose(w, simple(n, i))`` swaps the entries of w at positions i, i+1
while ``compose(simple(n, i), w)`` swaps the values i, i+1.

Generators are indexed 1..n-1 throughout: ``simple(n, i)`` exchanges i and
i+1.  Words over the generators compose left to right, i.e.
``from_word(n, [a, b])`` is ``compose(simple(n, a), simple(n, b))``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterator

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity permutation on n letters.

    >>> identity(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Perm:
    """The adjacent transposition exchanging i and i+1.

    >>> simple(4, 2)
    (1, 3, 2, 4)
    """
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def longest_element(n: int) -> Perm:
    """The order-reversing permutation, the unique longest element.

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def validate(w: Perm) -> None:
    """Raise ValueError unless w is a bijection of {1..n} in one-line form."""
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")


def compose(a: Perm, b: Perm) -> Perm:
    """Function composition: compose(a, b)(i) == a(b(i)).

    >>> compose((2, 1, 4, 3), (1, 3, 2, 4))
    (2, 4, 1, 3)
    """
    return tuple(a[j - 1] for j in b)


def inverse(w: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((3, 1, 4, 2))
    (2, 4, 1, 3)
    """
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Coxeter length: the number of inversions of w.

    >>> length((4, 3, 2, 1))
    6
    >>> length(identity(5))
    0
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@lru_cache(maxsize=None)
def right_descents(w: Perm) -> frozenset[int]:
    """{i : length(compose(w, simple(n, i))) < length(w)}, i.e. w(i) > w(i+1).

    >>> sorted(right_descents((3, 2, 1, 4)))
    [1, 2]
    """
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


@lru_cache(maxsize=None)
def left_descents(w: Perm) -> frozenset[int]:
    """{i : length(compose(simple(n, i), w)) < length(w)}.

    Equals the right descent set of the inverse.

    >>> sorted(left_descents((2, 3, 1)))
    [1]
    """
    return right_descents(inverse(w))


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically least reduced word for w.

    Built greedily: the smallest left descent is always a valid first
    letter, and repeating on the remainder yields the lex-least word.

    >>> reduced_word((4, 3, 2, 1))
    (1, 2, 1, 3, 2, 1)
    >>> reduced_word(identity(3))
    ()
    """
    n = len(w)
    word = []
    while True:
        ld = left_descents(w)
        if not ld:
            return tuple(word)
        i = min(ld)
        word.append(i)
        w = compose(simple(n, i), w)


def from_word(n: int, letters) -> Perm:
    """Compose generators left to right: from_word(n, [a, b, ...]) = s_a s_b ...

    >>> from_word(4, [1, 2, 3, 1, 2, 1])
    (4, 3, 2, 1)
    """
    w = identity(n)
    for i in letters:
        w = compose(w, simple(n, i))
    return w


def symmetric_group(n: int) -> Iterator[Perm]:
    """All permutations of {1..n}, in lexicographic order."""
    return iter(_itertools_permutations(range(1, n + 1)))
