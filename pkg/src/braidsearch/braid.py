"""Braid-group elements in left-greedy (Garside) normal form.

A braid on n strands is stored as

    Delta^inf . w_1 w_2 ... w_l

where Delta is the positive half twist, each w_k is (the positive lift of)
a nonidentity permutation, w_1 != w_0, and consecutive factors satisfy the
normality condition R(w_k) >= L(w_{k+1}) on descent sets.  This form is
unique, so equality of Braid values is equality in the braid group.

Artin generators use the same 1-based indices as permutations: the letter
i stands for the elementary crossing sigma_i, the letter -i for its
inverse.  Words multiply left to right.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from . import permutations as perm
from .permutations import Perm


@dataclass(frozen=True)
class Braid:
    """A braid in left-greedy normal form: Delta^inf times positive factors."""

    n: int
    inf: int
    factors: tuple[Perm, ...]

    def __post_init__(self):
        assert (err := self._normality_error()) is None, err

    def _normality_error(self) -> str | None:
        if self.n < 2:
            return f"need at least 2 strands, got {self.n}"
        w0 = perm.longest_element(self.n)
        ident = perm.identity(self.n)
        for w in self.factors:
            if len(w) != self.n or sorted(w) != list(ident):
                return f"factor {w!r} is not a permutation of 1..{self.n}"
            if w == ident:
                return "identity factor"
            if w == w0:
                return "longest-element factor (belongs in inf)"
        for x, y in zip(self.factors, self.factors[1:]):
            if not perm.left_descents(y) <= perm.right_descents(x):
                return f"pair {x!r}, {y!r} is not left-weighted"
        return None

    def check(self) -> "Braid":
        """Raise ValueError if the normal-form invariants fail; else self."""
        err = self._normality_error()
        if err is not None:
            raise ValueError(err)
        return self

    @property
    def garside_length(self) -> int:
        return len(self.factors)

    def exponent_sum(self) -> int:
        """Signed Artin letter count; equals inf*length(w_0) + sum of factor lengths."""
        half = perm.length(perm.longest_element(self.n))
        return self.inf * half + sum(perm.length(w) for w in self.factors)

    def prefix(self, k: int) -> "Braid":
        """The Garside prefix Delta^inf w_1 ... w_k."""
        return Braid(self.n, self.inf, self.factors[:k])

    def append(self, u: Perm) -> "Braid":
        """Extend by one factor; u must be a valid Garside suffix."""
        return Braid(self.n, self.inf, self.factors + (u,))


def trivial(n: int) -> Braid:
    return Braid(n, 0, ())


# ---------------------------------------------------------------------------
# normal form computation


def _left_weight_pair(n: int, x: Perm, y: Perm) -> tuple[Perm, Perm, bool]:
    """Slide generators from y into x until L(y) <= R(x); product preserved."""
    moved = False
    while True:
        diff = perm.left_descents(y) - perm.right_descents(x)
        if not diff:
            return x, y, moved
        s = perm.simple(n, min(diff))
        x = perm.compose(x, s)
        y = perm.compose(s, y)
        moved = True


def normalize_factors(n: int, factors: list[Perm]) -> tuple[int, list[Perm]]:
    """Left-greedy normalization of a (possibly invalid) factor sequence.

    Bubble passes make every adjacent pair left-weighted; leading w_0
    factors are then absorbed into the returned Delta power and trailing
    identities dropped.
    """
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            x, y, moved = _left_weight_pair(n, factors[j], factors[j + 1])
            if moved:
                factors[j], factors[j + 1] = x, y
                changed = True
    w0 = perm.longest_element(n)
    ident = perm.identity(n)
    d = 0
    while factors and factors[0] == w0:
        d += 1
        factors.pop(0)
    while factors and factors[-1] == ident:
        factors.pop()
    return d, factors


def derive_strands(letters) -> int:
    """Smallest strand count on which a word makes sense: 1 + max |letter|."""
    if not letters:
        raise ValueError("cannot derive strand count from an empty word")
    return max(abs(a) for a in letters) + 1


def gnf_from_artin(letters, n: int | None = None) -> Braid:
    """Normal form of a signed Artin word.

    Each positive letter i contributes the factor s_i; each negative
    letter -i contributes Delta^{-1} times the lift of w_0 s_i.  The Delta
    powers are commuted to the front (conjugation by Delta acts on a
    permutation w as w_0 w w_0) and the remaining positive factor sequence
    is normalized.

    >>> gnf_from_artin([1, 2, 3, 1, 2, 1]).inf
    1
    >>> gnf_from_artin([1, -2], n=3)
    Braid(n=3, inf=-1, factors=((1, 3, 2), (3, 1, 2)))
    """
    letters = list(letters)
    if n is None:
        n = derive_strands(letters)
    w0 = perm.longest_element(n)
    factors: list[Perm] = []
    delta_pows: list[int] = []
    for a in letters:
        if a == 0 or abs(a) >= n:
            raise ValueError(f"letter {a} out of range for n={n}")
        s = perm.simple(n, abs(a))
        if a > 0:
            factors.append(s)
            delta_pows.append(0)
        else:
            factors.append(perm.compose(w0, s))
            delta_pows.append(-1)
    # walk from the right, conjugating each factor past the Delta powers
    # that follow it; tau(w) = w_0 w w_0 is an involution
    dp = 0
    for j in range(len(factors) - 1, -1, -1):
        if dp % 2:
            factors[j] = perm.compose(w0, perm.compose(factors[j], w0))
        dp += delta_pows[j]
    d, normalized = normalize_factors(n, factors)
    return Braid(n, dp + d, tuple(normalized))


def artin_letters(b: Braid) -> list[int]:
    """A defining Artin word: inf copies of the w_0 word, then factor words.

    For negative inf the w_0 word is inverted (reversed, letters negated).
    """
    w0_word = perm.reduced_word(perm.longest_element(b.n))
    if b.inf >= 0:
        out = list(w0_word) * b.inf
    else:
        out = [-i for i in reversed(w0_word)] * (-b.inf)
    for w in b.factors:
        out.extend(perm.reduced_word(w))
    return out


# ---------------------------------------------------------------------------
# Garside suffixes and prefixes


@lru_cache(maxsize=None)
def _suffixes_for_descents(n: int, descents: frozenset[int]) -> tuple[Perm, ...]:
    ident = perm.identity(n)
    w0 = perm.longest_element(n)
    return tuple(
        sorted(
            u
            for u in perm.symmetric_group(n)
            if u != ident and u != w0 and perm.left_descents(u) <= descents
        )
    )


def garside_suffixes(b: Braid) -> tuple[Perm, ...]:
    """All u such that b.append(u) is again a normal form.

    For a braid with factors these are the nonidentity u with
    L(u) <= R(last factor); the trivial braid admits every u other than
    the identity and w_0.
    """
    if b.factors:
        descents = perm.right_descents(b.factors[-1])
    else:
        descents = frozenset(range(1, b.n))
    return _suffixes_for_descents(b.n, descents)


def garside_prefixes(b: Braid) -> list[Braid]:
    """The prefixes Delta^inf w_1 ... w_k for k = 0..garside_length."""
    return [b.prefix(k) for k in range(b.garside_length + 1)]


# ---------------------------------------------------------------------------
# serialization

_WORD_TOKEN = re.compile(r"[+-]?\d+")


def parse_artin_text(text: str) -> list[int]:
    """Parse a word file: signed integers separated by commas or whitespace.

    Blank lines and '#' comments are ignored.  Zero is rejected.
    """
    letters = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for chunk in line.replace(",", " ").split():
            if not _WORD_TOKEN.fullmatch(chunk):
                raise ValueError(f"bad word token {chunk!r}")
            a = int(chunk)
            if a == 0:
                raise ValueError("letter 0 is not a generator")
            letters.append(a)
    return letters


def format_artin_text(letters, per_line: int = 22) -> str:
    lines = []
    letters = list(letters)
    for i in range(0, len(letters), per_line):
        lines.append(", ".join(str(a) for a in letters[i : i + per_line]))
    return "\n".join(lines) + "\n"


def braid_to_json_dict(b: Braid) -> dict:
    return {
        "n": b.n,
        "inf": b.inf,
        "factors": [list(perm.reduced_word(w)) for w in b.factors],
    }


def braid_from_json_dict(data: dict) -> Braid:
    try:
        n = int(data["n"])
        inf = int(data["inf"])
        words = data["factors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad braid JSON: {exc}") from exc
    factors = tuple(perm.from_word(n, word) for word in words)
    for word, w in zip(words, factors):
        if len(word) != perm.length(w):
            raise ValueError(f"factor word {word!r} is not reduced")
    return Braid(n, inf, factors).check()


def braid_to_json(b: Braid) -> str:
    return json.dumps(braid_to_json_dict(b), separators=(",", ":"))


def load_braid_file(path, n: int | None = None) -> Braid:
    """Read a braid from a JSON file or an Artin word file.

    Word files carry no strand count; it is derived from the letters
    unless n is given.
    """
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return braid_from_json_dict(json.loads(text))
    return gnf_from_artin(parse_artin_text(text), n=n)
