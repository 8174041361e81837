"""The reduced Burau representation of the braid group on n strands.

Matrices are (n-1) x (n-1) over Z[v, v^-1] or (Z/m)[v, v^-1].  The
generator sigma_i maps to the identity with a band around row i replaced:
M[i][i] = -v^2 and M[i][i-1] = M[i][i+1] = -v where those columns exist
(1-based indices).  Its inverse is the same shape with v -> 1/v.

The half twist Delta maps to (-1)^(n+1) times the antidiagonal matrix
with entries v^n, so Delta^2 maps to the central scalar v^(2n), and
Delta^d has entries v^(n*d) on the diagonal (d even) or antidiagonal
(d odd, with sign (-1)^(n+1)).

A BurauContext caches the generator matrices, the Delta powers, and the
positive lifts of permutations, for one (n, modulus) pair.  Contexts are
filled lazily but never mutated observably, so they can be shared.
"""

from __future__ import annotations

from . import permutations as perm
from .bandkernel import BandMatrix, band_supported
from .braid import Braid
from .laurent import LaurentMatrix, LaurentPoly
from .permutations import Perm


class BurauContext:
    def __init__(self, n: int, modulus: int):
        if n < 2:
            raise ValueError("need at least 2 strands")
        self.n = n
        self.modulus = modulus
        self.size = n - 1
        self._lifts: dict[Perm, LaurentMatrix] = {}
        self._lift_bands: dict[Perm, BandMatrix] = {}
        self._delta_pows: dict[int, LaurentMatrix] = {}
        self._delta_pow_bands: dict[int, BandMatrix] = {}
        self._gens = {i: self._generator(i, inverse=False) for i in range(1, n)}
        self._gen_invs = {i: self._generator(i, inverse=True) for i in range(1, n)}

    def _generator(self, i: int, inverse: bool) -> LaurentMatrix:
        if not 1 <= i <= self.size:
            raise ValueError(f"generator index {i} out of range for n={self.n}")
        sign = -1 if inverse else 1
        rows = [
            {j: {0: 1}} if j != i else {}
            for j in range(1, self.size + 1)
        ]
        band = {i: {2 * sign: -1}}
        if i - 1 >= 1:
            band[i - 1] = {sign: -1}
        if i + 1 <= self.size:
            band[i + 1] = {sign: -1}
        rows[i - 1] = band
        return LaurentMatrix.from_entries(
            self.modulus,
            [[row.get(j, {}) for j in range(1, self.size + 1)] for row in rows],
        )

    def identity(self) -> LaurentMatrix:
        return LaurentMatrix.identity(self.modulus, self.size)

    def gen(self, i: int) -> LaurentMatrix:
        return self._gens[i]

    def gen_inv(self, i: int) -> LaurentMatrix:
        return self._gen_invs[i]

    def delta_pow(self, d: int) -> LaurentMatrix:
        """Closed form for the image of Delta^d."""
        cached = self._delta_pows.get(d)
        if cached is not None:
            return cached
        n, size = self.n, self.size
        mono = LaurentPoly.monomial(self.modulus, n * d, 1 if d % 2 == 0 else (-1) ** (n + 1))
        zero = LaurentPoly.zero(self.modulus)
        if d % 2 == 0:
            rows = [[mono if i == j else zero for j in range(size)] for i in range(size)]
        else:
            rows = [[mono if i + j == size - 1 else zero for j in range(size)] for i in range(size)]
        out = LaurentMatrix(self.modulus, rows)
        self._delta_pows[d] = out
        return out

    def delta(self) -> LaurentMatrix:
        return self.delta_pow(1)

    def delta_inv(self) -> LaurentMatrix:
        return self.delta_pow(-1)

    def lift(self, w: Perm) -> LaurentMatrix:
        """Image of the positive lift of a permutation (product over any
        reduced word; well-defined by the braid relations)."""
        cached = self._lifts.get(w)
        if cached is not None:
            return cached
        out = self.identity()
        for i in perm.reduced_word(w):
            out = out * self._gens[i]
        self._lifts[w] = out
        return out

    # band forms for the search hot path (modulus 2..255 only)

    def lift_band(self, w: Perm) -> BandMatrix:
        cached = self._lift_bands.get(w)
        if cached is None:
            cached = BandMatrix.from_laurent(self.lift(w))
            self._lift_bands[w] = cached
        return cached

    def delta_pow_band(self, d: int) -> BandMatrix:
        cached = self._delta_pow_bands.get(d)
        if cached is None:
            cached = BandMatrix.from_laurent(self.delta_pow(d))
            self._delta_pow_bands[d] = cached
        return cached

    def supports_band(self) -> bool:
        return band_supported(self.modulus)


def burau_of_letters(ctx: BurauContext, letters) -> LaurentMatrix:
    """Evaluate a signed Artin word letter by letter (exact route)."""
    out = ctx.identity()
    for a in letters:
        out = out * (ctx.gen(a) if a > 0 else ctx.gen_inv(-a))
    return out


def burau_of_braid(ctx: BurauContext, b: Braid) -> LaurentMatrix:
    """Evaluate a normal form: Delta^inf times the factor lifts."""
    if b.n != ctx.n:
        raise ValueError(f"braid has {b.n} strands, context {ctx.n}")
    out = ctx.delta_pow(b.inf)
    for w in b.factors:
        out = out * ctx.lift(w)
    return out


def kernel_check(ctx: BurauContext, b: Braid) -> bool:
    """Is the braid's Burau matrix the identity?

    Meaningful over Z/m; over Z a nontrivial braid passing this check
    would be a faithfulness counterexample, so callers report that case
    distinctly.
    """
    return burau_of_braid(ctx, b).is_identity


def positive_kernel_candidate_check(ctx: BurauContext, b: Braid) -> int | None:
    """For a positive normal form, the d with burau(b) == Delta^d, if any.

    When this returns d, the braid Delta^-d * b is a kernel element.  The
    exponent sum of b must be d * length(w_0) because every generator
    matrix has determinant -v^2; that divisibility is checked first to
    skip the matrix comparison in the common case.
    """
    if b.inf != 0:
        raise ValueError("candidate check expects a positive braid (inf == 0)")
    half = perm.length(perm.longest_element(b.n))
    e = b.exponent_sum()
    if e % half:
        return None
    d = e // half
    if burau_of_braid(ctx, b) == ctx.delta_pow(d):
        return d
    return None
