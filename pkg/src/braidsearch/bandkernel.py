"""Dense band representation of mod-m Laurent matrices.

A BandMatrix holds the same data as a LaurentMatrix over Z/m (2 <= m <=
255) as a uint8 coefficient stack plus a valuation offset: coeffs[t, i, j]
is the residue of the coefficient of v^(val + t) in entry (i, j).  The
first and last slices are always nonzero, so projlen is width - 1.

Products go through a convolution kernel.  The compiled Cython kernel is
picked at import when available; otherwise (or when BRAIDSEARCH_PURE is
set) the numpy fallback is used.  Both implement the identical contract
and are cross-checked against the exact dict arithmetic in the tests.
"""

from __future__ import annotations

import os

import numpy as np

from .laurent import LaurentMatrix, LaurentPoly

if os.environ.get("BRAIDSEARCH_PURE"):
    from . import _bandkernel_py as _impl
else:
    try:
        from . import _bandkernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _bandkernel_py as _impl

MAX_BAND_MODULUS = 255


def backend_name() -> str:
    """Which convolution kernel is active: 'compiled' or 'python'."""
    return _impl.BACKEND


def band_supported(modulus: int) -> bool:
    return 2 <= modulus <= MAX_BAND_MODULUS


class BandMatrix:
    __slots__ = ("modulus", "val", "coeffs")

    def __init__(self, modulus: int, val: int, coeffs: np.ndarray):
        if not band_supported(modulus):
            raise ValueError(f"band representation needs 2 <= m <= {MAX_BAND_MODULUS}")
        if coeffs.ndim != 3 or coeffs.shape[1] != coeffs.shape[2]:
            raise ValueError("coeffs must have shape (width, size, size)")
        if coeffs.dtype != np.uint8:
            raise ValueError("coeffs must be uint8 residues")
        if coeffs.shape[0] == 0 or not coeffs[0].any() or not coeffs[-1].any():
            raise ValueError("band must be trimmed and nonzero")
        self.modulus = modulus
        self.val = val
        self.coeffs = coeffs

    @property
    def size(self) -> int:
        return self.coeffs.shape[1]

    @property
    def projlen(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def deg(self) -> int:
        return self.val + self.projlen

    @classmethod
    def identity(cls, modulus: int, size: int) -> "BandMatrix":
        return cls(modulus, 0, np.eye(size, dtype=np.uint8)[np.newaxis])

    @classmethod
    def from_laurent(cls, m: LaurentMatrix) -> "BandMatrix":
        if m.is_zero:
            raise ValueError("zero matrix has no band form")
        val, deg = m.val, m.deg
        coeffs = np.zeros((deg - val + 1, m.size, m.size), dtype=np.uint8)
        for i, row in enumerate(m.rows):
            for j, p in enumerate(row):
                for e, c in p.terms.items():
                    coeffs[e - val, i, j] = c
        return cls(m.modulus, val, coeffs)

    def to_laurent(self) -> LaurentMatrix:
        size = self.size
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                terms = {
                    self.val + t: int(c) for t, c in enumerate(self.coeffs[:, i, j]) if c
                }
                row.append(LaurentPoly(self.modulus, terms))
            rows.append(row)
        return LaurentMatrix(self.modulus, rows)

    def __mul__(self, other) -> "BandMatrix":
        if not isinstance(other, BandMatrix):
            return NotImplemented
        if other.modulus != self.modulus or other.size != self.size:
            raise ValueError("band shape or modulus mismatch")
        raw = _impl.convolve_mod(self.coeffs, other.coeffs, self.modulus)
        support = np.flatnonzero(raw.reshape(raw.shape[0], -1).any(axis=1))
        if support.size == 0:
            raise ValueError("product vanished mod m; operands were not invertible")
        lo, hi = int(support[0]), int(support[-1])
        return BandMatrix(self.modulus, self.val + other.val + lo, raw[lo : hi + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BandMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.val == other.val
            and self.coeffs.shape == other.coeffs.shape
            and bool((self.coeffs == other.coeffs).all())
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"BandMatrix(mod={self.modulus}, size={self.size}, val={self.val}, projlen={self.projlen})"
