"""Sparse Laurent polynomials and square matrices over Z or Z/m.

Coefficients live in Z (modulus 0, arbitrary precision) or in Z/m for any
modulus m >= 2, composite allowed.  A polynomial is a map from exponent to
nonzero coefficient; the zero polynomial is the empty map.  Over Z/m
coefficients are stored as canonical residues in 1..m-1.

deg and val are the largest and smallest exponent with nonzero
coefficient; both reject zero input, as do the matrix versions (a matrix
of Burau factors is always invertible, so a zero matrix signals a bug).
projlen(A) = deg(A) - val(A) is the projective length: 0 for monomial
multiples of constant matrices, and invariant under multiplying A by any
central monomial.
"""

from __future__ import annotations

import json
from typing import Iterable


def _check_modulus(modulus: int) -> int:
    if modulus < 0 or modulus == 1:
        raise ValueError(f"modulus must be 0 (meaning Z) or >= 2, got {modulus}")
    return modulus


class LaurentPoly:
    """An element of Z[v, v^-1] or (Z/m)[v, v^-1]."""

    __slots__ = ("modulus", "terms")

    def __init__(self, modulus: int, terms: dict[int, int] | None = None):
        _check_modulus(modulus)
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                c = c % modulus if modulus else c
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, modulus: int) -> "LaurentPoly":
        return cls(modulus, {})

    @classmethod
    def one(cls, modulus: int) -> "LaurentPoly":
        return cls(modulus, {0: 1})

    @classmethod
    def monomial(cls, modulus: int, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls(modulus, {exponent: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    @property
    def val(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.modulus, {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
        return other

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.modulus, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.modulus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.modulus, terms)

    __rmul__ = __mul__

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly(self.modulus, {e + k: c for e, c in self.terms.items()})

    def reduce_mod(self, modulus: int) -> "LaurentPoly":
        """Image under Z -> Z/m (or the identity when moduli already agree)."""
        if modulus == self.modulus:
            return self
        if self.modulus != 0:
            raise ValueError(f"cannot reduce mod {self.modulus} to mod {modulus}")
        return LaurentPoly(modulus, self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(self.modulus, {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*v")
            else:
                bits.append(f"{c}*v^{e}")
        return " + ".join(bits)


class LaurentMatrix:
    """A square matrix of LaurentPoly values with a common modulus."""

    __slots__ = ("modulus", "size", "rows")

    def __init__(self, modulus: int, rows: Iterable[Iterable[LaurentPoly]]):
        _check_modulus(modulus)
        rows = tuple(tuple(row) for row in rows)
        size = len(rows)
        for row in rows:
            if len(row) != size:
                raise ValueError("matrix must be square")
            for p in row:
                if not isinstance(p, LaurentPoly) or p.modulus != modulus:
                    raise ValueError("entries must be LaurentPoly with the matrix modulus")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrix is immutable")

    @classmethod
    def identity(cls, modulus: int, size: int) -> "LaurentMatrix":
        one = LaurentPoly.one(modulus)
        zero = LaurentPoly.zero(modulus)
        return cls(modulus, [[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def from_entries(cls, modulus: int, entries) -> "LaurentMatrix":
        """Build from nested {exp: coeff} dicts (or LaurentPoly values)."""
        rows = [
            [e if isinstance(e, LaurentPoly) else LaurentPoly(modulus, e) for e in row]
            for row in entries
        ]
        return cls(modulus, rows)

    def __mul__(self, other) -> "LaurentMatrix":
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if other.modulus != self.modulus or other.size != self.size:
            raise ValueError("matrix shape or modulus mismatch")
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                terms: dict[int, int] = {}
                for k in range(n):
                    for e1, c1 in self.rows[i][k].terms.items():
                        for e2, c2 in other.rows[k][j].terms.items():
                            e = e1 + e2
                            terms[e] = terms.get(e, 0) + c1 * c2
                row.append(LaurentPoly(self.modulus, terms))
            rows.append(row)
        return LaurentMatrix(self.modulus, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.size == other.size
            and all(
                self.rows[i][j] == other.rows[i][j]
                for i in range(self.size)
                for j in range(self.size)
            )
        )

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for row in self.rows for p in row)

    @property
    def deg(self) -> int:
        exps = [p.deg for row in self.rows for p in row if not p.is_zero]
        if not exps:
            raise ValueError("zero matrix has no degree")
        return max(exps)

    @property
    def val(self) -> int:
        exps = [p.val for row in self.rows for p in row if not p.is_zero]
        if not exps:
            raise ValueError("zero matrix has no valuation")
        return min(exps)

    @property
    def projlen(self) -> int:
        return self.deg - self.val

    @property
    def is_identity(self) -> bool:
        one = LaurentPoly.one(self.modulus)
        return all(
            self.rows[i][j] == (one if i == j else 0)
            for i in range(self.size)
            for j in range(self.size)
        )

    def scaled(self, p: LaurentPoly) -> "LaurentMatrix":
        return LaurentMatrix(self.modulus, [[p * e for e in row] for row in self.rows])

    def reduce_mod(self, modulus: int) -> "LaurentMatrix":
        if modulus == self.modulus:
            return self
        return LaurentMatrix(modulus, [[p.reduce_mod(modulus) for p in row] for row in self.rows])

    def column_deg(self, j: int) -> int:
        exps = [row[j].deg for row in self.rows if not row[j].is_zero]
        if not exps:
            raise ValueError("zero column has no degree")
        return max(exps)

    def column_val(self, j: int) -> int:
        exps = [row[j].val for row in self.rows if not row[j].is_zero]
        if not exps:
            raise ValueError("zero column has no valuation")
        return min(exps)

    def to_json_dict(self) -> dict:
        return {
            "m": self.modulus,
            "size": self.size,
            "entries": [
                [[[e, p.terms[e]] for e in sorted(p.terms)] for p in row] for row in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "LaurentMatrix":
        try:
            modulus = int(data["m"])
            size = int(data["size"])
            entries = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad matrix JSON: {exc}") from exc
        if len(entries) != size or any(len(row) != size for row in entries):
            raise ValueError("matrix JSON entries do not match declared size")
        rows = [
            [LaurentPoly(modulus, {int(e): int(c) for e, c in pairs}) for pairs in row]
            for row in entries
        ]
        return cls(modulus, rows)

    @classmethod
    def from_json(cls, text: str) -> "LaurentMatrix":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"LaurentMatrix(mod={self.modulus}, size={self.size})"
