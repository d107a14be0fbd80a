"""Square matrices over a coefficient algebra (Cohn or Leavitt elements).

The entry type only needs ring operations, `is_zero`, `zero_like`, and
`trace`; both element classes in this package provide them, so the same
matrix code serves the plain algebra and its quotient.
"""

from __future__ import annotations

import json
from typing import List, Sequence

from .coeffs import FieldSpec, Scalar
from .cohn import parse_element
from .leavitt import normal_form

__all__ = ["MatrixElement", "unit", "identity_matrix", "matrix_from_strings"]


class MatrixElement:
    """A d x d matrix with entries in one algebra, stored densely."""

    __slots__ = ("d", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in entries)
        d = len(rows)
        if d < 1 or any(len(r) != d for r in rows):
            raise ValueError("entries must form a non-empty square array")
        first = rows[0][0]
        for r in rows:
            for e in r:
                if e.spec != first.spec or e.n != first.n:
                    raise ValueError("entries must share one field and alphabet")
        self.d = d
        self.entries = rows

    @property
    def spec(self) -> FieldSpec:
        return self.entries[0][0].spec

    @property
    def n(self) -> int:
        return self.entries[0][0].n

    def _check(self, other: "MatrixElement") -> None:
        if not isinstance(other, MatrixElement):
            raise TypeError(f"expected MatrixElement, got {type(other).__name__}")
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")
        if other.spec != self.spec or other.n != self.n:
            raise ValueError("mismatched field or alphabet")

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        return MatrixElement(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "MatrixElement":
        return MatrixElement([[-e for e in row] for row in self.entries])

    def __sub__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        return self + (-other)

    def scale(self, s: Scalar) -> "MatrixElement":
        return MatrixElement([[e * s for e in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return MatrixElement([[e * other for e in row] for row in self.entries])
        self._check(other)
        d = self.d
        rows: List[List] = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = self.entries[0][0].zero_like()
                for k in range(d):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return MatrixElement(rows)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def bracket(self, other: "MatrixElement") -> "MatrixElement":
        return self * other - other * self

    def trace(self) -> Scalar:
        """Sum of the entry traces along the diagonal."""
        total = self.entries[0][0].trace()
        for i in range(1, self.d):
            total = total + self.entries[i][i].trace()
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixElement)
            and self.d == other.d
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def to_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def __str__(self) -> str:
        return json.dumps(self.to_strings())

    def __repr__(self) -> str:
        return f"<MatrixElement d={self.d} n={self.n} over {self.spec}: {self}>"


def unit(element, i: int, j: int, d: int) -> MatrixElement:
    """The matrix carrying the given element at (i, j) and zero elsewhere.

    Indices are 1-based.
    """
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"unit position ({i}, {j}) outside a {d} x {d} matrix")
    zero = element.zero_like()
    return MatrixElement(
        [
            [element if (r, c) == (i - 1, j - 1) else zero for c in range(d)]
            for r in range(d)
        ]
    )


def identity_matrix(one, d: int) -> MatrixElement:
    """The d x d identity, built from the algebra identity element."""
    zero = one.zero_like()
    return MatrixElement(
        [[one if r == c else zero for c in range(d)] for r in range(d)]
    )


def matrix_from_strings(
    rows: Sequence[Sequence[str]], n: int, spec: FieldSpec, leavitt: bool = True
) -> MatrixElement:
    """Build a matrix from an array of canonical element strings."""
    parsed = [[parse_element(text, n, spec) for text in row] for row in rows]
    if leavitt:
        parsed = [[normal_form(e) for e in row] for row in parsed]
    return MatrixElement(parsed)
