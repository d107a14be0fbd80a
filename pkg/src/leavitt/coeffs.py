"""Exact coefficient fields: the rationals and the prime fields F_p.

Everything here is exact integer arithmetic; no floating point is used
anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "FieldSpec",
    "Scalar",
    "field_arith",
    "from_int",
    "char_divides",
    "parse_scalar",
]

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(m: int) -> bool:
    # Deterministic Miller-Rabin; this witness set is exact for m < 3.3e24.
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field, identified by its characteristic.

    Characteristic 0 means the rationals; a prime p means the field of
    residues mod p.  Any other characteristic is rejected.
    """

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or (c != 0 and not _is_prime(c)):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    def one(self) -> "Scalar":
        return Scalar(self, 1)

    def from_int(self, m: int) -> "Scalar":
        """Image of the integer m under the canonical ring map into the field."""
        return Scalar(self, m)

    def divides(self, m: int) -> bool:
        """Whether m * 1 = 0 in this field.

        In characteristic 0 that means m = 0; in characteristic p it is
        ordinary divisibility p | m (sign-independent).
        """
        if self.characteristic == 0:
            return m == 0
        return m % self.characteristic == 0

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


class Scalar:
    """An exact field element in canonical form.

    Over the rationals the value is a reduced `Fraction`; over F_p it is
    the residue in [0, p).  Scalars are immutable and hashable.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        p = spec.characteristic
        if p == 0:
            if not isinstance(value, (int, Fraction)):
                raise TypeError(f"rational scalar needs int or Fraction, got {type(value).__name__}")
            value = Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise TypeError("residue scalar cannot be built from a non-integer fraction")
                value = value.numerator
            if not isinstance(value, int):
                raise TypeError(f"residue scalar needs an integer, got {type(value).__name__}")
            value = value % p
        self.spec = spec
        self.value = value

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"mismatched fields: {self.spec} vs {other.spec}")

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.spec, self.value + other.value)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.spec, self.value - other.value)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.spec, self.value * other.value)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return self * other.inv()

    def __neg__(self) -> "Scalar":
        return Scalar(self.spec, -self.value)

    def inv(self) -> "Scalar":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in {self.spec}")
        p = self.spec.characteristic
        if p == 0:
            return Scalar(self.spec, 1 / self.value)
        return Scalar(self.spec, pow(self.value, -1, p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self.spec == other.spec
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.spec, self.value))

    def is_negative(self) -> bool:
        """True for rationals below zero; residues are never negative."""
        return self.spec.characteristic == 0 and self.value < 0

    def __str__(self) -> str:
        # Self-describing form: "a/b" or "a" over Q, "r mod p" over F_p.
        if self.spec.characteristic == 0:
            return str(self.value)
        return f"{self.value} mod {self.spec.characteristic}"

    def bare(self) -> str:
        """Textual form without the "mod p" suffix, for use in element strings."""
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.spec}, {self.value})"


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch one of the four field operations by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def from_int(m: int, spec: FieldSpec) -> Scalar:
    return spec.from_int(m)


def char_divides(spec: FieldSpec, m: int) -> bool:
    return spec.divides(m)


def parse_scalar(text: str, spec: FieldSpec) -> Scalar:
    """Parse "a/b" or "a" over Q, and "r mod p" or a bare residue over F_p."""
    text = text.strip()
    if spec.characteristic == 0:
        try:
            return Scalar(spec, Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational scalar {text!r}: {exc}") from None
    parts = text.split("mod")
    if len(parts) == 2:
        modulus = int(parts[1])
        if modulus != spec.characteristic:
            raise ValueError(
                f"scalar modulus {modulus} does not match field {spec}"
            )
        text = parts[0].strip()
    elif len(parts) != 1:
        raise ValueError(f"bad residue scalar {text!r}")
    try:
        return Scalar(spec, int(text))
    except ValueError:
        raise ValueError(f"bad residue scalar {text!r}") from None
