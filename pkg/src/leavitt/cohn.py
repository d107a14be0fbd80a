"""Arithmetic in the Cohn algebra of order n.

The algebra is generated by x_1..x_n, y_1..y_n subject to y_i x_j = delta_ij.
The products x_I y_J, indexed by pairs of words, form a free basis, so an
element is stored as a sparse mapping from monomials to nonzero scalars.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Dict, Optional

from .coeffs import FieldSpec, Scalar
from .words import Relation, Word, compare, random_word

__all__ = [
    "Monomial",
    "CohnElement",
    "bracket",
    "ideal_generator",
    "degree_split",
    "random_element",
    "x_word",
    "y_word",
    "x_gen",
    "y_gen",
    "parse_element",
]


class Monomial:
    """A basis monomial x_I y_J, held as the pair of words (I, J)."""

    __slots__ = ("xs", "ys")

    def __init__(self, xs: Word, ys: Word):
        xs._check(ys)
        self.xs = xs
        self.ys = ys

    @classmethod
    def identity(cls, n: int) -> "Monomial":
        e = Word.empty(n)
        return cls(e, e)

    @property
    def n(self) -> int:
        return self.xs.n

    @property
    def degree(self) -> int:
        # x-letters count +1, y-letters -1
        return len(self.xs) - len(self.ys)

    def is_identity(self) -> bool:
        return not self.xs.letters and not self.ys.letters

    def sort_key(self):
        return (self.degree, self.xs.lenlex_key(), self.ys.lenlex_key())

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((self.xs, self.ys))

    def __repr__(self) -> str:
        if self.is_identity():
            return "1"
        parts = []
        if self.xs.letters:
            parts.append(f"x{self.xs!r}")
        if self.ys.letters:
            parts.append(f"y{self.ys!r}")
        return "*".join(parts)


def _mul_monomials(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Product of basis monomials, or None when it collapses to zero.

    Writing a = x_I y_J and b = x_K y_L, the inner factor y_J x_K telescopes
    under y_i x_j = delta_ij: it survives exactly when one of rev(J), K is a
    prefix of the other, and the leftover letters migrate into the surviving
    side.
    """
    rel, rem = compare(a.ys.rev(), b.xs)
    if rel is Relation.INCOMPARABLE:
        return None
    if rel is Relation.RIGHT_PREFIX_OF_LEFT:
        # rev(J) = K m: the unconsumed y-letters prepend (reversed) to L.
        return Monomial(a.xs, rem.rev() * b.ys)
    # K = rev(J) m (m empty when equal): unconsumed x-letters append to I.
    return Monomial(a.xs * rem, b.ys)


class CohnElement:
    """A finite linear combination of basis monomials, in canonical sparse form.

    The term map never stores a zero coefficient, so equality of elements is
    equality of the maps.  Instances are immutable by convention: no method
    mutates `terms` after construction.
    """

    __slots__ = ("spec", "n", "terms")

    def __init__(self, spec: FieldSpec, n: int, terms: Dict[Monomial, Scalar]):
        if n < 2:
            raise ValueError(f"alphabet size must be at least 2, got {n}")
        self.spec = spec
        self.n = n
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        for m, c in self.terms.items():
            if m.n != n:
                raise ValueError(f"monomial alphabet {m.n} does not match element alphabet {n}")
            if c.spec != spec:
                raise ValueError(f"coefficient field {c.spec} does not match element field {spec}")

    @classmethod
    def zero(cls, n: int, spec: FieldSpec) -> "CohnElement":
        return cls(spec, n, {})

    @classmethod
    def one(cls, n: int, spec: FieldSpec) -> "CohnElement":
        return cls(spec, n, {Monomial.identity(n): spec.one()})

    @classmethod
    def from_monomial(
        cls, mono: Monomial, spec: FieldSpec, coeff: Optional[Scalar] = None
    ) -> "CohnElement":
        return cls(spec, mono.n, {mono: spec.one() if coeff is None else coeff})

    def _check(self, other: "CohnElement") -> None:
        if not isinstance(other, CohnElement):
            raise TypeError(f"expected CohnElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"mismatched fields: {self.spec} vs {other.spec}")
        if other.n != self.n:
            raise ValueError(f"mismatched alphabet sizes: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def zero_like(self) -> "CohnElement":
        return CohnElement(self.spec, self.n, {})

    def __add__(self, other: "CohnElement") -> "CohnElement":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = acc
        return CohnElement(self.spec, self.n, terms)

    def __neg__(self) -> "CohnElement":
        return CohnElement(self.spec, self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "CohnElement") -> "CohnElement":
        self._check(other)
        return self + (-other)

    def scale(self, s: Scalar) -> "CohnElement":
        if s.spec != self.spec:
            raise ValueError(f"mismatched fields: {self.spec} vs {s.spec}")
        if s.is_zero():
            return self.zero_like()
        return CohnElement(self.spec, self.n, {m: s * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.spec.from_int(other))
        self._check(other)
        terms: Dict[Monomial, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mul_monomials(ma, mb)
                if m is None:
                    continue
                c = ca * cb
                acc = terms.get(m)
                acc = c if acc is None else acc + c
                if acc.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = acc
        return CohnElement(self.spec, self.n, terms)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "CohnElement":
        if exponent < 1:
            raise ValueError(f"exponent must be at least 1, got {exponent}")
        out = self
        for _ in range(exponent - 1):
            out = out * self
        return out

    def bracket(self, other: "CohnElement") -> "CohnElement":
        return self * other - other * self

    def trace(self) -> Scalar:
        """Sum of the coefficients of the monomials x_I y_J with I = rev(J).

        This is the linear functional sending x_I y_J to 1 when I = rev(J)
        and to 0 otherwise; it satisfies trace(ab) = trace(ba).
        """
        total = self.spec.zero()
        for m, c in self.terms.items():
            if m.xs.letters == m.ys.letters[::-1]:
                total = total + c
        return total

    def degree_split(self) -> Dict[int, "CohnElement"]:
        """Partition into homogeneous parts under deg(x_i) = 1, deg(y_i) = -1."""
        parts: Dict[int, Dict[Monomial, Scalar]] = {}
        for m, c in self.terms.items():
            parts.setdefault(m.degree, {})[m] = c
        return {d: CohnElement(self.spec, self.n, t) for d, t in sorted(parts.items())}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CohnElement)
            and self.spec == other.spec
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.spec, self.n, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for m in sorted(self.terms, key=Monomial.sort_key):
            c = self.terms[m]
            negative = c.is_negative()
            mag = -c if negative else c
            if m.is_identity():
                body = mag.bare()
            elif mag.is_one():
                body = repr(m)
            else:
                body = f"{mag.bare()}*{m!r}"
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f" - {body}" if negative else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"<CohnElement n={self.n} over {self.spec}: {self}>"


def bracket(a: CohnElement, b: CohnElement) -> CohnElement:
    """Commutator ab - ba."""
    return a.bracket(b)


def degree_split(a: CohnElement) -> Dict[int, CohnElement]:
    return a.degree_split()


def x_word(word: Word, spec: FieldSpec) -> CohnElement:
    return CohnElement.from_monomial(Monomial(word, Word.empty(word.n)), spec)


def y_word(word: Word, spec: FieldSpec) -> CohnElement:
    return CohnElement.from_monomial(Monomial(Word.empty(word.n), word), spec)


def x_gen(i: int, n: int, spec: FieldSpec) -> CohnElement:
    return x_word(Word((i,), n), spec)


def y_gen(i: int, n: int, spec: FieldSpec) -> CohnElement:
    return y_word(Word((i,), n), spec)


def ideal_generator(n: int, spec: FieldSpec) -> CohnElement:
    """The element 1 - sum_i x_i y_i whose two-sided ideal defines the Leavitt quotient."""
    terms = {Monomial.identity(n): spec.one()}
    for i in range(1, n + 1):
        w = Word((i,), n)
        terms[Monomial(w, w)] = -spec.one()
    return CohnElement(spec, n, terms)


def random_element(
    n: int,
    spec: FieldSpec,
    max_word_len: int,
    max_terms: int,
    seed,
) -> CohnElement:
    """A reproducible pseudo-random element within the given bounds.

    Draws max_terms monomials with word lengths at most max_word_len and
    nonzero coefficients; repeated draws of the same monomial may cancel,
    so max_terms is an upper bound on the support size.
    """
    if max_word_len < 0 or max_terms < 0:
        raise ValueError("bounds must be non-negative")
    rng = random.Random(seed)
    out = CohnElement.zero(n, spec)
    for _ in range(max_terms):
        mono = Monomial(random_word(n, max_word_len, rng), random_word(n, max_word_len, rng))
        out = out + CohnElement.from_monomial(mono, spec, _random_nonzero_scalar(spec, rng))
    return out


def _random_nonzero_scalar(spec: FieldSpec, rng: random.Random) -> Scalar:
    p = spec.characteristic
    if p == 0:
        num = rng.choice([i for i in range(-6, 7) if i != 0])
        return Scalar(spec, Fraction(num, rng.randint(1, 4)))
    return Scalar(spec, rng.randint(1, p - 1)) if p > 2 else spec.one()


# --- canonical element text -------------------------------------------------
#
# The printed form is "c1*m1 + c2*m2 + ...", with monomials like
# "x[1,2]*y[2,1]" and bare coefficients ("1/2" over Q, residues over F_p).
# parse_element reads that form back; it also accepts any product of
# x/y blocks and scalar factors, multiplying them out in the algebra.

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<block>[xy]\[[0-9,\s]*\])|(?P<num>\d+)|(?P<sym>[+\-*/]))"
)


def _tokenize_element(text: str):
    pos, tokens = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"bad element text at position {pos}: {text[pos:]!r}")
            break
        if m.lastgroup == "block":
            blk = m.group("block")
            inner = blk[2:-1].strip()
            letters = tuple(int(t) for t in inner.split(",")) if inner else ()
            if not letters:
                raise ValueError(f"empty generator word in {blk!r}")
            tokens.append((blk[0], letters))
        elif m.lastgroup == "num":
            tokens.append(("int", int(m.group("num"))))
        else:
            tokens.append((m.group("sym"), None))
        pos = m.end()
    return tokens


def parse_element(text: str, n: int, spec: FieldSpec) -> CohnElement:
    """Read an element back from its canonical textual form."""
    tokens = _tokenize_element(text)
    if not tokens:
        raise ValueError("empty element text")
    out = CohnElement.zero(n, spec)
    idx = 0
    first = True
    while idx < len(tokens):
        sign = 1
        kind, _ = tokens[idx]
        if kind in "+-":
            if not first or kind == "-":
                sign = -1 if kind == "-" else 1
            idx += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' between terms, got {kind!r}")
        first = False
        term = CohnElement.one(n, spec)
        expect_factor = True
        while idx < len(tokens):
            kind, val = tokens[idx]
            if kind in "+-":
                break
            if kind == "*":
                if expect_factor:
                    raise ValueError("misplaced '*' in element text")
                idx += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ValueError(f"missing '*' before {kind!r} factor")
            if kind == "int":
                num = val
                if idx + 2 < len(tokens) and tokens[idx + 1][0] == "/" and tokens[idx + 2][0] == "int":
                    den = tokens[idx + 2][1]
                    idx += 2
                    if spec.characteristic == 0:
                        coeff = Scalar(spec, Fraction(num, den))
                    else:
                        coeff = spec.from_int(num) / spec.from_int(den)
                else:
                    coeff = spec.from_int(num)
                term = term.scale(coeff)
            elif kind == "x":
                term = term * x_word(Word(val, n), spec)
            elif kind == "y":
                term = term * y_word(Word(val, n), spec)
            else:
                raise ValueError(f"unexpected {kind!r} in element text")
            idx += 1
            expect_factor = False
        if expect_factor:
            raise ValueError("dangling operator in element text")
        out = out + (term.scale(-spec.one()) if sign < 0 else term)
    return out
