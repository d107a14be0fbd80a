"""Shared test utilities: random generators and the brute-force product oracle."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from leavitt import CohnElement, FieldSpec, Monomial, Scalar, Word
from leavitt.words import random_word


def random_scalar(spec: FieldSpec, rng: random.Random, nonzero: bool = False) -> Scalar:
    p = spec.characteristic
    if p == 0:
        num = rng.randint(-6, 6)
        if nonzero and num == 0:
            num = 1
        return Scalar(spec, Fraction(num, rng.randint(1, 4)))
    lo = 1 if nonzero else 0
    return Scalar(spec, rng.randint(lo, p - 1)) if p > lo else Scalar(spec, lo)


def random_monomial(n: int, max_len: int, rng: random.Random) -> Monomial:
    return Monomial(random_word(n, max_len, rng), random_word(n, max_len, rng))


def random_cohn(
    n: int,
    spec: FieldSpec,
    rng: random.Random,
    max_len: int = 3,
    max_terms: int = 3,
) -> CohnElement:
    out = CohnElement.zero(n, spec)
    for _ in range(rng.randint(0, max_terms)):
        mono = random_monomial(n, max_len, rng)
        out = out + CohnElement.from_monomial(mono, spec, random_scalar(spec, rng, nonzero=True))
    return out


def oracle_mul(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Multiply two basis monomials by exhaustive string rewriting.

    Concatenates the generator strings and repeatedly rewrites adjacent
    pairs y_i x_j: delete them when i = j, return None (the zero product)
    when i != j.  Independent of the prefix-order case analysis used by
    the production multiplication.
    """
    word = (
        [("x", i) for i in a.xs]
        + [("y", i) for i in a.ys]
        + [("x", i) for i in b.xs]
        + [("y", i) for i in b.ys]
    )
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            (s1, i1), (s2, i2) = word[k], word[k + 1]
            if s1 == "y" and s2 == "x":
                if i1 != i2:
                    return None
                del word[k : k + 2]
                changed = True
                break
    xs = [i for s, i in word if s == "x"]
    ys = [i for s, i in word if s == "y"]
    # a fully rewritten string has all x's before all y's
    assert word == [("x", i) for i in xs] + [("y", i) for i in ys]
    n = a.xs.n
    return Monomial(Word(xs, n), Word(ys, n))
