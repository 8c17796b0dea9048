"""
Univariate polynomials over a FieldSpec as coefficient tuples, constant term first.
Every function returns trimmed tuples; the zero polynomial is ().

Tuples are the hashable form kept in rational-map keys; arithmetic runs on galois.Poly.
"""

from typing import Sequence, Tuple

import galois
import numpy as np

from src.errors import DivisionByZero
from src.gf.field import FieldSpec
from src.gf.gfarray import from_poly, to_poly

UniPoly = Tuple[int, ...]


def trim(coeffs: Sequence[int]) -> UniPoly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coeffs[:end])


def degree(f: UniPoly) -> int:
    """-1 for the zero polynomial."""
    return len(f) - 1


def lead(f: UniPoly) -> int:
    return f[-1] if f else 0


def add(field: FieldSpec, f: UniPoly, g: UniPoly) -> UniPoly:
    return from_poly(to_poly(field, f) + to_poly(field, g))


def neg(field: FieldSpec, f: UniPoly) -> UniPoly:
    return from_poly(-to_poly(field, f))


def sub(field: FieldSpec, f: UniPoly, g: UniPoly) -> UniPoly:
    return from_poly(to_poly(field, f) - to_poly(field, g))


def scale(field: FieldSpec, f: UniPoly, c: int) -> UniPoly:
    if c == 0:
        return ()
    return tuple(field.mul(c, a) for a in f)


def mul(field: FieldSpec, f: UniPoly, g: UniPoly) -> UniPoly:
    return from_poly(to_poly(field, f) * to_poly(field, g))


def power(field: FieldSpec, f: UniPoly, k: int) -> UniPoly:
    return from_poly(to_poly(field, f) ** k)


def divmod_poly(field: FieldSpec, f: UniPoly, g: UniPoly) -> Tuple[UniPoly, UniPoly]:
    if not g:
        raise DivisionByZero("polynomial division by zero")
    quot, rem = divmod(to_poly(field, f), to_poly(field, g))
    return from_poly(quot), from_poly(rem)


def monic(field: FieldSpec, f: UniPoly) -> UniPoly:
    if not f:
        return ()
    return scale(field, f, field.inv(f[-1]))


def gcd(field: FieldSpec, f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    if not f or not g:
        return monic(field, f or g)
    return monic(field, from_poly(galois.gcd(to_poly(field, f), to_poly(field, g))))


def evaluate(field: FieldSpec, f: UniPoly, t: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = field.add(field.mul(acc, t), c)
    return acc


def values(field: FieldSpec, f: UniPoly) -> np.ndarray:
    """
    f evaluated at every element of the field, indexed by element.
    """
    t = np.arange(field.q, dtype=np.int64)
    acc = np.zeros(field.q, dtype=np.int64)
    for c in reversed(f):
        acc = field.vadd(field.vmul(acc, t), c)
    return acc


def linear(field: FieldSpec, root: int) -> UniPoly:
    """t - root."""
    return trim((field.neg(root), 1))
