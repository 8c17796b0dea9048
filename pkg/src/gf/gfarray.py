"""
Bridge from FieldSpec to galois field array classes.

Both sides use the same integer encoding: base-p digits are polynomial-basis
coordinates, constant term least significant. The modulus is passed through
so that galois multiplies exactly like the exp/log tables.
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple, Type

import galois
import numpy as np

from src.gf.field import FieldSpec

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def galois_field(field: FieldSpec) -> Type[galois.FieldArray]:
    """
    The galois FieldArray subclass for a FieldSpec, built once per field.
    """
    if field.m == 1:
        GF = galois.GF(field.p)
    else:
        prime = galois.GF(field.p)
        modulus = galois.Poly(list(reversed(field.modulus)), field=prime)
        GF = galois.GF(field.q, irreducible_poly=modulus)
    logger.debug(f"galois class for {field!r}: {GF.name}")
    return GF


def to_array(field: FieldSpec, rows: Sequence[Sequence[int]]) -> galois.FieldArray:
    return galois_field(field)(np.array(rows, dtype=np.int64))


def to_rows(array) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in array.view(np.ndarray).tolist())


def to_poly(field: FieldSpec, coeffs: Sequence[int]) -> galois.Poly:
    """Coefficients constant term first; () is the zero polynomial."""
    return galois.Poly(list(reversed(coeffs)) or [0], field=galois_field(field))


def from_poly(poly: galois.Poly) -> Tuple[int, ...]:
    coeffs = [int(c) for c in reversed(poly.coeffs)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)
