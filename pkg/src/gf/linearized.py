"""
Linearized (p-)polynomials L(y) = sum L_i y^(p^i): root sets and the
x^3 + L(x) permutation test in characteristic 2.
"""

import logging
from typing import FrozenSet, Optional, Sequence

import numpy as np

from src.errors import ClassifierDisagreement, PreconditionViolated, WrongCharacteristic
from src.gf.field import FieldSpec

logger = logging.getLogger(__name__)


def linearized_table(field: FieldSpec, coeffs: Sequence[int]) -> np.ndarray:
    """
    Values of L at every element, indexed by element.
    """
    y = np.arange(field.q, dtype=np.int64)
    total = np.zeros(field.q, dtype=np.int64)
    for i, c in enumerate(coeffs):
        if c:
            term = field.vmul(c, field.vpow(y, field.p ** i))
            total = field.vadd(total, term)
    return total


def linearized_roots(field: FieldSpec, coeffs: Sequence[int]) -> FrozenSet[int]:
    """
    Exhaustive root set of a linearized polynomial.

    Args:
        field: field the roots are taken in
        coeffs: L_0, L_1, ... multiplying y, y^p, y^(p^2), ...
    Returns: frozenset of element indices y with L(y) = 0
    """
    values = linearized_table(field, coeffs)
    return frozenset(int(y) for y in np.flatnonzero(values == 0))


def is_linearized_perm(field: FieldSpec, coeffs: Sequence[int]) -> bool:
    return linearized_roots(field, coeffs) == frozenset({0})


def theta_for_trace_form(field: FieldSpec, coeffs: Sequence[int]) -> Optional[int]:
    """
    The theta with L = theta^2 x + theta x^2, if L has that shape.
    """
    padded = list(coeffs) + [0, 0]
    if any(padded[2:]):
        return None
    l0, l1 = padded[0], padded[1]
    if l1 == 0 or l0 != field.mul(l1, l1):
        return None
    return l1


def x3_plus_L_predicate(field: FieldSpec, coeffs: Sequence[int]) -> bool:
    """
    Closed form: m odd and L = theta^2 x + theta x^2 for some nonzero theta.
    """
    return field.m % 2 == 1 and theta_for_trace_form(field, coeffs) is not None


def x3_plus_L_is_perm(field: FieldSpec, coeffs: Sequence[int]) -> bool:
    """
    Decide whether x^3 + L(x) permutes F_{2^m} by exhaustive evaluation and
    check the answer against the closed-form predicate.

    Args:
        field: a characteristic-2 field
        coeffs: nonzero linearized coefficients
    Returns: the oracle verdict
    """
    from src.mpoly.poly import MultiPoly, PolySystem
    from src.permoracle.brute_force import brute_force

    if field.p != 2:
        raise WrongCharacteristic(f"x^3 + L(x) test needs characteristic 2, got {field.p}")
    if not any(coeffs):
        raise PreconditionViolated("L nonzero", "all linearized coefficients are zero")

    f = MultiPoly.monomial(field, 1, (3,))
    for i, c in enumerate(coeffs):
        if c:
            f = f + MultiPoly.monomial(field, 1, (2 ** i,), c)
    verdict = brute_force(PolySystem([f]))
    expected = x3_plus_L_predicate(field, coeffs)
    if verdict.is_perm != expected:
        logger.error(f"x^3 + L disagreement over {field!r}: L={list(coeffs)} oracle={verdict.is_perm}")
        raise ClassifierDisagreement(
            f"oracle says {verdict.is_perm}, closed form says {expected} for L={list(coeffs)}"
        )
    return verdict.is_perm
