"""
Binary quadratic forms Q = a x^2 + b xy + c y^2 and their irreducibility.
"""

import logging
from typing import Optional, Tuple

from src.errors import ClassifierDisagreement, ZeroForm
from src.gf.field import FieldSpec
from src.gf.residues import is_square

logger = logging.getLogger(__name__)

# exhaustive cross-check of the closed-form test below this order
CROSS_CHECK_MAX_Q = 64


def quad_form_value(field: FieldSpec, form: Tuple[int, int, int], x: int, y: int) -> int:
    a, b, c = form
    return field.sum([field.mul(a, field.mul(x, x)), field.mul(b, field.mul(x, y)), field.mul(c, field.mul(y, y))])


def quad_form_zero(field: FieldSpec, form: Tuple[int, int, int]) -> Optional[Tuple[int, int]]:
    """
    First zero of the form on F_q^2 minus the origin, or None.

    Zeros are projective, so it is enough to try (1, t) and then (0, 1).
    """
    for t in field.elements():
        if quad_form_value(field, form, 1, t) == 0:
            return 1, t
    if quad_form_value(field, form, 0, 1) == 0:
        return 0, 1
    return None


def _closed_form_irreducible(field: FieldSpec, a: int, b: int, c: int) -> bool:
    if a == 0 or c == 0:
        return False
    if field.p != 2:
        disc = field.sub(field.mul(b, b), field.mul(field.from_int(4), field.mul(a, c)))
        return disc != 0 and not is_square(field, disc)
    if b == 0:
        # a perfect square in characteristic 2
        return False
    k = field.div(field.mul(a, c), field.mul(b, b))
    return all(field.sum([field.mul(y, y), y, k]) != 0 for y in field.elements())


def quad_form_irreducible(field: FieldSpec, a: int, b: int, c: int) -> bool:
    """
    True iff a x^2 + b xy + c y^2 has no zero besides the origin.

    Args:
        field: base field
        a, b, c: coefficients, not all zero
    Returns: irreducibility over the field
    """
    if a == b == c == 0:
        raise ZeroForm("the zero form has no irreducibility")
    verdict = _closed_form_irreducible(field, a, b, c)
    if field.q <= CROSS_CHECK_MAX_Q:
        exhaustive = quad_form_zero(field, (a, b, c)) is None
        if exhaustive != verdict:
            logger.error(f"Irreducibility test disagrees for ({a}, {b}, {c}) over {field!r}")
            raise ClassifierDisagreement(f"closed-form and exhaustive irreducibility differ for ({a}, {b}, {c})")
    return verdict
