"""
Elimination of the cross term a2*xy from the first coordinate.
"""

import logging
from typing import Tuple

from src.equiv.linalg import swap2
from src.equiv.witness import EquivWitness, LeftLinear
from src.quadclass.coeffs import QuadCoeffs

logger = logging.getLogger(__name__)


def normalize_cross_term(coeffs: QuadCoeffs) -> Tuple[QuadCoeffs, EquivWitness]:
    """
    Return an equivalent coefficient set with a2 = 0 and the left-linear step used.

    a2, b2 both nonzero: f1 <- f1 - (a2/b2) f2. Only a2 nonzero: swap f1 and f2.
    """
    field = coeffs.field
    a2, b2 = coeffs.a[1], coeffs.b[1]
    if a2 == 0:
        return coeffs, EquivWitness()
    if b2 == 0:
        logger.debug("Cross term only in f1, swapping coordinates")
        return coeffs.swap_coordinates(), EquivWitness((LeftLinear(swap2()),))
    k = field.div(a2, b2)
    new_a = tuple(field.sub(x, field.mul(k, y)) for x, y in zip(coeffs.a, coeffs.b))
    step = LeftLinear(((1, field.neg(k)), (0, 1)))
    return coeffs.with_rows(new_a, coeffs.b), EquivWitness((step,))
