"""
Bridge between homogeneous product systems (f1 g, f2 g) and rational permutations of P^1.
"""

import logging
from math import gcd
from typing import Tuple

from src.errors import FieldMismatch, PreconditionViolated
from src.homog3 import unipoly
from src.homog3.rational import RationalMap, rat_is_perm
from src.homog3.system import BinaryForm
from src.mpoly.poly import PolySystem
from src.permoracle.brute_force import brute_force

logger = logging.getLogger(__name__)


def _check_hypotheses(f1: BinaryForm, f2: BinaryForm, g: BinaryForm):
    field = f1.field
    if f2.field != field or g.field != field:
        raise FieldMismatch("forms over different fields")
    n, m = f1.degree, g.degree
    if f2.degree != n:
        raise PreconditionViolated("same_degree", f"deg f1 = {n}, deg f2 = {f2.degree}")
    if f1.coeffs[n] != 0:
        raise PreconditionViolated("f1_shape", "f1 must not contain y^n")
    if f1.is_zero() or f2.is_zero():
        raise PreconditionViolated("coprime", "f1 and f2 must be nonzero")
    # with f1 free of y^n, x divides both forms unless f2 carries y^n
    shared = unipoly.gcd(field, f1.dehomogenize(), f2.dehomogenize())
    if f2.coeffs[n] == 0 or unipoly.degree(shared) > 0:
        raise PreconditionViolated("coprime", "f1 and f2 share a factor")
    if g.is_zero():
        raise PreconditionViolated("g_nonzero", "g must be nonzero")
    if m >= 1 and not g.only_trivial_zero():
        raise PreconditionViolated("g_anisotropic", "g must vanish only at the origin")
    if gcd(m + n, field.q - 1) != 1:
        raise PreconditionViolated("gcd", f"gcd({m + n}, {field.q - 1}) != 1")


def product_perm_equiv(f1: BinaryForm, f2: BinaryForm, g: BinaryForm) -> Tuple[bool, bool]:
    """
    Evaluate both sides of the product bridge.

    Args:
        f1, f2: coprime forms of degree n, f1 without y^n
        g: form of degree m with only the trivial zero (any nonzero constant when m = 0)
    Returns:
        (whether (f1 g, f2 g) permutes F_q^2, whether f1(1,t)/f2(1,t) permutes P^1);
        the two agree under the hypotheses
    """
    _check_hypotheses(f1, f2, g)
    system = PolySystem([(f1 * g).to_poly(), (f2 * g).to_poly()])
    system_side = brute_force(system).is_perm
    rational_side = rat_is_perm(RationalMap(f1.field, f1.dehomogenize(), f2.dehomogenize()))
    if system_side != rational_side:
        logger.warning(f"Product bridge sides differ: system {system_side}, rational {rational_side}")
    return system_side, rational_side
