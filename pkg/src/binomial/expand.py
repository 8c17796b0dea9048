"""
Coordinate expansion of x^3 + a x^(2q+1) over F_{q^2} into a cubic system over F_q.
"""

from typing import Sequence

from src.binomial.extension import QuadExt
from src.errors import EvenCharacteristic, OddCharacteristic
from src.mpoly.poly import MultiPoly, PolySystem

CUBIC_EXPONENTS = ((3, 0), (2, 1), (1, 2), (0, 3))


def binary_cubic(field, coeffs: Sequence[int]) -> MultiPoly:
    """
    c0 x1^3 + c1 x1^2 x2 + c2 x1 x2^2 + c3 x2^3.
    """
    return MultiPoly(field, 2, dict(zip(CUBIC_EXPONENTS, coeffs)))


def expand_odd(a1: int, a2: int, ext: QuadExt) -> PolySystem:
    """
    (f1, f2) with f(x1 + x2 alpha) = f1 + f2 alpha, alpha^2 = u.

    Args:
        a1, a2: coordinates of a = a1 + a2 alpha
        ext: odd-characteristic extension
    Returns: PolySystem in x1, x2
    """
    if ext.is_even:
        raise EvenCharacteristic("expand_odd needs odd characteristic")
    f, u = ext.base, ext.u
    one_plus = f.add(1, a1)
    three_minus = f.sub(f.from_int(3), a1)
    a2u = f.mul(a2, u)
    f1 = binary_cubic(f, (one_plus, f.neg(a2u), f.mul(three_minus, u), f.mul(a2u, u)))
    f2 = binary_cubic(f, (a2, three_minus, f.neg(a2u), f.mul(one_plus, u)))
    return PolySystem([f1, f2])


def expand_even(a1: int, a2: int, ext: QuadExt) -> PolySystem:
    """
    (f1, f2) with f(x1 + x2 alpha) = f1 + f2 alpha, alpha^2 + alpha + 1 = 0.
    """
    if not ext.is_even:
        raise OddCharacteristic("expand_even needs characteristic 2")
    f = ext.base
    one_a1 = f.add(1, a1)
    one_a2 = f.add(1, a2)
    all_three = f.add(one_a1, a2)
    f1 = binary_cubic(f, (one_a1, a2, one_a2, all_three))
    f2 = binary_cubic(f, (a2, all_three, all_three, a1))
    return PolySystem([f1, f2])


def expand(a1: int, a2: int, ext: QuadExt) -> PolySystem:
    if ext.is_even:
        return expand_even(a1, a2, ext)
    return expand_odd(a1, a2, ext)
