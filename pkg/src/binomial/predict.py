"""
Predicted permutation behaviour of x^3 + a x^(2q+1) over F_{q^2}.

The odd-characteristic predictor first requires gcd(3, q - 1) = 1, that is
q = 2 (mod 3), and predicts no permutation otherwise; only then are the five
closed-form conditions evaluated as stated. Case 2.1 has two readings: the literal one lets r range over F_q^*,
the strict one couples a2 = 2 sigma / s to u = (sigma - 3) s^2.
"""

import logging
from functools import lru_cache
from math import gcd
from typing import FrozenSet, List, Tuple

from src.binomial.extension import QuadExt
from src.errors import CharThree, EvenCharacteristic, OddCharacteristic

logger = logging.getLogger(__name__)

CASE_11 = "1.1"
CASE_12 = "1.2"
CASE_13 = "1.3"
CASE_21 = "2.1"
CASE_22 = "2.2"
CASE_NONE = "none"
EVEN_ZERO = "even-zero"
EVEN_NONZERO = "even-nonzero"

Prediction = Tuple[bool, str]


def _roots(field, coeffs) -> List[int]:
    """Roots in F_q of sum coeffs[i] z^i."""
    found = []
    for z in field.elements():
        value = 0
        for c in reversed(coeffs):
            value = field.add(field.mul(value, z), c)
        if value == 0:
            found.append(z)
    return found


def sigma_roots(field) -> List[int]:
    """Roots of z^2 - 2z - 2."""
    return _roots(field, (field.neg(field.from_int(2)), field.neg(field.from_int(2)), 1))


def quartic_has_root(field) -> bool:
    """Whether z^4 - 4z^2 + 1 has a root in F_q."""
    return bool(_roots(field, (1, 0, field.neg(field.from_int(4)), 0, 1)))


@lru_cache(maxsize=64)
def family21(ext: QuadExt, strict: bool = False) -> FrozenSet[int]:
    """
    The a2 values admitted by case 2.1 (a1 = -1 is checked separately).

    Args:
        ext: odd-characteristic extension with alpha^2 = u
        strict: require u = (sigma - 3) s^2 for the s with a2 = 2 sigma / s
    """
    f, u = ext.base, ext.u
    if quartic_has_root(f):
        return frozenset()
    values = set()
    for sigma in sigma_roots(f):
        two_sigma = f.mul(f.from_int(2), sigma)
        shift = f.sub(sigma, f.from_int(3))
        for s in f.nonzero():
            if strict and f.mul(shift, f.mul(s, s)) != u:
                continue
            values.add(f.div(two_sigma, s))
    values.discard(0)
    logger.debug(f"Case 2.1 a2 values over {ext!r} (strict={strict}): {len(values)}")
    return frozenset(values)


@lru_cache(maxsize=64)
def family22(ext: QuadExt) -> FrozenSet[Tuple[int, int]]:
    """
    The (a1, a2) pairs 3(r^4 + 6ur^2 + u^2)/(r^2 - u)^2, 12(r^2 + u)r/(r^2 - u)^2 for r in F_q^*.

    r and -r give the same a1 and opposite a2, so the set is closed under a2 -> -a2.
    """
    f, u = ext.base, ext.u
    three, six, twelve = f.from_int(3), f.from_int(6), f.from_int(12)
    pairs = set()
    for r in f.nonzero():
        r2 = f.mul(r, r)
        gap = f.sub(r2, u)
        if gap == 0:
            continue
        denom = f.mul(gap, gap)
        quartic = f.add(f.add(f.mul(r2, r2), f.mul(six, f.mul(u, r2))), f.mul(u, u))
        a1 = f.div(f.mul(three, quartic), denom)
        a2 = f.div(f.mul(twelve, f.mul(f.add(r2, u), r)), denom)
        pairs.add((a1, a2))
    logger.debug(f"Case 2.2 family over {ext!r}: {len(pairs)} pairs")
    return frozenset(pairs)


def _require_odd_not_three(ext: QuadExt):
    if ext.is_even:
        raise EvenCharacteristic("predict_odd needs odd characteristic")
    if ext.base.p == 3:
        raise CharThree("binomials in characteristic 3 are out of scope")


def predict_odd(a1: int, a2: int, ext: QuadExt, strict: bool = False) -> Prediction:
    """
    Decide whether x^3 + (a1 + a2 alpha) x^(2q+1) permutes F_{q^2}, a != 0.

    Args:
        a1, a2: coordinates of a
        ext: extension with alpha^2 = u, characteristic not 2 or 3
        strict: the coupled reading of case 2.1
    Returns:
        (prediction, first matching case label or "none")
    """
    _require_odd_not_three(ext)
    f, q = ext.base, ext.q
    if a1 == 0 and a2 == 0:
        return predict_zero(ext)
    if gcd(3, q - 1) != 1:
        return False, CASE_NONE

    if a2 == 0:
        if a1 == f.from_int(3) and q % 3 == 2:
            return True, CASE_11
        if a1 == 1 and q % 24 in (11, 17):
            return True, CASE_12
        if a1 == f.neg(f.from_int(3)) and q % 12 == 11:
            return True, CASE_13
        return False, CASE_NONE

    if a1 == f.neg(1) and a2 in family21(ext, strict):
        return True, CASE_21
    if (a1, a2) in family22(ext):
        return True, CASE_22
    return False, CASE_NONE


def predict_zero(ext: QuadExt) -> Prediction:
    """
    a = 0 leaves x^3, a permutation exactly when gcd(3, q^2 - 1) = 1.
    """
    return gcd(3, ext.order - 1) == 1, CASE_NONE


def predict_even(a1: int, a2: int, ext: QuadExt) -> bool:
    """
    Characteristic 2, m odd: predicted a permutation exactly when a = 0.
    """
    if not ext.is_even:
        raise OddCharacteristic("predict_even needs characteristic 2")
    return a1 == 0 and a2 == 0


def predict(a1: int, a2: int, ext: QuadExt, strict: bool = False) -> Prediction:
    if ext.is_even:
        zero = predict_even(a1, a2, ext)
        return zero, EVEN_ZERO if zero else EVEN_NONZERO
    return predict_odd(a1, a2, ext, strict)
