"""
Degree-three rational permutations of P^1(F_q) for q = 2 (mod 3), written as

    (1/d) * ((t - r)^3 - (t - s)^3) / (r^3 (t - s)^3 - s^3 (t - r)^3),   r != s.

Every such map has a numerator of exact degree 2. Letting s run to infinity
gives the remaining maps of the same shape, -1 / (d ((t - r)^3 + r^3)), with
constant numerator; s = None stands for that limit.
"""

import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np

from src.errors import PreconditionViolated, WrongResidueClass
from src.gf.field import FieldSpec
from src.homog3 import unipoly
from src.homog3.rational import RationalMap
from src.mpoly.serialize import element_to_json

logger = logging.getLogger(__name__)

MapKey = Tuple[unipoly.UniPoly, unipoly.UniPoly]
DRS = Tuple[int, int, Optional[int]]


def _require_two_mod_three(field: FieldSpec):
    if field.q % 3 != 2:
        raise WrongResidueClass(f"q = {field.q} is not 2 mod 3")


def _drs_parts(field: FieldSpec, r: int, s: Optional[int]) -> Tuple[unipoly.UniPoly, unipoly.UniPoly]:
    cube_r = unipoly.power(field, unipoly.linear(field, r), 3)
    if s is None:
        return (field.neg(1),), unipoly.add(field, cube_r, (field.pow(r, 3),))
    cube_s = unipoly.power(field, unipoly.linear(field, s), 3)
    num = unipoly.sub(field, cube_r, cube_s)
    den = unipoly.sub(
        field,
        unipoly.scale(field, cube_s, field.pow(r, 3)),
        unipoly.scale(field, cube_r, field.pow(s, 3)),
    )
    return num, den


def drs_map(field: FieldSpec, d: int, r: int, s: Optional[int]) -> RationalMap:
    """
    The rational map built from (d, r, s), d != 0, r != s; s None is the limit s -> infinity.
    """
    _require_two_mod_three(field)
    if d == 0 or r == s:
        raise PreconditionViolated("drs", f"need d != 0 and r != s, got ({d}, {r}, {s})")
    num, den = _drs_parts(field, r, s)
    return RationalMap(field, num, unipoly.scale(field, den, d))


@lru_cache(maxsize=32)
def drs_family(field: FieldSpec, finite_only: bool = False) -> Dict[MapKey, DRS]:
    """
    Every map generated by some (d, r, s), keyed by normal form, with the
    lexicographically first (d, r, s) producing it. Finite s come first.

    Args:
        field: F_q with q = 2 (mod 3)
        finite_only: leave out the s = infinity maps
    """
    _require_two_mod_three(field)
    family: Dict[MapKey, DRS] = {}
    s_values = list(field.elements()) + ([] if finite_only else [None])
    for s in s_values:
        for r in field.elements():
            if r == s:
                continue
            num, den = _drs_parts(field, r, s)
            for d in field.nonzero():
                key = RationalMap(field, num, unipoly.scale(field, den, d)).key()
                best = family.get(key)
                if best is None or _order(field, (d, r, s)) < _order(field, best):
                    family[key] = (d, r, s)
    logger.debug(f"(d, r, s) family over {field!r}: {len(family)} maps, finite_only={finite_only}")
    return family


def drs_to_record(field: FieldSpec, drs: DRS) -> dict:
    d, r, s = drs
    return {
        'd': element_to_json(field, d),
        'r': element_to_json(field, r),
        's': "inf" if s is None else element_to_json(field, s),
    }


def _order(field: FieldSpec, drs: DRS) -> Tuple[int, int, int, int]:
    d, r, s = drs
    return (s is None, d, r, field.q if s is None else s)


def is_conforming_shape(R: RationalMap) -> bool:
    """
    Numerator of degree at most 2 with nonzero constant term over b1 t + b2 t^2 + b3 t^3, b3 != 0.
    """
    return (
        unipoly.degree(R.den) == 3 and R.den[0] == 0
        and 0 <= unipoly.degree(R.num) <= 2 and R.num[0] != 0
    )


def drs_witness(R: RationalMap, finite_only: bool = False) -> Optional[DRS]:
    """
    Find (d, r, s) generating R.

    Args:
        R: degree-three map of the conforming shape over F_q, q = 2 (mod 3)
        finite_only: only accept finite s
    Returns: the first witness in (d, r, s) order, or None
    """
    _require_two_mod_three(R.field)
    if not is_conforming_shape(R):
        raise PreconditionViolated("shape", f"{R!r} is not of the form (a1 + a2 t + a3 t^2)/(b1 t + b2 t^2 + b3 t^3)")
    return drs_family(R.field, finite_only).get(R.key())


def _quadratic_discriminant(field: FieldSpec, c0: int, c1: int, c2: int) -> int:
    return field.sub(field.mul(c1, c1), field.mul(field.from_int(4), field.mul(c0, c2)))


def drs_discriminants(field: FieldSpec, r: int, s: int) -> Tuple[int, int]:
    """
    Discriminants of the numerator quadratic and of the denominator divided by t.
    """
    num, den = _drs_parts(field, r, s)
    num = tuple(num) + (0,) * (3 - len(num))
    den = tuple(den) + (0,) * (4 - len(den))
    return (
        _quadratic_discriminant(field, num[0], num[1], num[2]),
        _quadratic_discriminant(field, den[1], den[2], den[3]),
    )


def shape_conforming_permutations(field: FieldSpec) -> FrozenSet[MapKey]:
    """
    Exhaustive census of degree-three permutations of the conforming shape,
    as normal forms (a0 + a1 t + a2 t^2) / (b1 t + b2 t^2 + t^3).
    """
    q = field.q
    t = np.arange(q, dtype=np.int64)
    t2 = field.vmul(t, t)
    grid = np.array([(a0, a1, a2) for a0 in field.nonzero() for a1 in field.elements() for a2 in field.elements()],
                    dtype=np.int64)
    a0, a1, a2 = (grid[:, i:i + 1] for i in range(3))
    num_vals = field.vadd(field.vadd(a0, field.vmul(a1, t)), field.vmul(a2, t2))
    target = np.arange(1, q + 1, dtype=np.int64)
    found = set()
    for b1 in field.elements():
        for b2 in field.elements():
            den = (0, b1, b2, 1)
            den_vals = unipoly.values(field, den)
            poles = den_vals == 0
            shared_root = np.any(poles & (num_vals == 0), axis=1)
            # numerator proportional to t^2 + b2 t + b1 cancels down to degree one
            proportional = (grid[:, 2] != 0) & (grid[:, 1] == field.vmul(grid[:, 2], b2)) \
                & (grid[:, 0] == field.vmul(grid[:, 2], b1))
            images = np.where(poles, q, field.vmul(num_vals, field.vinv(den_vals)))
            # infinity goes to 0, so the finite points must cover 1..q exactly
            perm = np.all(np.sort(images, axis=1) == target, axis=1)
            for row in np.flatnonzero(perm & ~shared_root & ~proportional):
                found.add((unipoly.trim(tuple(int(v) for v in grid[row])), den))
    logger.debug(f"Conforming degree-3 permutations over {field!r}: {len(found)}")
    return frozenset(found)
