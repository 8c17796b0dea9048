"""
Square roots, cube roots and quadratic residuosity in small fields.
"""

from math import gcd
from typing import List, Optional, Union

from src.errors import CubingNotBijective, EvenCharacteristic
from src.gf.field import FieldElem, FieldSpec


def _unwrap(e: Union[FieldElem, int], field: Optional[FieldSpec]):
    if isinstance(e, FieldElem):
        return e.field, e.value
    if field is None:
        raise TypeError("a field is required when passing a bare element index")
    return field, field.check(e)


def is_square(field: FieldSpec, a: int) -> bool:
    if a == 0 or field.p == 2:
        return True
    return field.log(a) % 2 == 0


def legendre(field: FieldSpec, a: int) -> int:
    if a == 0:
        return 0
    return 1 if is_square(field, a) else -1


def nonresidues(field: FieldSpec) -> List[int]:
    """
    Quadratic nonresidues of an odd-characteristic field in canonical order.
    """
    if field.p == 2:
        raise EvenCharacteristic("every element is a square in characteristic 2")
    return [a for a in field.nonzero() if not is_square(field, a)]


def smallest_nonresidue(field: FieldSpec) -> int:
    if field.p == 2:
        raise EvenCharacteristic("every element is a square in characteristic 2")
    for a in field.nonzero():
        if not is_square(field, a):
            return a
    raise AssertionError("odd fields always have nonresidues")


def sqrt_index(field: FieldSpec, a: int) -> Optional[int]:
    """
    A square root of a, or None. Characteristic 2 uses a^(q/2).
    """
    if a == 0:
        return 0
    if field.p == 2:
        return field.pow(a, field.q // 2)
    k = field.log(a)
    if k % 2:
        return None
    return field.exp(k // 2)


def qr_sqrt(e: Union[FieldElem, int], field: Optional[FieldSpec] = None):
    """
    Square root of e when one exists in the field.

    Args:
        e: element (FieldElem, or an index together with field)
        field: owning field for index input
    Returns: root of the same kind as the input, or None
    """
    fld, a = _unwrap(e, field)
    root = sqrt_index(fld, a)
    if root is None or not isinstance(e, FieldElem):
        return root
    return FieldElem(fld, root)


def cube_root_exponent(field: FieldSpec) -> int:
    if gcd(3, field.q - 1) != 1:
        raise CubingNotBijective(f"3 divides q - 1 = {field.q - 1}")
    return pow(3, -1, field.q - 1) if field.q > 2 else 1


def cbrt_index(field: FieldSpec, a: int) -> int:
    return field.pow(a, cube_root_exponent(field)) if a else 0


def cbrt(e: Union[FieldElem, int], field: Optional[FieldSpec] = None):
    """
    The unique cube root when cubing is a bijection of the field.
    """
    fld, a = _unwrap(e, field)
    root = cbrt_index(fld, a)
    return FieldElem(fld, root) if isinstance(e, FieldElem) else root


def cube_root_of_unity(field: FieldSpec) -> int:
    """
    A nontrivial cube root of unity; requires 3 | q - 1.
    """
    if (field.q - 1) % 3:
        raise CubingNotBijective(f"no nontrivial cube roots of unity when 3 does not divide {field.q - 1}")
    return field.exp((field.q - 1) // 3)
