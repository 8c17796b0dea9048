"""
Canonical representatives of the equivalence classes of bivariate quadratic permutations.
"""

from typing import Optional, Sequence

from src.errors import ClassifierError
from src.gf.field import FieldSpec
from src.mpoly.poly import MultiPoly, PolySystem
from src.quadclass.coeffs import CLASS_FIFTH, CLASS_X2_Y, CLASS_X2_Y2, CLASS_XY

_MONOMIAL_CLASSES = {
    CLASS_XY: ((1, 0), (0, 1)),
    CLASS_X2_Y: ((2, 0), (0, 1)),
    CLASS_X2_Y2: ((2, 0), (0, 2)),
}


def canonical_representative(field: FieldSpec, label: str, c: Optional[Sequence[int]] = None) -> PolySystem:
    """
    The representative system of a class.

    Args:
        field: base field
        label: one of the CLASS_* labels
        c: (c1, c2, c3, c4) for the fifth class (y^2 + x, c1 x^2 + c2 y^2 + c3 x + c4 y)
    """
    if label in _MONOMIAL_CLASSES:
        return PolySystem([MultiPoly.monomial(field, 2, e) for e in _MONOMIAL_CLASSES[label]])
    if label == CLASS_FIFTH:
        if c is None or len(c) != 4:
            raise ClassifierError("the fifth class needs its four coefficients c1..c4")
        first = MultiPoly(field, 2, {(0, 2): 1, (1, 0): 1})
        second = MultiPoly(field, 2, {(2, 0): c[0], (0, 2): c[1], (1, 0): c[2], (0, 1): c[3]})
        return PolySystem([first, second])
    raise ClassifierError(f"unknown canonical class {label!r}")


def fifth_class_parameters(system: PolySystem) -> Sequence[int]:
    """
    Read (c1, c2, c3, c4) off a system already in fifth-class shape.
    """
    f2 = system[1]
    return tuple(f2.coefficient_of(e) for e in ((2, 0), (0, 2), (1, 0), (0, 1)))


def fifth_class_linearized(field: FieldSpec, c: Sequence[int]) -> Sequence[int]:
    """
    Coefficients of c1 y^4 + (c2 + c3) y^2 + c4 y, lowest power first.
    """
    c1, c2, c3, c4 = c
    return (c4, field.add(c2, c3), c1)
