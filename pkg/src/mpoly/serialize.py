"""
JSON-friendly serialization of elements, polynomials and systems.
Polynomials become lists of [coefficient, exponent-vector] pairs.
"""

from typing import Any, List, Sequence, Union

from src.errors import PolyError
from src.gf.field import FieldSpec
from src.mpoly.poly import MultiPoly, PolySystem


def element_to_json(field: FieldSpec, value: int) -> Union[int, str]:
    """
    Prime-field elements stay ints; extension elements become lowercase hex.
    """
    return int(value) if field.m == 1 else f"{int(value):#x}"


def element_from_json(field: FieldSpec, raw: Union[int, str]) -> int:
    value = int(raw, 0) if isinstance(raw, str) else int(raw)
    return field.check(value)


def point_to_json(field: FieldSpec, point: Sequence[int]) -> List[Union[int, str]]:
    return [element_to_json(field, v) for v in point]


def poly_to_pairs(f: MultiPoly) -> List[List[Any]]:
    return [[element_to_json(f.field, f.terms[exps]), list(exps)] for exps in sorted(f.terms, reverse=True)]


def poly_from_pairs(field: FieldSpec, nvars: int, pairs: Sequence[Sequence[Any]]) -> MultiPoly:
    terms = {}
    for pair in pairs:
        if len(pair) != 2:
            raise PolyError(f"expected [coefficient, exponents], got {pair!r}")
        coeff, exps = pair
        key = tuple(int(e) for e in exps)
        c = element_from_json(field, coeff)
        terms[key] = field.add(terms.get(key, 0), c)
    return MultiPoly(field, nvars, terms)


def system_to_json(system: PolySystem) -> List[List[List[Any]]]:
    return [poly_to_pairs(f) for f in system]


def system_from_json(field: FieldSpec, data: Sequence[Sequence[Sequence[Any]]]) -> PolySystem:
    n = len(data)
    return PolySystem([poly_from_pairs(field, n, pairs) for pairs in data])
