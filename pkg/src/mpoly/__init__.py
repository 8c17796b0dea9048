"""
Multivariate polynomials over small finite fields.
"""

from .poly import MultiPoly, PolySystem, coefficient_of, compose_linear, evaluate, mul, reduce
from .parser import parse_poly, parse_system
from .serialize import poly_from_pairs, poly_to_pairs, system_from_json, system_to_json

__all__ = [
    'MultiPoly',
    'PolySystem',
    'coefficient_of',
    'compose_linear',
    'evaluate',
    'mul',
    'reduce',
    'parse_poly',
    'parse_system',
    'poly_from_pairs',
    'poly_to_pairs',
    'system_from_json',
    'system_to_json',
]
