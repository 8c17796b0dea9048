"""
Finite field package: construction, arithmetic tables, residues and
linearized-polynomial analysis.
"""

from .field import FieldElem, FieldSpec, build_field, inv
from .residues import cbrt, is_square, nonresidues, qr_sqrt, smallest_nonresidue
from .linearized import is_linearized_perm, linearized_roots, x3_plus_L_is_perm
from .catalog import field_from_selector, load_field_catalog

__all__ = [
    'FieldElem',
    'FieldSpec',
    'build_field',
    'inv',
    'cbrt',
    'is_square',
    'nonresidues',
    'qr_sqrt',
    'smallest_nonresidue',
    'is_linearized_perm',
    'linearized_roots',
    'x3_plus_L_is_perm',
    'field_from_selector',
    'load_field_catalog',
]
