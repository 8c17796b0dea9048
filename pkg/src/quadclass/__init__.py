"""
Classification of bivariate quadratic permutation systems.
"""

from src.quadclass.canonical import canonical_form, classify
from src.quadclass.coeffs import (
    CLASS_FIFTH,
    CLASS_X2_Y,
    CLASS_X2_Y2,
    CLASS_XY,
    NOT_PP,
    SYMMETRIES,
    QuadCoeffs,
    QuadVerdict,
    Symmetry,
)
from src.quadclass.even import classify_even, l1_coefficients, l2_coefficients
from src.quadclass.normalize import normalize_cross_term
from src.quadclass.odd import classify_odd
from src.quadclass.representatives import canonical_representative
from src.quadclass.scan import scan_quad, scan_record

__all__ = [
    'CLASS_FIFTH', 'CLASS_X2_Y', 'CLASS_X2_Y2', 'CLASS_XY', 'NOT_PP',
    'SYMMETRIES', 'QuadCoeffs', 'QuadVerdict', 'Symmetry',
    'canonical_form', 'canonical_representative', 'classify', 'classify_even', 'classify_odd',
    'l1_coefficients', 'l2_coefficients', 'normalize_cross_term', 'scan_quad', 'scan_record',
]
