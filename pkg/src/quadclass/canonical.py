"""
Full reduction pipeline: normalize the cross term, classify by characteristic,
and check the resulting witness against the original system.
"""

import logging

from src.errors import ClassifierError
from src.equiv.transforms import verify_witness
from src.quadclass.coeffs import QuadCoeffs, QuadVerdict
from src.quadclass.even import classify_even
from src.quadclass.normalize import normalize_cross_term
from src.quadclass.odd import classify_odd

logger = logging.getLogger(__name__)


def classify(coeffs: QuadCoeffs) -> QuadVerdict:
    """Classify a normalized system with the classifier for its characteristic."""
    if coeffs.field.p == 2:
        return classify_even(coeffs)
    return classify_odd(coeffs)


def canonical_form(coeffs: QuadCoeffs) -> QuadVerdict:
    """
    Reduce a bivariate quadratic system to its canonical class.

    Args:
        coeffs: any coefficient set, cross term allowed
    Returns:
        QuadVerdict whose witness maps the input system to the canonical
        representative, or a NotPP verdict with a collision
    """
    normalized, prefix = normalize_cross_term(coeffs)
    verdict = classify(normalized)
    if not verdict.is_perm:
        return verdict
    verdict = verdict.with_prefix(prefix)
    if not verify_witness(coeffs.to_system(), verdict.canonical, verdict.witness):
        logger.error(f"Normalized witness fails on {coeffs.flat()}")
        raise ClassifierError(f"witness for {verdict.case_label} does not replay on the input")
    return verdict
