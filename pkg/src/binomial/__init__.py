"""
Binomials x^3 + a x^(2q+1) over F_{q^2}: expansion, prediction and oracle sweeps.
"""

from src.binomial.expand import expand, expand_even, expand_odd
from src.binomial.extension import QuadExt, build_ext
from src.binomial.predict import family21, family22, predict, predict_even, predict_odd
from src.binomial.scan import BinomialReport, binomial_report, check_scan_budget, scan

__all__ = [
    'expand', 'expand_even', 'expand_odd',
    'QuadExt', 'build_ext',
    'family21', 'family22', 'predict', 'predict_even', 'predict_odd',
    'BinomialReport', 'binomial_report', 'check_scan_budget', 'scan',
]
