"""
3-homogeneous bivariate systems and degree-three rational permutations of P^1(F_q).
"""

from src.homog3.char3 import Char3Witness, decompose_char3
from src.homog3.classify import CASE_CUBIC, CASE_NOT_PP, CASE_PROPORTIONAL, HomogVerdict, classify_t32
from src.homog3.drs import drs_discriminants, drs_family, drs_map, drs_witness, shape_conforming_permutations
from src.homog3.forms import quad_form_irreducible
from src.homog3.product import product_perm_equiv
from src.homog3.rational import INFINITY, MobiusMap, ProjPoint, RationalMap, pgl2, rat_eval, rat_is_perm
from src.homog3.scan import scan_homog3
from src.homog3.system import BinaryForm, HomogSystem, to_rational

__all__ = [
    'Char3Witness', 'decompose_char3',
    'CASE_CUBIC', 'CASE_NOT_PP', 'CASE_PROPORTIONAL', 'HomogVerdict', 'classify_t32',
    'drs_discriminants', 'drs_family', 'drs_map', 'drs_witness', 'shape_conforming_permutations',
    'quad_form_irreducible', 'product_perm_equiv',
    'INFINITY', 'MobiusMap', 'ProjPoint', 'RationalMap', 'pgl2', 'rat_eval', 'rat_is_perm',
    'scan_homog3', 'BinaryForm', 'HomogSystem', 'to_rational',
]
