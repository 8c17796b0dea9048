"""
Linear and coordinate-shift equivalence with replayable witness chains.
"""

from .witness import CsShift, EquivWitness, LeftLinear, Relabel, RightLinear
from .transforms import apply_cs_shift, apply_linear, apply_relabel, apply_step, replay, verify_witness
from .triangular import identity_witness, triangular_basis

__all__ = [
    'CsShift',
    'EquivWitness',
    'LeftLinear',
    'Relabel',
    'RightLinear',
    'apply_cs_shift',
    'apply_linear',
    'apply_relabel',
    'apply_step',
    'replay',
    'verify_witness',
    'identity_witness',
    'triangular_basis',
]
