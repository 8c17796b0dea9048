"""
Permutation oracles: exhaustive evaluation and Hermite's criterion.
"""

from .verdict import PermVerdict
from .brute_force import brute_force, verify_collision
from .hermite import hermite_check

__all__ = ['PermVerdict', 'brute_force', 'verify_collision', 'hermite_check']
