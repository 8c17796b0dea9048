"""
Classifier-versus-oracle sweeps over 3-homogeneous systems.
"""

import itertools
import logging
from typing import Iterator, Optional, Sequence

import numpy as np

from src.config import config
from src.errors import BudgetExceeded
from src.gf.field import FieldSpec
from src.homog3.classify import classify_t32
from src.homog3.system import HomogSystem
from src.permoracle.brute_force import brute_force

logger = logging.getLogger(__name__)


def homog_tuples(field: FieldSpec, exhaustive: bool = True, samples: int = 1000,
                 seed: Optional[int] = None, budget: Optional[int] = None) -> Iterator[tuple]:
    """
    Coefficient tuples (a1, a2, a3, b2, b3, b4) with a1 b4 != 0.
    """
    q = field.q
    if exhaustive:
        budget = budget if budget is not None else config.SCAN_BUDGET
        total = (q - 1) ** 2 * q ** 4
        if total > budget:
            raise BudgetExceeded(f"exhaustive 3-homogeneous scan over F_{q}", total, budget)
        nonzero, every = field.nonzero(), field.elements()
        return itertools.product(nonzero, every, every, every, every, nonzero)
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    draws = rng.integers(0, q, size=(samples, 6))
    draws[:, 0] = rng.integers(1, q, size=samples)
    draws[:, 5] = rng.integers(1, q, size=samples)
    return (tuple(int(v) for v in row) for row in draws)


def scan_record(field: FieldSpec, coeffs: Sequence[int]) -> dict:
    system = HomogSystem.of(field, coeffs)
    verdict = classify_t32(system)
    oracle = brute_force(system.to_system())
    agree = verdict.is_perm == oracle.is_perm
    if not agree:
        logger.warning(f"3-homogeneous classifier and oracle disagree on {system.flat()}")
    return {
        'coeffs': system.to_record(),
        'verdict': verdict.to_record(field),
        'oracle': oracle.to_record(field),
        'agree': agree,
    }


def scan_homog3(field: FieldSpec, exhaustive: bool = True, samples: int = 1000,
                seed: Optional[int] = None, budget: Optional[int] = None) -> Iterator[dict]:
    """
    Stream scan records for every system with a1 b4 != 0, or a seeded sample of them.
    """
    logger.info(f"3-homogeneous scan over {field!r}: {'exhaustive' if exhaustive else f'{samples} samples'}")
    checked = disagreements = 0
    for coeffs in homog_tuples(field, exhaustive, samples, seed, budget):
        record = scan_record(field, coeffs)
        checked += 1
        disagreements += not record['agree']
        yield record
    logger.info(f"3-homogeneous scan finished: {checked} systems, {disagreements} disagreements")
