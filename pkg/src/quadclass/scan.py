"""
Classifier-versus-oracle sweeps over bivariate quadratic coefficient sets.
"""

import itertools
import logging
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from src.config import config
from src.errors import BudgetExceeded
from src.gf.field import FieldSpec
from src.permoracle.brute_force import brute_force
from src.quadclass.canonical import canonical_form
from src.quadclass.coeffs import QuadCoeffs

logger = logging.getLogger(__name__)

Flat = Tuple[int, ...]


def exhaustive_tuples(field: FieldSpec, budget: Optional[int] = None) -> Iterator[Flat]:
    """
    Every (a1..a5, b1..b5) in lexicographic order of element indices.
    """
    budget = budget if budget is not None else config.SCAN_BUDGET
    total = field.q ** 10
    if total > budget:
        raise BudgetExceeded(f"exhaustive quadratic scan over F_{field.q}", total, budget)
    return itertools.product(range(field.q), repeat=10)


def sampled_tuples(field: FieldSpec, samples: int, seed: Optional[int] = None) -> Iterator[Flat]:
    """
    samples coefficient tuples drawn uniformly with numpy's default generator.
    """
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    draws = rng.integers(0, field.q, size=(samples, 10))
    for row in draws:
        yield tuple(int(v) for v in row)


def scan_record(field: FieldSpec, flat: Sequence[int]) -> dict:
    """
    Classify one tuple and pair the verdict with the brute-force oracle.
    """
    coeffs = QuadCoeffs.of(field, flat)
    verdict = canonical_form(coeffs)
    oracle = brute_force(coeffs.to_system())
    agree = verdict.is_perm == oracle.is_perm
    if not agree:
        logger.warning(f"Classifier and oracle disagree on {tuple(flat)}")
    return {
        'coeffs': coeffs.to_record(),
        'verdict': verdict.to_record(field),
        'oracle': oracle.to_record(field),
        'agree': agree,
    }


def scan_quad(field: FieldSpec, exhaustive: bool = False, samples: int = 1000,
              seed: Optional[int] = None, budget: Optional[int] = None) -> Iterator[dict]:
    """
    Stream scan records for a whole coefficient space or a seeded sample of it.

    Args:
        field: base field
        exhaustive: enumerate all q^10 tuples instead of sampling
        samples: sample size when not exhaustive
        seed: sampling seed, config default when None
        budget: maximal number of tuples for the exhaustive mode
    """
    tuples = exhaustive_tuples(field, budget) if exhaustive else sampled_tuples(field, samples, seed)
    mode = "exhaustive" if exhaustive else f"{samples} samples"
    logger.info(f"Quadratic scan over {field!r}: {mode}")
    checked = disagreements = 0
    for flat in tuples:
        record = scan_record(field, flat)
        checked += 1
        disagreements += not record['agree']
        yield record
    logger.info(f"Quadratic scan finished: {checked} systems, {disagreements} disagreements")
