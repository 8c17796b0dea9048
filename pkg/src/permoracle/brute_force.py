"""
Exhaustive permutation test: evaluate F on all of F_q^n in vectorized chunks
and track produced values in a seen-bitset indexed by value rank.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from src.config import config
from src.errors import BudgetExceeded
from src.mpoly.poly import PolySystem
from src.permoracle.verdict import PermVerdict

logger = logging.getLogger(__name__)


def index_to_point(k: int, q: int, n: int) -> Tuple[int, ...]:
    """
    Point with index k = sum x_i q^i.
    """
    coords = []
    for _ in range(n):
        coords.append(k % q)
        k //= q
    return tuple(coords)


def point_to_index(point, q: int) -> int:
    k = 0
    for x in reversed(point):
        k = k * q + int(x)
    return k


def point_columns(q: int, n: int, start: int, stop: int) -> List[np.ndarray]:
    idx = np.arange(start, stop, dtype=np.int64)
    columns = []
    for _ in range(n):
        columns.append(idx % q)
        idx = idx // q
    return columns


def value_ranks(q: int, values: List[np.ndarray]) -> np.ndarray:
    ranks = np.zeros_like(values[0])
    for v in reversed(values):
        ranks = ranks * q + v
    return ranks


def evaluate_ranks(system: PolySystem, start: int, stop: int) -> np.ndarray:
    q = system.field.q
    return value_ranks(q, system.eval_columns(point_columns(q, system.nvars, start, stop)))


def first_preimage(system: PolySystem, rank: int, before: int, chunk_size: int) -> int:
    for start in range(0, before, chunk_size):
        stop = min(before, start + chunk_size)
        hits = np.flatnonzero(evaluate_ranks(system, start, stop) == rank)
        if hits.size:
            return start + int(hits[0])
    raise AssertionError("collision value must have an earlier preimage")


def brute_force(system: PolySystem, budget: Optional[int] = None, chunk_size: Optional[int] = None) -> PermVerdict:
    """
    Decide bijectivity of F by evaluating every point.

    Args:
        system: F = (f_1, ..., f_n)
        budget: maximum number of points, defaults to the configured scan budget
        chunk_size: points evaluated per vectorized block
    Returns: PermVerdict; a collision pairs the earliest repeated point with its first preimage
    """
    q, n = system.field.q, system.nvars
    total = q ** n
    budget = budget if budget is not None else config.SCAN_BUDGET
    chunk_size = chunk_size or config.CHUNK_SIZE
    if total > budget:
        raise BudgetExceeded(f"brute force over GF({q})^{n}", total, budget)

    seen = np.zeros(total, dtype=bool)
    for start in range(0, total, chunk_size):
        stop = min(total, start + chunk_size)
        ranks = evaluate_ranks(system, start, stop)

        # repeats inside the chunk: stable sort keeps the first occurrence unmarked
        order = np.argsort(ranks, kind='stable')
        sorted_ranks = ranks[order]
        repeat_sorted = np.zeros(len(ranks), dtype=bool)
        repeat_sorted[1:] = sorted_ranks[1:] == sorted_ranks[:-1]
        repeated = np.zeros(len(ranks), dtype=bool)
        repeated[order] = repeat_sorted

        bad = seen[ranks] | repeated
        if bad.any():
            offset = int(np.flatnonzero(bad)[0])
            second = start + offset
            first = first_preimage(system, int(ranks[offset]), second, chunk_size)
            collision = (index_to_point(first, q, n), index_to_point(second, q, n))
            logger.debug(f"Collision {collision} for {system.to_infix()}")
            return PermVerdict(False, collision=collision)
        seen[ranks] = True

    return PermVerdict(True)


def verify_collision(system: PolySystem, verdict: PermVerdict) -> bool:
    """
    Re-evaluate a reported collision pair.
    """
    if verdict.collision is None:
        return False
    p1, p2 = verdict.collision
    return p1 != p2 and system.evaluate(p1) == system.evaluate(p2)
