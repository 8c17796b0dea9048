"""
Probe of the claim that every quadratic permutation system in three variables
over an odd field is equivalent to (x_1, x_2, x_3).

Permutations for which no witness is built are reported as "unresolved":
the witness search is not complete, so they are candidates, never
counterexamples.
"""

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.cli.pool import ordered_map
from src.config import config
from src.equiv import linalg
from src.equiv.triangular import identity_witness
from src.errors import EvenCharacteristic, PreconditionViolated
from src.gf.field import FieldSpec
from src.mpoly.poly import MultiPoly, PolySystem
from src.permoracle.brute_force import brute_force

logger = logging.getLogger(__name__)

NVARS = 3
DEFAULT_DENSITY = 0.25

STATUS_RESOLVED = "resolved"
STATUS_UNRESOLVED = "unresolved"
STATUS_NOT_PERM = "not-perm"


def quadratic_monomials(n: int = NVARS) -> List[Tuple[int, ...]]:
    """x_j x_k for j <= k, in lexicographic order of (j, k)."""
    monomials = []
    for j in range(n):
        for k in range(j, n):
            exps = [0] * n
            exps[j] += 1
            exps[k] += 1
            monomials.append(tuple(exps))
    return monomials


def build_system(field: FieldSpec, linear, quadratic) -> PolySystem:
    """
    f_i = sum_j linear[i][j] x_j + sum_m quadratic[i][m] x^(monomial m).
    """
    n = len(linear)
    monomials = quadratic_monomials(n)
    polys = []
    for i in range(n):
        terms = {}
        for j in range(n):
            exps = [0] * n
            exps[j] = 1
            terms[tuple(exps)] = int(linear[i][j])
        for exps, c in zip(monomials, quadratic[i]):
            terms[exps] = int(c)
        polys.append(MultiPoly(field, n, terms))
    return PolySystem(polys)


def sample_systems(field: FieldSpec, samples: int, seed: Optional[int] = None,
                   density: float = DEFAULT_DENSITY) -> Iterator[PolySystem]:
    """
    Seeded systems with an invertible linear part and sparse quadratic part.

    Each quadratic coefficient is nonzero with probability `density`.
    """
    q = field.q
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    width = len(quadratic_monomials(NVARS))
    for _ in range(samples):
        while True:
            linear = rng.integers(0, q, size=(NVARS, NVARS))
            if linalg.is_invertible(field, linalg.as_matrix(linear)):
                break
        mask = rng.random((NVARS, width)) < density
        quadratic = np.where(mask, rng.integers(1, q, size=(NVARS, width)), 0)
        yield build_system(field, linear, quadratic)


def diagonal_square_systems(field: FieldSpec) -> Iterator[PolySystem]:
    """
    Every system x_i + sum_j c_ij x_j^2 over F_3.
    """
    if field.q != 3:
        raise PreconditionViolated("q3", f"exhaustive conjecture mode runs over F_3 only, got {field!r}")
    identity = linalg.identity(NVARS)
    squares = [m for m in quadratic_monomials(NVARS) if max(m) == 2]
    monomials = quadratic_monomials(NVARS)
    for flat in itertools.product(field.elements(), repeat=NVARS * NVARS):
        quadratic = [[0] * len(monomials) for _ in range(NVARS)]
        for i in range(NVARS):
            for j in range(NVARS):
                quadratic[i][monomials.index(squares[j])] = flat[i * NVARS + j]
        yield build_system(field, identity, quadratic)


def conjecture_record(system: PolySystem) -> Dict:
    """
    Oracle verdict plus, for permutations, an identity witness or "unresolved".
    """
    field = system.field
    verdict = brute_force(system)
    record = {'system': system.to_infix(), 'is_perm': verdict.is_perm}
    if not verdict.is_perm:
        record['status'] = STATUS_NOT_PERM
        record['witness'] = None
        return record
    witness = identity_witness(system)
    if witness is None:
        logger.warning(f"No witness built for permutation {system.to_infix()}")
        record['status'] = STATUS_UNRESOLVED
        record['witness'] = None
    else:
        record['status'] = STATUS_RESOLVED
        record['witness'] = witness.to_records(field)
    return record


def conjecture_scan(field: FieldSpec, samples: int = 1000, seed: Optional[int] = None,
                    exhaustive: bool = False, density: float = DEFAULT_DENSITY,
                    workers: int = 1) -> Tuple[List[Dict], Dict]:
    """
    Run the probe and collect permutation records plus a summary.

    Args:
        field: odd-characteristic F_q
        samples: number of sampled systems
        seed: sampling seed, config default when None
        exhaustive: enumerate x_i + sum_j c_ij x_j^2 over F_3 instead of sampling
        density: probability of a nonzero quadratic coefficient when sampling
        workers: process count for the oracle and witness work
    Returns:
        (records for every permutation found, summary record)
    """
    if field.is_even:
        raise EvenCharacteristic("the conjecture probe needs odd characteristic")
    seed = config.DEFAULT_SEED if seed is None else seed
    systems = diagonal_square_systems(field) if exhaustive else sample_systems(field, samples, seed, density)
    mode = "exhaustive-diagonal-squares" if exhaustive else "sampled"
    logger.info(f"Conjecture probe over {field!r}: {mode}")

    checked = 0
    permutations: List[Dict] = []
    for record in ordered_map(conjecture_record, systems, workers):
        checked += 1
        if record['is_perm']:
            permutations.append(record)

    unresolved = sum(r['status'] == STATUS_UNRESOLVED for r in permutations)
    summary = {
        'summary': 'conjecture-scan',
        'q': field.q,
        'mode': mode,
        'seed': None if exhaustive else seed,
        'systems': checked,
        'permutations': len(permutations),
        'resolved': len(permutations) - unresolved,
        'unresolved': unresolved,
    }
    logger.info(f"Conjecture probe finished: {len(permutations)} permutations, {unresolved} unresolved")
    return permutations, summary
