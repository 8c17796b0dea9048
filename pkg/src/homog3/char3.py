"""
Decomposition R = mu o (t^3 - gamma t) o nu of degree-three permutations in characteristic 3.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.config import config
from src.errors import BudgetExceeded, PreconditionViolated, WrongCharacteristic
from src.gf.field import FieldSpec
from src.gf.residues import nonresidues
from src.homog3.rational import MobiusMap, ProjPoint, RationalMap, pgl2, rat_is_perm, rat_table
from src.mpoly.serialize import element_to_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Char3Witness:
    mu: MobiusMap
    gamma: int
    nu: MobiusMap

    def to_record(self) -> dict:
        field = self.mu.field
        return {
            'mu': self.mu.to_record(),
            'gamma': element_to_json(field, self.gamma),
            'nu': self.nu.to_record(),
        }


def cubic_core(field: FieldSpec, gamma: int) -> RationalMap:
    """t^3 - gamma t."""
    return RationalMap(field, (0, field.neg(gamma), 0, 1), (1,))


def decompose_char3(R: RationalMap, max_q: Optional[int] = None) -> Optional[Char3Witness]:
    """
    Search nu over PGL(2, q) (identity first) and gamma over 0 and the
    nonresidues, solving mu from the images of 0, 1 and infinity.

    Args:
        R: degree-three map over a field of characteristic 3
        max_q: largest field order searched, config default when None
    Returns: the first witness, or None when R does not permute P^1
    """
    field = R.field
    if field.p != 3:
        raise WrongCharacteristic(f"decompose_char3 needs characteristic 3, got {field.p}")
    if R.degree != 3:
        raise PreconditionViolated("degree3", f"{R!r} has degree {R.degree}")
    max_q = max_q if max_q is not None else config.CHAR3_MAX_Q
    q = field.q
    if q > max_q:
        raise BudgetExceeded(f"PGL(2, {q}) enumeration", q ** 3 - q, max_q ** 3 - max_q)
    if not rat_is_perm(R):
        return None

    target = rat_table(R)
    cores = [(gamma, rat_table(cubic_core(field, gamma))) for gamma in [0] + nonresidues(field)]
    sample = np.array([0, 1, q], dtype=np.int64)
    dst = [ProjPoint.from_index(int(k), q) for k in target[sample]]
    for nu in pgl2(field):
        nu_table = nu.table()
        for gamma, core in cores:
            inner = core[nu_table]
            src = [ProjPoint.from_index(int(k), q) for k in inner[sample]]
            mu = MobiusMap.from_three_points(field, src, dst)
            if np.array_equal(mu.table()[inner], target):
                logger.debug(f"Char-3 decomposition of {R!r}: mu={mu}, gamma={gamma}, nu={nu}")
                return Char3Witness(mu, gamma, nu)
    return None
