"""
Predicted-versus-oracle sweep over every coefficient a of x^3 + a x^(2q+1).
"""

import logging
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import List, Optional, Tuple

from src.binomial.expand import expand
from src.binomial.extension import QuadExt
from src.binomial.predict import predict
from src.config import config
from src.errors import BudgetExceeded
from src.mpoly.serialize import element_to_json, point_to_json
from src.permoracle.brute_force import brute_force

logger = logging.getLogger(__name__)

FLAG_DISAGREE = "disagreement"
FLAG_CUBE_NOT_BIJECTIVE = "a-zero-cube-not-bijective"


@dataclass(frozen=True)
class BinomialReport:
    q: int
    a1: int
    a2: int
    predicted: bool
    case_label: str
    oracle: bool
    collision: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None
    flags: Tuple[str, ...] = dc_field(default_factory=tuple)

    @property
    def agree(self) -> bool:
        return self.predicted == self.oracle

    def to_record(self, ext: QuadExt) -> dict:
        base = ext.base
        record = {
            'q': self.q,
            'a1': element_to_json(base, self.a1),
            'a2': element_to_json(base, self.a2),
            'predicted': self.predicted,
            'case': self.case_label,
            'oracle': self.oracle,
            'agree': self.agree,
            'flags': list(self.flags),
        }
        if self.collision is not None:
            record['collision'] = [point_to_json(base, p) for p in self.collision]
        return record


def binomial_report(ext: QuadExt, a: int, strict: bool = False) -> BinomialReport:
    """
    Predict and brute-force one coefficient a, given as an F_{q^2} element index.
    """
    a1, a2 = ext.to_pair(a)
    predicted, label = predict(a1, a2, ext, strict)
    verdict = brute_force(expand(a1, a2, ext))
    flags = []
    if predicted != verdict.is_perm:
        flags.append(FLAG_DISAGREE)
        logger.warning(f"x^3 + ({a1}, {a2}) x^(2q+1) over {ext!r}: predicted {predicted} ({label}), "
                       f"oracle {verdict.is_perm}")
    if a == 0 and gcd(3, ext.order - 1) != 1 and predicted:
        flags.append(FLAG_CUBE_NOT_BIJECTIVE)
    return BinomialReport(ext.q, a1, a2, predicted, label, verdict.is_perm, verdict.collision, tuple(flags))


def check_scan_budget(ext: QuadExt, budget: Optional[int] = None):
    """
    A full sweep evaluates q^2 systems at q^2 points each.
    """
    budget = budget if budget is not None else config.SCAN_BUDGET
    cost = ext.order ** 2
    if cost > budget:
        raise BudgetExceeded(f"binomial scan over {ext!r}", cost, budget)


def scan(ext: QuadExt, strict: bool = False, budget: Optional[int] = None) -> List[BinomialReport]:
    """
    One report for each a in F_{q^2}, in element index order.

    Args:
        ext: the extension F_{q^2} = F_q(alpha)
        strict: the coupled reading of case 2.1
        budget: cap on q^4 point evaluations, config default when None
    Returns: reports, a = 0 first
    """
    check_scan_budget(ext, budget)
    logger.info(f"Binomial scan over {ext!r}: {ext.order} coefficients, strict={strict}")
    reports = [binomial_report(ext, a, strict) for a in ext.elements()]
    disagreements = sum(not r.agree for r in reports)
    logger.info(f"Binomial scan finished: {sum(r.oracle for r in reports)} permutations, "
                f"{disagreements} disagreements")
    return reports
