"""
Symmetry-closed case matching shared by the odd and even classifiers.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from src.errors import ClassificationGap, ClassifierError
from src.equiv.transforms import verify_witness
from src.gf.linearized import is_linearized_perm
from src.permoracle.brute_force import brute_force
from src.quadclass.chain import ChainBuilder
from src.quadclass.coeffs import CLASS_FIFTH, NOT_PP, SYMMETRIES, QuadCoeffs, QuadVerdict
from src.quadclass.representatives import (
    canonical_representative,
    fifth_class_linearized,
    fifth_class_parameters,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Case:
    """
    A case of the classification: a coefficient predicate and a chain builder
    that drives the system to its class representative and returns the class label.
    """
    label: str
    matches: Callable[[QuadCoeffs], bool]
    build: Callable[[QuadCoeffs, ChainBuilder], str]


def match_cases(coeffs: QuadCoeffs, cases: Sequence[Case]) -> QuadVerdict:
    """
    Try every symmetry, then every case in order; first match wins.
    Falls back to the brute-force oracle for a collision when nothing matches.
    """
    field = coeffs.field
    source = coeffs.to_system()
    for symmetry in SYMMETRIES:
        g = symmetry.act(coeffs)
        if g.a[1] != 0:
            continue
        for case in cases:
            if not case.matches(g):
                continue
            chain = ChainBuilder(g.to_system())
            label = case.build(g, chain)
            witness = symmetry.witness() + chain.witness()

            linearized: Optional[Tuple[int, int, int]] = None
            params = None
            if label == CLASS_FIFTH:
                params = fifth_class_parameters(chain.system)
                linearized = tuple(fifth_class_linearized(field, params))
                if not is_linearized_perm(field, linearized):
                    raise ClassifierError(
                        f"case {case.label} reached the fifth class with a non-permuting linearized part"
                    )
            canonical = canonical_representative(field, label, params)
            if not verify_witness(source, canonical, witness):
                logger.error(f"Witness for case {case.label} does not replay on {coeffs.flat()}")
                raise ClassifierError(f"internal witness failure for case {case.label}")
            logger.debug(f"{coeffs.flat()} matched {case.label} under {symmetry}")
            return QuadVerdict(True, case.label, label, canonical, witness, symmetry, linearized)

    verdict = brute_force(source)
    if verdict.is_perm:
        logger.error(f"No case matched permutation {source.to_infix()}")
        raise ClassificationGap(f"no case matches the permutation {source.to_infix()} over {field!r}")
    return QuadVerdict(False, NOT_PP, collision=verdict.collision)
