"""
Witnesses carrying a quadratic system to the identity (x_1, ..., x_n).

Odd characteristic only. The linear part L is inverted on the left, leaving
G = x + H(x) + c. A basis m_0, ..., m_{n-1} is then grown in stages so that
each m_k . H is a quadratic form in m_0 . x, ..., m_{k-1} . x; in the new
coordinates the system is triangular and one CS shift removes everything
but the identity.
"""

import logging
from typing import List, Optional

from src.equiv import linalg
from src.equiv.transforms import apply_left, apply_right, verify_witness
from src.equiv.witness import CsShift, EquivWitness, LeftLinear, RightLinear
from src.errors import ClassifierError, EvenCharacteristic, PreconditionViolated
from src.mpoly.poly import MultiPoly, PolySystem

logger = logging.getLogger(__name__)


def linear_part(system: PolySystem) -> linalg.Matrix:
    n = system.nvars
    unit = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    return tuple(tuple(f.coefficient_of(unit[j]) for j in range(n)) for f in system)


def quadratic_matrices(system: PolySystem) -> List[List[List[int]]]:
    """
    Symmetric matrices S_i with x^T S_i x the degree-2 part of f_i.
    """
    field, n = system.field, system.nvars
    half = field.inv(field.from_int(2))
    matrices = []
    for f in system:
        S = [[0] * n for _ in range(n)]
        for exps, c in f.terms.items():
            if sum(exps) != 2:
                continue
            support = [j for j, e in enumerate(exps) if e]
            if len(support) == 1:
                S[support[0]][support[0]] = c
            else:
                j, k = support
                S[j][k] = S[k][j] = field.mul(c, half)
        matrices.append(S)
    return matrices


def _apply(field, S, v) -> List[int]:
    return [field.sum(field.mul(a, b) for a, b in zip(row, v)) for row in S]


def triangular_basis(system: PolySystem) -> Optional[linalg.Matrix]:
    """
    Rows m_k making m_k . H depend only on m_0 . x, ..., m_{k-1} . x, or None.

    H is the quadratic part after the linear part has been normalised to the
    identity, so the input must already have identity linear part.
    """
    field, n = system.field, system.nvars
    matrices = quadratic_matrices(system)
    basis: List[tuple] = []
    while len(basis) < n:
        # lambda . H lies in the span of the current forms iff S(lambda) kills their annihilator
        annihilator = linalg.nullspace(field, basis, n)
        conditions = []
        for v in annihilator:
            images = [_apply(field, S, v) for S in matrices]
            for j in range(n):
                conditions.append([images[i][j] for i in range(n)])
        admissible = linalg.nullspace(field, conditions, n)
        stage = []
        for vector in admissible:
            if linalg.rank(field, basis + stage + [vector]) > len(basis) + len(stage):
                stage.append(vector)
        if not stage:
            logger.debug(f"Triangular basis search stuck at rank {len(basis)} for {system.to_infix()}")
            return None
        basis.extend(stage)
    return tuple(basis)


def identity_witness(system: PolySystem) -> Optional[EquivWitness]:
    """
    Build a witness F ~ (x_1, ..., x_n) for a system of degree at most 2.

    Args:
        system: F over an odd-characteristic field
    Returns:
        EquivWitness replaying to the identity system, or None when the
        linear part is singular or no triangular basis exists
    """
    field, n = system.field, system.nvars
    if field.is_even:
        raise EvenCharacteristic("quadratic forms need odd characteristic here")
    if any(f.degree > 2 for f in system):
        raise PreconditionViolated("quadratic", f"{system.to_infix()} has degree above 2")

    L = linear_part(system)
    if not linalg.is_invertible(field, L):
        return None
    L_inv = linalg.inverse(field, L)
    M = triangular_basis(apply_left(system, L_inv))
    if M is None:
        return None

    rho = linalg.mat_mul(field, M, L_inv)
    sigma = linalg.inverse(field, M)
    triangular = apply_right(apply_left(system, rho), sigma)
    shifts = tuple(MultiPoly.variable(field, n, k) - g for k, g in enumerate(triangular))
    witness = EquivWitness((LeftLinear(rho), RightLinear(sigma), CsShift(shifts)))

    if not verify_witness(system, PolySystem.identity(field, n), witness):
        logger.error(f"Constructed witness for {system.to_infix()} does not replay")
        raise ClassifierError(f"identity witness for {system.to_infix()} failed to replay")
    return witness
