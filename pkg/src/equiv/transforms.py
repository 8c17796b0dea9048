"""
Applying linear, coordinate-shift and relabelling steps to polynomial systems,
and replaying witness chains.
"""

import logging
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from src.errors import ArityMismatch, EquivError, FieldMismatch, IllegalShiftDependency, PermSysError, SingularMatrix
from src.equiv import linalg
from src.equiv.witness import CsShift, EquivWitness, LeftLinear, Relabel, RightLinear, Step
from src.mpoly.poly import MultiPoly, PolySystem, compose_linear

logger = logging.getLogger(__name__)


def _require_invertible(system: PolySystem, matrix, name: str):
    linalg.check_square(matrix, system.nvars)
    if not linalg.is_invertible(system.field, matrix):
        raise SingularMatrix(f"{name} {matrix} is singular over {system.field!r}")


def apply_left(system: PolySystem, rho) -> PolySystem:
    _require_invertible(system, rho, "rho")
    polys = []
    for row in rho:
        acc = MultiPoly.zero(system.field, system.nvars)
        for c, f in zip(row, system):
            if c:
                acc = acc + f.scale(c)
        polys.append(acc)
    return PolySystem(polys)


def apply_right(system: PolySystem, sigma) -> PolySystem:
    _require_invertible(system, sigma, "sigma")
    return compose_linear(system, sigma)


def apply_linear(system: PolySystem, rho, sigma) -> PolySystem:
    """
    rho o F o sigma.

    Args:
        system: F
        rho: invertible matrix acting on the outputs
        sigma: invertible matrix acting on the inputs
    Returns: reduced PolySystem
    """
    return apply_left(apply_right(system, sigma), rho)


def is_univariate_permutation(poly: MultiPoly, index: int) -> bool:
    """
    True if poly depends only on x_index and permutes F_q as a function of it.
    """
    if poly.variables() != frozenset({index}):
        return False
    q = poly.field.q
    columns = [np.zeros(q, dtype=np.int64) for _ in range(poly.nvars)]
    columns[index] = np.arange(q, dtype=np.int64)
    values = poly.eval_columns(columns)
    return len(np.unique(values)) == q


def check_cs_shape(system: PolySystem, shifts: Sequence[MultiPoly], order: Sequence[int]):
    """
    Validate a coordinate shift against the system's triangular shape.

    With j0 the first coordinate receiving a nonzero shift: each shift i uses
    only order[:i]; coordinates before j0 use only order[:j0]; every later
    coordinate i is P(x_order[i]) + R with P a univariate permutation and R
    free of x_order[i:].
    """
    n = system.nvars
    nonzero = [i for i, h in enumerate(shifts) if not h.is_zero()]
    if not nonzero:
        return
    for i, h in enumerate(shifts):
        allowed = frozenset(order[:i])
        if not h.depends_only_on(allowed):
            raise IllegalShiftDependency(
                f"shift {i} uses variables {sorted(h.variables() - allowed)}, only {sorted(allowed)} allowed"
            )
    j0 = nonzero[0]
    head = frozenset(order[:j0])
    for i in range(j0):
        if not system[i].depends_only_on(head):
            raise IllegalShiftDependency(f"coordinate {i} must depend only on variables {sorted(head)}")
    for i in range(j0, n):
        own = order[i]
        own_part, rest = system[i].split_on(own)
        if not rest.depends_only_on(order[:i]):
            raise IllegalShiftDependency(f"coordinate {i} has terms outside variables {sorted(order[:i + 1])}")
        if not is_univariate_permutation(own_part, own):
            raise IllegalShiftDependency(f"coordinate {i} is not a permutation of x{own} plus earlier terms")


def apply_cs_shift(system: PolySystem, shifts: Sequence[MultiPoly], order: Optional[Sequence[int]] = None) -> PolySystem:
    """
    Add shifts[i] to coordinate i after checking the CS legality rules.
    """
    if len(shifts) != system.nvars:
        raise ArityMismatch(f"{len(shifts)} shifts for a system of size {system.nvars}")
    for h in shifts:
        if h.field != system.field:
            raise FieldMismatch("shift polynomial over another field")
        if h.nvars != system.nvars:
            raise ArityMismatch("shift polynomial in the wrong number of variables")
    order = tuple(order) if order is not None else tuple(range(system.nvars))
    check_cs_shape(system, shifts, order)
    return PolySystem([f + h for f, h in zip(system, shifts)])


def apply_relabel(system: PolySystem, perm: Sequence[int]) -> PolySystem:
    """
    Replace x_perm[i] by x_i in every coordinate.
    """
    n = system.nvars
    if len(perm) != n:
        raise ArityMismatch(f"relabel of length {len(perm)} for {n} variables")
    images = [None] * n
    for i, v in enumerate(perm):
        images[v] = MultiPoly.variable(system.field, n, i)
    return system.substitute(images)


STEP_HANDLERS: Dict[type, Callable[[PolySystem, Step], PolySystem]] = {
    LeftLinear: lambda F, s: apply_left(F, s.matrix),
    RightLinear: lambda F, s: apply_right(F, s.matrix),
    CsShift: lambda F, s: apply_cs_shift(F, s.shifts, s.resolved_order()),
    Relabel: lambda F, s: apply_relabel(F, s.perm),
}


def apply_step(system: PolySystem, step: Step) -> PolySystem:
    handler = STEP_HANDLERS.get(type(step))
    if handler is None:
        raise EquivError(f"unsupported witness step {step!r}")
    return handler(system, step)


def replay(system: PolySystem, witness: EquivWitness) -> PolySystem:
    for step in witness:
        system = apply_step(system, step)
    return system


def verify_witness(source: PolySystem, target: PolySystem, witness: EquivWitness) -> bool:
    """
    Replay the witness on source and compare with target term by term.
    Any failure while replaying counts as a mismatch.
    """
    if source.field != target.field or source.nvars != target.nvars:
        return False
    try:
        result = replay(source, witness)
    except PermSysError as e:
        logger.debug(f"Witness replay failed: {e}")
        return False
    return result == target
