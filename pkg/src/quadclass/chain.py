"""
Incremental construction of witness chains for bivariate systems.
"""

from typing import List, Sequence

from src.equiv.linalg import diagonal, swap2
from src.equiv.transforms import apply_step
from src.equiv.witness import CsShift, EquivWitness, LeftLinear, Relabel, RightLinear, Step
from src.mpoly.poly import PolySystem


class ChainBuilder:
    """
    Applies steps to a running system while recording them.
    """

    def __init__(self, system: PolySystem):
        self.system = system
        self.steps: List[Step] = []

    def push(self, step: Step) -> "ChainBuilder":
        self.system = apply_step(self.system, step)
        self.steps.append(step)
        return self

    def left(self, matrix) -> "ChainBuilder":
        return self.push(LeftLinear(tuple(tuple(r) for r in matrix)))

    def right(self, matrix) -> "ChainBuilder":
        return self.push(RightLinear(tuple(tuple(r) for r in matrix)))

    def swap_coordinates(self) -> "ChainBuilder":
        return self.push(LeftLinear(swap2()))

    def swap_variables(self) -> "ChainBuilder":
        return self.push(Relabel((1, 0)))

    def strip(self, order: Sequence[int] = (0, 1)) -> "ChainBuilder":
        """
        CS-shift away every term of coordinate i that is free of its own variable order[i].
        """
        shifts = []
        for i, own in enumerate(order):
            _, rest = self.system[i].split_on(own)
            shifts.append(-rest)
        if all(h.is_zero() for h in shifts):
            return self
        order = tuple(order)
        return self.push(CsShift(tuple(shifts), None if order == tuple(range(len(order))) else order))

    def monic(self) -> "ChainBuilder":
        """
        Scale each coordinate that is a single monomial to coefficient 1.
        """
        field = self.system.field
        scales = []
        for f in self.system:
            if len(f.terms) == 1:
                scales.append(field.inv(next(iter(f.terms.values()))))
            else:
                scales.append(1)
        if all(s == 1 for s in scales):
            return self
        return self.left(diagonal(scales))

    def witness(self) -> EquivWitness:
        return EquivWitness(tuple(self.steps))
