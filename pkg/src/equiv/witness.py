"""
Equivalence witness chains: ordered steps that carry a system to an equivalent one.
"""

from dataclasses import dataclass, field as dc_field
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from src.errors import WitnessFormatError
from src.equiv.linalg import Matrix, as_matrix
from src.gf.field import FieldSpec
from src.mpoly.poly import MultiPoly
from src.mpoly.serialize import element_from_json, element_to_json, poly_from_pairs, poly_to_pairs


def _check_permutation(perm: Sequence[int], what: str):
    if sorted(perm) != list(range(len(perm))):
        raise WitnessFormatError(f"{what} {tuple(perm)} is not a permutation of 0..{len(perm) - 1}")


@dataclass(frozen=True)
class LeftLinear:
    """G = rho o F: G_i = sum_j rho[i][j] F_j."""
    matrix: Matrix
    kind = "left_linear"


@dataclass(frozen=True)
class RightLinear:
    """G = F o sigma with sigma(x) = M x."""
    matrix: Matrix
    kind = "right_linear"


@dataclass(frozen=True)
class CsShift:
    """
    Adds shifts[i] to coordinate i. `order` lists variables from first to
    last; coordinate i owns variable order[i] and its shift may only use
    order[:i]. The default order is the identity.
    """
    shifts: Tuple[MultiPoly, ...]
    order: Optional[Tuple[int, ...]] = None
    kind = "cs_shift"

    def __post_init__(self):
        if self.order is not None:
            _check_permutation(self.order, "CS order")
            if len(self.order) != len(self.shifts):
                raise WitnessFormatError("CS order and shift list differ in length")

    def resolved_order(self) -> Tuple[int, ...]:
        return self.order if self.order is not None else tuple(range(len(self.shifts)))


@dataclass(frozen=True)
class Relabel:
    """Variable relabelling: x_perm[i] is replaced by x_i."""
    perm: Tuple[int, ...]
    kind = "relabel"

    def __post_init__(self):
        _check_permutation(self.perm, "relabel")


Step = Union[LeftLinear, RightLinear, CsShift, Relabel]


@dataclass(frozen=True)
class EquivWitness:
    steps: Tuple[Step, ...] = dc_field(default_factory=tuple)

    def then(self, *steps: Step) -> "EquivWitness":
        return EquivWitness(self.steps + tuple(steps))

    def __add__(self, other: "EquivWitness") -> "EquivWitness":
        return EquivWitness(self.steps + other.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def to_records(self, field: FieldSpec) -> List[dict]:
        return [step_to_record(field, s) for s in self.steps]

    @classmethod
    def from_records(cls, field: FieldSpec, nvars: int, records: Sequence[dict]) -> "EquivWitness":
        return cls(tuple(step_from_record(field, nvars, r) for r in records))


def _matrix_to_json(field: FieldSpec, matrix: Matrix):
    return [[element_to_json(field, v) for v in row] for row in matrix]


def _matrix_from_json(field: FieldSpec, rows) -> Matrix:
    return as_matrix([[element_from_json(field, v) for v in row] for row in rows])


def step_to_record(field: FieldSpec, step: Step) -> dict:
    if isinstance(step, (LeftLinear, RightLinear)):
        return {'type': step.kind, 'matrix': _matrix_to_json(field, step.matrix)}
    if isinstance(step, CsShift):
        record = {'type': step.kind, 'shifts': [poly_to_pairs(h) for h in step.shifts]}
        if step.order is not None:
            record['order'] = list(step.order)
        return record
    if isinstance(step, Relabel):
        return {'type': step.kind, 'perm': list(step.perm)}
    raise WitnessFormatError(f"unknown step {step!r}")


def step_from_record(field: FieldSpec, nvars: int, record: dict) -> Step:
    kind = record.get('type')
    try:
        if kind == LeftLinear.kind:
            return LeftLinear(_matrix_from_json(field, record['matrix']))
        if kind == RightLinear.kind:
            return RightLinear(_matrix_from_json(field, record['matrix']))
        if kind == CsShift.kind:
            shifts = tuple(poly_from_pairs(field, nvars, pairs) for pairs in record['shifts'])
            order = record.get('order')
            return CsShift(shifts, tuple(order) if order is not None else None)
        if kind == Relabel.kind:
            return Relabel(tuple(int(v) for v in record['perm']))
    except KeyError as e:
        raise WitnessFormatError(f"step record {record!r} lacks {e}")
    raise WitnessFormatError(f"unknown step type {kind!r}")
