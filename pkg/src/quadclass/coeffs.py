"""
Coefficient view of bivariate quadratic systems
    f1 = a1 x^2 + a2 xy + a3 y^2 + a4 x + a5 y
    f2 = b1 x^2 + b2 xy + b3 y^2 + b4 x + b5 y
and the verdict record produced by the classifiers.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence, Tuple

from src.errors import ArityMismatch, PolyError
from src.equiv.linalg import swap2
from src.equiv.witness import EquivWitness, LeftLinear, Relabel
from src.gf.field import FieldSpec
from src.mpoly.poly import MultiPoly, PolySystem
from src.mpoly.serialize import element_to_json, point_to_json, system_to_json

logger = logging.getLogger(__name__)

# exponent vectors of x^2, xy, y^2, x, y in coefficient order
MONOMIALS = ((2, 0), (1, 1), (0, 2), (1, 0), (0, 1))

CLASS_XY = "(x, y)"
# (x, y^2) has no label of its own; it is reported as (x^2, y)
CLASS_X2_Y = "(x^2, y)"
CLASS_X2_Y2 = "(x^2, y^2)"
CLASS_FIFTH = "(y^2 + x, c1*x^2 + c2*y^2 + c3*x + c4*y)"

NOT_PP = "NotPP"


@dataclass(frozen=True)
class QuadCoeffs:
    field: FieldSpec
    a: Tuple[int, int, int, int, int]
    b: Tuple[int, int, int, int, int]

    @classmethod
    def of(cls, field: FieldSpec, coeffs: Sequence[int]) -> "QuadCoeffs":
        """
        Build from the flat list a1..a5, b1..b5.
        """
        if len(coeffs) != 10:
            raise ArityMismatch(f"expected 10 coefficients a1..a5,b1..b5, got {len(coeffs)}")
        values = tuple(field.check(int(c)) for c in coeffs)
        return cls(field, values[:5], values[5:])

    @classmethod
    def from_system(cls, system: PolySystem) -> "QuadCoeffs":
        """
        Read coefficients off a bivariate system of degree at most 2. Constant
        terms are dropped: shifting by a constant vector keeps the verdict.
        """
        if system.nvars != 2:
            raise ArityMismatch(f"quadratic classifier needs 2 variables, got {system.nvars}")
        rows = []
        for f in system:
            for exps in f.terms:
                if exps not in MONOMIALS and exps != (0, 0):
                    raise PolyError(f"monomial with exponents {exps} is not quadratic")
            if f.coefficient_of((0, 0)):
                logger.debug("Dropping constant term of a quadratic system")
            rows.append(tuple(f.coefficient_of(e) for e in MONOMIALS))
        return cls(system.field, rows[0], rows[1])

    def flat(self) -> Tuple[int, ...]:
        return self.a + self.b

    def to_system(self) -> PolySystem:
        polys = []
        for row in (self.a, self.b):
            polys.append(MultiPoly(self.field, 2, {e: c for e, c in zip(MONOMIALS, row) if c}))
        return PolySystem(polys)

    def swap_variables(self) -> "QuadCoeffs":
        def swap(row):
            r1, r2, r3, r4, r5 = row
            return (r3, r2, r1, r5, r4)
        return QuadCoeffs(self.field, swap(self.a), swap(self.b))

    def swap_coordinates(self) -> "QuadCoeffs":
        return QuadCoeffs(self.field, self.b, self.a)

    def with_rows(self, a: Sequence[int], b: Sequence[int]) -> "QuadCoeffs":
        return QuadCoeffs(self.field, tuple(a), tuple(b))

    def to_record(self) -> dict:
        names = ['a1', 'a2', 'a3', 'a4', 'a5', 'b1', 'b2', 'b3', 'b4', 'b5']
        return {n: element_to_json(self.field, v) for n, v in zip(names, self.flat())}


@dataclass(frozen=True)
class Symmetry:
    """One element of {identity, x<->y} x {identity, f1<->f2}."""
    swap_variables: bool
    swap_coordinates: bool

    def act(self, coeffs: QuadCoeffs) -> QuadCoeffs:
        if self.swap_variables:
            coeffs = coeffs.swap_variables()
        if self.swap_coordinates:
            coeffs = coeffs.swap_coordinates()
        return coeffs

    def witness(self) -> EquivWitness:
        steps = []
        if self.swap_variables:
            steps.append(Relabel((1, 0)))
        if self.swap_coordinates:
            steps.append(LeftLinear(swap2()))
        return EquivWitness(tuple(steps))

    def to_record(self) -> dict:
        return {'swap_variables': self.swap_variables, 'swap_coordinates': self.swap_coordinates}


SYMMETRIES = (
    Symmetry(False, False),
    Symmetry(True, False),
    Symmetry(False, True),
    Symmetry(True, True),
)


@dataclass(frozen=True)
class QuadVerdict:
    is_perm: bool
    case_label: str
    canonical_class: Optional[str] = None
    canonical: Optional[PolySystem] = None
    witness: EquivWitness = dc_field(default_factory=EquivWitness)
    applied_symmetry: Optional[Symmetry] = None
    linearized: Optional[Tuple[int, int, int]] = None
    collision: Optional[tuple] = None

    def __post_init__(self):
        if self.is_perm != (self.case_label != NOT_PP):
            raise ValueError("is_perm must agree with the case label")

    def with_prefix(self, prefix: EquivWitness) -> "QuadVerdict":
        return QuadVerdict(
            self.is_perm, self.case_label, self.canonical_class, self.canonical,
            prefix + self.witness, self.applied_symmetry, self.linearized, self.collision,
        )

    def to_record(self, field: FieldSpec) -> dict:
        record = {
            'is_perm': self.is_perm,
            'case': self.case_label,
            'canonical_class': self.canonical_class,
        }
        if self.canonical is not None:
            record['canonical'] = system_to_json(self.canonical)
            record['witness'] = self.witness.to_records(field)
        if self.applied_symmetry is not None:
            record['symmetry'] = self.applied_symmetry.to_record()
        if self.linearized is not None:
            record['linearized'] = [element_to_json(field, c) for c in self.linearized]
        if self.collision is not None:
            record['collision'] = [point_to_json(field, p) for p in self.collision]
        return record
