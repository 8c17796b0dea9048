"""
Homogeneous bivariate systems and their rational-function view t = y/x.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from src.errors import ArityMismatch, ZeroDenominator
from src.gf.field import FieldSpec
from src.homog3 import unipoly
from src.homog3.rational import RationalMap
from src.mpoly.poly import MultiPoly, PolySystem
from src.mpoly.serialize import element_to_json


@dataclass(frozen=True)
class BinaryForm:
    """
    A homogeneous form of degree n in x, y; coeffs[i] multiplies x^(n-i) y^i.
    """
    field: FieldSpec
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_poly(self) -> MultiPoly:
        n = self.degree
        return MultiPoly(self.field, 2, {(n - i, i): c for i, c in enumerate(self.coeffs) if c})

    def dehomogenize(self) -> unipoly.UniPoly:
        """f(1, t)."""
        return unipoly.trim(self.coeffs)

    def evaluate(self, x: int, y: int) -> int:
        f = self.field
        n = self.degree
        return f.sum([f.mul(c, f.mul(f.pow(x, n - i), f.pow(y, i))) for i, c in enumerate(self.coeffs)])

    def only_trivial_zero(self) -> bool:
        """
        True iff (0, 0) is the only zero on F_q^2.
        """
        if self.evaluate(0, 1) == 0:
            return False
        return all(self.evaluate(1, t) != 0 for t in self.field.elements())

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        f = self.field
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return BinaryForm(f, tuple(out))


@dataclass(frozen=True)
class HomogSystem:
    """
    f1 = a1 x^3 + a2 x^2 y + a3 x y^2 = x Q1,  f2 = b2 x^2 y + b3 x y^2 + b4 y^3 = y Q2.
    """
    field: FieldSpec
    a1: int
    a2: int
    a3: int
    b2: int
    b3: int
    b4: int

    @classmethod
    def of(cls, field: FieldSpec, coeffs: Sequence[int]) -> "HomogSystem":
        """From the flat list a1, a2, a3, b2, b3, b4."""
        if len(coeffs) != 6:
            raise ArityMismatch(f"expected 6 coefficients a1,a2,a3,b2,b3,b4, got {len(coeffs)}")
        return cls(field, *(field.check(int(c)) for c in coeffs))

    def flat(self) -> Tuple[int, ...]:
        return self.a1, self.a2, self.a3, self.b2, self.b3, self.b4

    @property
    def q1(self) -> Tuple[int, int, int]:
        return self.a1, self.a2, self.a3

    @property
    def q2(self) -> Tuple[int, int, int]:
        return self.b2, self.b3, self.b4

    def f1(self) -> BinaryForm:
        return BinaryForm(self.field, (self.a1, self.a2, self.a3, 0))

    def f2(self) -> BinaryForm:
        return BinaryForm(self.field, (0, self.b2, self.b3, self.b4))

    def to_system(self) -> PolySystem:
        return PolySystem([self.f1().to_poly(), self.f2().to_poly()])

    def to_record(self) -> dict:
        names = ('a1', 'a2', 'a3', 'b2', 'b3', 'b4')
        return {n: element_to_json(self.field, v) for n, v in zip(names, self.flat())}


def to_rational(system: HomogSystem) -> RationalMap:
    """
    (a1 + a2 t + a3 t^2) / (b2 t + b3 t^2 + b4 t^3) in normal form.
    """
    if system.b2 == system.b3 == system.b4 == 0:
        raise ZeroDenominator("f2 vanishes identically")
    return RationalMap(system.field, system.f1().dehomogenize(), system.f2().dehomogenize())
