"""
Rational functions and Mobius maps acting on the projective line P^1(F_q) = F_q + {inf}.

Points are indexed 0..q-1 for the finite elements and q for infinity, which
is how value tables are laid out.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import SingularMatrix, ZeroDenominator
from src.equiv import linalg
from src.gf.field import FieldSpec
from src.homog3 import unipoly
from src.homog3.unipoly import UniPoly
from src.mpoly.serialize import element_to_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^1(F_q); value None is infinity."""
    value: Optional[int] = None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def index(self, q: int) -> int:
        return q if self.value is None else self.value

    @classmethod
    def from_index(cls, k: int, q: int) -> "ProjPoint":
        return cls(None if k == q else k)

    def to_json(self, field: FieldSpec):
        return "inf" if self.value is None else element_to_json(field, self.value)

    def __repr__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITY = ProjPoint(None)


def projective_line(field: FieldSpec) -> List[ProjPoint]:
    return [ProjPoint(t) for t in field.elements()] + [INFINITY]


class RationalMap:
    """
    num/den in normal form: coprime, denominator monic.

    Two maps are equal exactly when their normal forms are.
    """

    __slots__ = ('field', 'num', 'den')

    def __init__(self, field: FieldSpec, num: Sequence[int], den: Sequence[int]):
        num, den = unipoly.trim(num), unipoly.trim(den)
        if not den:
            raise ZeroDenominator("rational map with zero denominator")
        g = unipoly.gcd(field, num, den)
        if unipoly.degree(g) > 0:
            num = unipoly.divmod_poly(field, num, g)[0]
            den = unipoly.divmod_poly(field, den, g)[0]
        c = field.inv(unipoly.lead(den))
        self.field = field
        self.num: UniPoly = unipoly.scale(field, num, c)
        self.den: UniPoly = unipoly.scale(field, den, c)

    @property
    def degree(self) -> int:
        return max(unipoly.degree(self.num), unipoly.degree(self.den), 0)

    def key(self) -> Tuple[UniPoly, UniPoly]:
        return self.num, self.den

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMap) and self.field == other.field and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"RationalMap({list(self.num)} / {list(self.den)})"

    def to_record(self) -> dict:
        return {
            'num': [element_to_json(self.field, c) for c in self.num],
            'den': [element_to_json(self.field, c) for c in self.den],
        }


def rat_eval(R: RationalMap, t: ProjPoint) -> ProjPoint:
    """
    Evaluate R at a point of the projective line.

    At infinity the degrees decide: a lower numerator gives 0, equal degrees
    the ratio of leading coefficients, a higher numerator infinity.
    """
    field = R.field
    if t.is_infinite:
        dn, dd = unipoly.degree(R.num), unipoly.degree(R.den)
        if dn < dd:
            return ProjPoint(0)
        if dn == dd:
            return ProjPoint(field.div(unipoly.lead(R.num), unipoly.lead(R.den)))
        return INFINITY
    d = unipoly.evaluate(field, R.den, t.value)
    if d == 0:
        return INFINITY
    return ProjPoint(field.div(unipoly.evaluate(field, R.num, t.value), d))


def rat_table(R: RationalMap) -> np.ndarray:
    """
    Image index of every point of P^1(F_q), infinity last.
    """
    field = R.field
    q = field.q
    num = unipoly.values(field, R.num)
    den = unipoly.values(field, R.den)
    finite = np.where(den == 0, q, field.vmul(num, field.vinv(den)))
    at_infinity = rat_eval(R, INFINITY).index(q)
    return np.append(finite, at_infinity).astype(np.int64)


def rat_is_perm(R: RationalMap) -> bool:
    """True iff R permutes the q + 1 points of P^1(F_q)."""
    table = rat_table(R)
    return len(np.unique(table)) == R.field.q + 1


def rat_collision(R: RationalMap) -> Optional[Tuple[ProjPoint, ProjPoint]]:
    """
    The first pair of points with equal images, in point order.
    """
    q = R.field.q
    seen = {}
    for k, image in enumerate(rat_table(R)):
        image = int(image)
        if image in seen:
            return ProjPoint.from_index(seen[image], q), ProjPoint.from_index(k, q)
        seen[image] = k
    return None


class MobiusMap:
    """
    t -> (a t + b) / (c t + d) with ad - bc != 0, scaled so the first
    nonzero entry of (a, b, c, d) is 1.
    """

    __slots__ = ('field', 'a', 'b', 'c', 'd')

    def __init__(self, field: FieldSpec, a: int, b: int, c: int, d: int):
        if field.sub(field.mul(a, d), field.mul(b, c)) == 0:
            raise SingularMatrix(f"degenerate Mobius map ({a}, {b}, {c}, {d})")
        first = next(v for v in (a, b, c, d) if v)
        s = field.inv(first)
        self.field = field
        self.a, self.b, self.c, self.d = (field.mul(s, v) for v in (a, b, c, d))

    @classmethod
    def identity(cls, field: FieldSpec) -> "MobiusMap":
        return cls(field, 1, 0, 0, 1)

    @classmethod
    def from_matrix(cls, field: FieldSpec, m: linalg.Matrix) -> "MobiusMap":
        return cls(field, m[0][0], m[0][1], m[1][0], m[1][1])

    @classmethod
    def from_three_points(cls, field: FieldSpec, src: Sequence[ProjPoint], dst: Sequence[ProjPoint]) -> "MobiusMap":
        """
        The unique map sending src[i] to dst[i]; both triples must be distinct points.
        """
        to_standard = _standard_matrix(field, src)
        from_standard = linalg.inverse(field, _standard_matrix(field, dst))
        return cls.from_matrix(field, linalg.mat_mul(field, from_standard, to_standard))

    @property
    def matrix(self) -> linalg.Matrix:
        return ((self.a, self.b), (self.c, self.d))

    def __call__(self, t: ProjPoint) -> ProjPoint:
        f = self.field
        if t.is_infinite:
            return INFINITY if self.c == 0 else ProjPoint(f.div(self.a, self.c))
        den = f.add(f.mul(self.c, t.value), self.d)
        if den == 0:
            return INFINITY
        return ProjPoint(f.div(f.add(f.mul(self.a, t.value), self.b), den))

    def compose(self, inner: "MobiusMap") -> "MobiusMap":
        """self o inner."""
        return MobiusMap.from_matrix(self.field, linalg.mat_mul(self.field, self.matrix, inner.matrix))

    def inverse(self) -> "MobiusMap":
        f = self.field
        return MobiusMap(f, self.d, f.neg(self.b), f.neg(self.c), self.a)

    def table(self) -> np.ndarray:
        """
        Image index of every point of P^1(F_q), infinity last.
        """
        f = self.field
        q = f.q
        t = np.arange(q, dtype=np.int64)
        num = f.vadd(f.vmul(self.a, t), self.b)
        den = f.vadd(f.vmul(self.c, t), self.d)
        finite = np.where(den == 0, q, f.vmul(num, f.vinv(den)))
        return np.append(finite, self(INFINITY).index(q)).astype(np.int64)

    def key(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def __eq__(self, other) -> bool:
        return isinstance(other, MobiusMap) and self.field == other.field and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"MobiusMap{self.key()}"

    def to_record(self) -> List:
        return [element_to_json(self.field, v) for v in self.key()]


def _standard_matrix(field: FieldSpec, pts: Sequence[ProjPoint]) -> linalg.Matrix:
    """
    Matrix of the map sending pts to (0, 1, inf).
    """
    z1, z2, z3 = (p.value for p in pts)
    f = field
    if z1 is None:
        return ((0, f.sub(z2, z3)), (1, f.neg(z3)))
    if z2 is None:
        return ((1, f.neg(z1)), (1, f.neg(z3)))
    if z3 is None:
        return ((1, f.neg(z1)), (0, f.sub(z2, z1)))
    k = f.sub(z2, z3)
    m = f.sub(z2, z1)
    return ((k, f.neg(f.mul(z1, k))), (m, f.neg(f.mul(z3, m))))


def pgl2(field: FieldSpec) -> Iterator[MobiusMap]:
    """
    Every element of PGL(2, q) once: the identity first, then normalized
    (a, b, c, d) in lexicographic order.
    """
    identity = MobiusMap.identity(field)
    yield identity
    q = field.q
    for c in range(1, q):
        for d in range(q):
            yield MobiusMap(field, 0, 1, c, d)
    for b in range(q):
        for c in range(q):
            for d in range(q):
                if d == field.mul(b, c):
                    continue
                m = MobiusMap(field, 1, b, c, d)
                if m != identity:
                    yield m
