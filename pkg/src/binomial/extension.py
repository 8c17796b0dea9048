"""
The quadratic extension F_{q^2} = F_q(alpha) used to expand x^3 + a x^(2q+1).

Odd characteristic: alpha^2 = u for the smallest quadratic nonresidue u.
Characteristic 2 with m odd: alpha^2 + alpha + 1 = 0.

Elements of F_{q^2} are indices x1 + q * x2 for x = x1 + x2 alpha.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from src.errors import EvenDegreeEvenChar, FieldError
from src.gf.field import FieldSpec
from src.gf.residues import is_square, smallest_nonresidue

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class QuadExt:
    """
    Arithmetic of F_q(alpha) on coordinate pairs over a base FieldSpec.

    Scalar methods take and return element indices; the v* methods take
    numpy index arrays and broadcast like the base field's.
    """

    def __init__(self, base: FieldSpec, u: Optional[int] = None):
        self.base = base
        self.q = base.q
        self.order = base.q ** 2
        self.logger = logger
        if base.is_even:
            if base.m % 2 == 0:
                raise EvenDegreeEvenChar(f"alpha^2 + alpha + 1 splits over {base!r}: m = {base.m} is even")
            if u is not None:
                raise FieldError("characteristic 2 extensions are fixed by alpha^2 + alpha + 1")
            self.u = None
        else:
            if u is None or u == 0 or is_square(base, u):
                raise FieldError(f"{u} is not a quadratic nonresidue of {base!r}")
            self.u = u
        self.logger.debug(f"Built {self!r}")

    def __repr__(self) -> str:
        relation = "alpha^2 + alpha + 1 = 0" if self.is_even else f"alpha^2 = {self.base.format(self.u)}"
        return f"QuadExt({self.base!r}, {relation})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self.base, self.u) == (other.base, other.u)

    def __hash__(self) -> int:
        return hash((self.base, self.u))

    def __reduce__(self):
        return (QuadExt, (self.base, self.u))

    @property
    def is_even(self) -> bool:
        return self.base.is_even

    # Coordinates

    def to_pair(self, k: int) -> Pair:
        if not 0 <= k < self.order:
            raise FieldError(f"{k} is not an element index of {self!r}")
        return k % self.q, k // self.q

    def from_pair(self, x1: int, x2: int) -> int:
        return self.base.check(x1) + self.q * self.base.check(x2)

    def elements(self) -> range:
        return range(self.order)

    def alpha(self) -> int:
        return self.from_pair(0, 1)

    # Arithmetic

    def vsplit(self, k) -> Tuple[np.ndarray, np.ndarray]:
        k = np.asarray(k, dtype=np.int64)
        return k % self.q, k // self.q

    def vjoin(self, x1, x2) -> np.ndarray:
        return np.asarray(x1, dtype=np.int64) + self.q * np.asarray(x2, dtype=np.int64)

    def vadd(self, a, b) -> np.ndarray:
        f = self.base
        (a1, a2), (b1, b2) = self.vsplit(a), self.vsplit(b)
        return self.vjoin(f.vadd(a1, b1), f.vadd(a2, b2))

    def vmul(self, a, b) -> np.ndarray:
        f = self.base
        (a1, a2), (b1, b2) = self.vsplit(a), self.vsplit(b)
        high = f.vmul(a2, b2)
        cross = f.vadd(f.vmul(a1, b2), f.vmul(a2, b1))
        if self.is_even:
            # alpha^2 = alpha + 1
            return self.vjoin(f.vadd(f.vmul(a1, b1), high), f.vadd(cross, high))
        return self.vjoin(f.vadd(f.vmul(a1, b1), f.vmul(self.u, high)), cross)

    def vpow(self, a, e: int) -> np.ndarray:
        result = np.ones_like(np.asarray(a, dtype=np.int64))
        base = np.asarray(a, dtype=np.int64)
        while e:
            if e & 1:
                result = self.vmul(result, base)
            base = self.vmul(base, base)
            e >>= 1
        return result

    def vconj(self, a) -> np.ndarray:
        """
        The Frobenius x -> x^q: alpha^q is -alpha, or alpha + 1 in characteristic 2.
        """
        f = self.base
        a1, a2 = self.vsplit(a)
        if self.is_even:
            return self.vjoin(f.vadd(a1, a2), a2)
        return self.vjoin(a1, f.vneg(a2))

    def add(self, a: int, b: int) -> int:
        return int(self.vadd(a, b))

    def mul(self, a: int, b: int) -> int:
        return int(self.vmul(a, b))

    def pow(self, a: int, e: int) -> int:
        return int(self.vpow(a, e))

    def conj(self, a: int) -> int:
        return int(self.vconj(a))

    # The binomial

    def binomial_table(self, a: int) -> np.ndarray:
        """
        f(x) = x^3 + a x^(2q+1) at every element index x, computed with
        powers in F_{q^2} rather than through the coordinate expansion.
        """
        x = np.arange(self.order, dtype=np.int64)
        tail = self.vmul(a, self.vpow(x, 2 * self.q + 1))
        return self.vadd(self.vpow(x, 3), tail)

    def binomial_is_perm(self, a: int) -> bool:
        return np.unique(self.binomial_table(a)).size == self.order


def build_ext(base: FieldSpec) -> QuadExt:
    """
    The canonical quadratic extension of a base field.

    Args:
        base: F_q, odd characteristic or q = 2^m with m odd
    Returns:
        QuadExt with u the smallest nonresidue, or alpha^2 + alpha + 1 = 0 in characteristic 2
    """
    if base.is_even:
        return QuadExt(base)
    return QuadExt(base, smallest_nonresidue(base))
