"""
Small finite fields F_q, q = p^m, in polynomial basis with exp/log tables.

Elements are plain integers in [0, q). The base-p digits of an element are its
polynomial-basis coordinates, constant term least significant, so the natural
integer order is the coordinate-lexicographic order used for every
"smallest element" choice in the package.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.errors import (
    DivisionByZero,
    FieldError,
    FieldMismatch,
    FieldTooLarge,
    InvalidModulus,
    NotPrime,
    ReducibleModulus,
)

logger = logging.getLogger(__name__)

MAX_FIELD_ORDER = 1 << 16
# full addition tables are kept below this order for odd extension fields
ADD_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> List[int]:
    """
    Distinct prime factors of n in increasing order.
    """
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def to_digits(value: int, p: int, length: int) -> List[int]:
    digits = []
    for _ in range(length):
        digits.append(value % p)
        value //= p
    return digits


def from_digits(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


# Polynomials over Z_p as coefficient lists, constant term first

def _zp_trim(poly: List[int]) -> List[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _zp_rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """
    Remainder of a modulo the monic polynomial b over Z_p.
    """
    rem = _zp_trim(list(a))
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        lead = rem[-1]
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _zp_trim(rem)
    return rem


def _zp_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def monic_polys(p: int, degree: int) -> Iterator[List[int]]:
    """
    All monic polynomials of the given degree in natural integer order.
    """
    for v in range(p ** degree):
        yield to_digits(v, p, degree) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """
    Trial division by every monic polynomial of degree at most deg/2.
    """
    m = len(modulus) - 1
    if m <= 1:
        return m == 1
    for d in range(1, m // 2 + 1):
        for g in monic_polys(p, d):
            if not _zp_rem(modulus, g, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    """
    Smallest monic irreducible of degree m, ordered by integer encoding.
    For m = 1 this is x itself.
    """
    for candidate in monic_polys(p, m):
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over Z_{p}")  # unreachable


class FieldSpec:
    """
    A concrete finite field F_{p^m} with acceleration tables.

    Immutable after construction and safe to share between worker processes.
    Scalar operations go through Python lists; the v* methods work on numpy
    integer arrays of element indices.
    """

    def __init__(self, p: int, m: int, modulus: Tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p ** m
        self.logger = logger
        self._build_tables()

    # Construction

    def _slow_mul(self, a: int, b: int) -> int:
        if self.p == 2:
            # carry-less multiply then reduce by the modulus bit pattern
            mod_bits = from_digits(self.modulus, 2)
            result = 0
            while b:
                if b & 1:
                    result ^= a
                b >>= 1
                a <<= 1
                if a >> self.m:
                    a ^= mod_bits
            return result
        prod = _zp_mul(to_digits(a, self.p, self.m), to_digits(b, self.p, self.m), self.p)
        rem = _zp_rem(prod, self.modulus, self.p)
        return from_digits(rem, self.p)

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        exponents = [order // ell for ell in prime_factors(order)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, e) != 1 for e in exponents):
                return g
        raise FieldError(f"no primitive element found for GF({self.p}^{self.m})")  # unreachable

    def _build_tables(self):
        q, p, m = self.q, self.p, self.m
        self.generator = self._find_generator()

        exp = [0] * (2 * (q - 1))
        log = [0] * q
        value = 1
        for i in range(q - 1):
            exp[i] = value
            log[value] = i
            value = self._slow_mul(value, self.generator)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log

        neg = [from_digits([(-d) % p for d in to_digits(v, p, m)], p) for v in range(q)]
        self._neg = neg

        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        self._neg_np = np.array(neg, dtype=np.int64)
        self._digits_np = None
        self._add_np = None
        self._add = None
        if p != 2 and m > 1:
            digits = np.zeros((m, q), dtype=np.int64)
            idx = np.arange(q, dtype=np.int64)
            for k in range(m):
                digits[k] = idx % p
                idx //= p
            self._digits_np = digits
            if q <= ADD_TABLE_LIMIT:
                table = self._vadd_digits(
                    np.repeat(np.arange(q), q), np.tile(np.arange(q), q)
                ).reshape(q, q)
                self._add_np = table
                self._add = table.tolist()

        self.logger.debug(
            f"Built GF({p}^{m}) modulus={list(self.modulus)} generator={self.generator}"
        )

    # Identity

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (build_field, (self.p, self.m, self.modulus))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    @property
    def is_even(self) -> bool:
        return self.p == 2

    # Scalar arithmetic

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element index of {self!r}")
        return a

    def from_int(self, n: int) -> int:
        """
        Image of the integer n in the prime subfield.
        """
        return n % self.p

    def coords(self, a: int) -> List[int]:
        return to_digits(a, self.p, self.m)

    def from_coords(self, coords: Sequence[int]) -> int:
        if len(coords) != self.m or any(not 0 <= c < self.p for c in coords):
            raise FieldError(f"invalid coordinates {list(coords)} for {self!r}")
        return from_digits(coords, self.p)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self!r}")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero(f"zero raised to negative power {e}")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("discrete log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def sum(self, values) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    def format(self, a: int) -> str:
        return str(a) if self.m == 1 else f"{a:#x}"

    # Vectorized arithmetic on numpy index arrays

    def _vadd_digits(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        a = a.copy()
        b = b.copy()
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def vadd(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        if self._add_np is not None:
            return self._add_np[a, b]
        return self._vadd_digits(a, b)

    def vneg(self, a) -> np.ndarray:
        return self._neg_np[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            if np.any(a == 0):
                raise DivisionByZero("zero raised to a negative power")
        out = self._exp_np[(self._log_np[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def vinv(self, a) -> np.ndarray:
        """
        Elementwise inverse; zero entries map to zero, callers mask them.
        """
        a = np.asarray(a, dtype=np.int64)
        out = self._exp_np[(self.q - 1 - self._log_np[a]) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    # Element wrapper

    def __call__(self, value: Union[int, "FieldElem"]) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value!r} does not belong to {self!r}")
            return value
        return FieldElem(self, self.check(value))


@dataclass(frozen=True)
class FieldElem:
    """
    An element bound to its field; arithmetic refuses to mix fields.
    Plain ints on the other side of an operator are embedded via the prime subfield.
    """
    field: FieldSpec
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented

    def _wrap(self, value: int) -> "FieldElem":
        return FieldElem(self.field, value)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "FieldElem":
        return self._wrap(self.field.inv(self.value))

    @property
    def coords(self) -> List[int]:
        return self.field.coords(self.value)

    def __repr__(self) -> str:
        return f"FieldElem({self.field.format(self.value)} in {self.field!r})"


@lru_cache(maxsize=64)
def _build_cached(p: int, m: int, modulus: Optional[Tuple[int, ...]]) -> FieldSpec:
    if m < 1:
        raise FieldError(f"extension degree must be at least 1, got {m}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p ** m > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"{p}^{m} exceeds the cap of {MAX_FIELD_ORDER} elements")
    if modulus is None:
        modulus = smallest_irreducible(p, m)
    else:
        if len(modulus) != m + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise InvalidModulus(f"modulus {list(modulus)} is not a monic degree-{m} polynomial over Z_{p}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over Z_{p}")
    return FieldSpec(p, m, modulus)


def build_field(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """
    Build and validate GF(p^m).

    Args:
        p: prime characteristic
        m: extension degree, at least 1
        modulus: optional monic irreducible, coefficients constant term first
    Returns: FieldSpec, shared between calls with identical arguments
    """
    return _build_cached(p, m, None if modulus is None else tuple(int(c) for c in modulus))


def inv(e: FieldElem) -> FieldElem:
    return e.inverse()
