"""
Sparse multivariate polynomials over F_q reduced modulo x_i^q - x_i, and
ordered systems of them.
"""

import logging
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.errors import ArityMismatch, FieldMismatch, PolyError
from src.gf.field import FieldElem, FieldSpec

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[int, FieldElem]


def reduce_exponent(e: int, q: int) -> int:
    """
    0 stays 0, anything positive folds into [1, q-1].
    """
    if e < 0:
        raise PolyError(f"negative exponent {e}")
    return 0 if e == 0 else ((e - 1) % (q - 1)) + 1


def _scalar(field: FieldSpec, c: Scalar) -> int:
    if isinstance(c, FieldElem):
        if c.field != field:
            raise FieldMismatch(f"coefficient from {c.field!r} used over {field!r}")
        return c.value
    return field.check(int(c))


class MultiPoly:
    """
    Polynomial in `nvars` variables over `field`, stored as exponent-tuple -> coefficient.

    Every instance is reduced: exponents follow reduce_exponent and no zero
    coefficient is stored, so equal functions F_q^n -> F_q compare equal.
    """

    __slots__ = ('field', 'nvars', '_terms')

    def __init__(self, field: FieldSpec, nvars: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        self.field = field
        self.nvars = nvars
        merged: Dict[Exponents, int] = {}
        q = field.q
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise ArityMismatch(f"exponent vector {tuple(exps)} has length {len(exps)}, expected {nvars}")
            key = tuple(reduce_exponent(int(e), q) for e in exps)
            c = _scalar(field, coeff)
            if key in merged:
                merged[key] = field.add(merged[key], c)
            else:
                merged[key] = c
        self._terms = {k: v for k, v in merged.items() if v}

    @classmethod
    def _from_reduced(cls, field: FieldSpec, nvars: int, terms: Dict[Exponents, int]) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly.field = field
        poly.nvars = nvars
        poly._terms = {k: v for k, v in terms.items() if v}
        return poly

    # Constructors

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "MultiPoly":
        return cls._from_reduced(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c: Scalar) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise ArityMismatch(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls._from_reduced(field, nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, field: FieldSpec, nvars: int, exps: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(field, nvars, {tuple(exps): coeff})

    @classmethod
    def linear_form(cls, field: FieldSpec, coeffs: Sequence[Scalar]) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            exps = [0] * n
            exps[j] = 1
            terms[tuple(exps)] = c
        return cls(field, n, terms)

    # Inspection

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    @property
    def degree(self) -> int:
        """Total degree after reduction; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def variables(self) -> FrozenSet[int]:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return frozenset(used)

    def depends_on(self, index: int) -> bool:
        return any(exps[index] for exps in self._terms)

    def depends_only_on(self, allowed: Iterable[int]) -> bool:
        return self.variables() <= frozenset(allowed)

    def coefficient_of(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def split_on(self, index: int) -> Tuple["MultiPoly", "MultiPoly"]:
        """
        (terms involving x_index, terms free of x_index).
        """
        with_var, without = {}, {}
        for exps, c in self._terms.items():
            (with_var if exps[index] else without)[exps] = c
        return (MultiPoly._from_reduced(self.field, self.nvars, with_var),
                MultiPoly._from_reduced(self.field, self.nvars, without))

    # Arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.field != self.field:
                raise FieldMismatch(f"polynomials over {self.field!r} and {other.field!r}")
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, FieldElem):
            return MultiPoly.constant(self.field, self.nvars, other)
        if isinstance(other, (int, np.integer)):
            return MultiPoly.constant(self.field, self.nvars, self.field.from_int(int(other)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        out = dict(self._terms)
        for exps, c in other._terms.items():
            out[exps] = field.add(out[exps], c) if exps in out else c
        return MultiPoly._from_reduced(field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        neg = self.field.neg
        return MultiPoly._from_reduced(self.field, self.nvars, {e: neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _scalar(self.field, c)
        mul = self.field.mul
        return MultiPoly._from_reduced(self.field, self.nvars, {e: mul(c, v) for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElem)):
            value = other if isinstance(other, FieldElem) else self.field.from_int(int(other))
            return self.scale(value)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        q = field.q
        out: Dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(reduce_exponent(x + y, q) for x, y in zip(ea, eb))
                c = field.mul(ca, cb)
                out[key] = field.add(out[key], c) if key in out else c
        return MultiPoly._from_reduced(field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise PolyError("polynomials have no negative powers")
        result = MultiPoly.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # Comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, frozenset(self._terms.items())))

    # Evaluation

    def evaluate(self, point: Sequence[Scalar]) -> int:
        if len(point) != self.nvars:
            raise ArityMismatch(f"point of length {len(point)} for {self.nvars} variables")
        field = self.field
        values = [_scalar(field, v) for v in point]
        total = 0
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term = field.mul(term, field.pow(v, e))
            total = field.add(total, term)
        return total

    def eval_columns(self, columns: Sequence[np.ndarray], cache: Optional[dict] = None) -> np.ndarray:
        """
        Evaluate at many points at once.

        Args:
            columns: one array of element indices per variable, all the same length
            cache: optional dict reused across polynomials for (variable, exponent) powers
        Returns: array of values
        """
        if len(columns) != self.nvars:
            raise ArityMismatch(f"{len(columns)} columns for {self.nvars} variables")
        field = self.field
        length = len(columns[0]) if columns else 1
        powers = cache if cache is not None else {}
        total = np.zeros(length, dtype=np.int64)
        for exps, c in self._terms.items():
            term = np.full(length, c, dtype=np.int64)
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = field.vpow(columns[i], e)
                    term = field.vmul(term, powers[key])
            total = field.vadd(total, term)
        return total

    # Composition

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """
        Replace x_i by images[i]; the result lives in the images' variables.
        """
        if len(images) != self.nvars:
            raise ArityMismatch(f"{len(images)} images for {self.nvars} variables")
        if not images:
            return self
        target_n = images[0].nvars
        for img in images:
            if img.field != self.field:
                raise FieldMismatch("substitution images from another field")
            if img.nvars != target_n:
                raise ArityMismatch("substitution images with differing arity")
        result = MultiPoly.zero(self.field, target_n)
        power_cache: Dict[Tuple[int, int], MultiPoly] = {}
        for exps, c in self._terms.items():
            term = MultiPoly.constant(self.field, target_n, c)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in power_cache:
                        power_cache[(i, e)] = images[i] ** e
                    term = term * power_cache[(i, e)]
            result = result + term
        return result

    # Rendering

    def to_infix(self, names: Optional[Sequence[str]] = None) -> str:
        if not self._terms:
            return "0"
        names = list(names) if names else default_names(self.nvars)
        parts = []
        for exps in sorted(self._terms, reverse=True):
            c = self._terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            coeff = str(c) if self.field.m == 1 else f"{{{c:#x}}}"
            if not factors:
                parts.append(coeff)
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([coeff] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_infix()})"


def default_names(nvars: int) -> List[str]:
    if nvars <= 3:
        return ['x', 'y', 'z'][:nvars]
    return [f"x{i + 1}" for i in range(nvars)]


class PolySystem:
    """
    An ordered system F = (f_1, ..., f_n) of n polynomials in n variables.
    """

    __slots__ = ('field', 'nvars', 'polys')

    def __init__(self, polys: Sequence[MultiPoly]):
        polys = tuple(polys)
        if not polys:
            raise ArityMismatch("a system needs at least one polynomial")
        field = polys[0].field
        for f in polys:
            if f.field != field:
                raise FieldMismatch("system members over different fields")
            if f.nvars != len(polys):
                raise ArityMismatch(f"system of {len(polys)} polynomials has a member in {f.nvars} variables")
        self.field = field
        self.nvars = len(polys)
        self.polys = polys

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "PolySystem":
        return cls([MultiPoly.variable(field, n, i) for i in range(n)])

    def __len__(self) -> int:
        return self.nvars

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i: int) -> MultiPoly:
        return self.polys[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySystem):
            return NotImplemented
        return self.polys == other.polys

    def __hash__(self) -> int:
        return hash(self.polys)

    def replace(self, index: int, poly: MultiPoly) -> "PolySystem":
        polys = list(self.polys)
        polys[index] = poly
        return PolySystem(polys)

    def evaluate(self, point: Sequence[Scalar]) -> Tuple[int, ...]:
        return tuple(f.evaluate(point) for f in self.polys)

    def eval_columns(self, columns: Sequence[np.ndarray]) -> List[np.ndarray]:
        cache: dict = {}
        return [f.eval_columns(columns, cache) for f in self.polys]

    def shift(self, constants: Sequence[Scalar]) -> "PolySystem":
        """
        F + c for a constant vector c.
        """
        if len(constants) != self.nvars:
            raise ArityMismatch("constant vector length differs from system size")
        return PolySystem([f + MultiPoly.constant(self.field, self.nvars, c) for f, c in zip(self.polys, constants)])

    def substitute(self, images: Sequence[MultiPoly]) -> "PolySystem":
        return PolySystem([f.substitute(images) for f in self.polys])

    def to_infix(self) -> str:
        return "(" + ", ".join(f.to_infix() for f in self.polys) + ")"

    def __repr__(self) -> str:
        return f"PolySystem{self.to_infix()}"


def reduce(f: MultiPoly) -> MultiPoly:
    """
    Normal form modulo (x_i^q - x_i); instances are kept reduced, so this rebuilds from raw terms.
    """
    return MultiPoly(f.field, f.nvars, dict(f.terms))


def mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if f.field != g.field:
        raise FieldMismatch(f"polynomials over {f.field!r} and {g.field!r}")
    return f * g


def evaluate(f: MultiPoly, point: Sequence[Scalar]) -> int:
    return f.evaluate(point)


def coefficient_of(f: MultiPoly, exps: Sequence[int]) -> int:
    return f.coefficient_of(exps)


def compose_linear(system: PolySystem, matrix: Sequence[Sequence[Scalar]]) -> PolySystem:
    """
    F o sigma_M with sigma_M(x) = M x.

    Args:
        system: F in n variables
        matrix: n x n matrix, rows give the images of the variables
    Returns: reduced PolySystem
    """
    n = system.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ArityMismatch(f"matrix shape does not match {n} variables")
    images = [MultiPoly.linear_form(system.field, row) for row in matrix]
    return system.substitute(images)
