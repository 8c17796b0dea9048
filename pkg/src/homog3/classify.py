"""
Classification of 3-homogeneous systems (x Q1, y Q2) over F_q with q != 1 (mod 3).
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

from src.errors import BudgetExceeded, ClassifierDisagreement, ZeroForm
from src.gf.residues import cbrt_index, cube_root_of_unity
from src.homog3.char3 import decompose_char3
from src.homog3.drs import drs_to_record, drs_witness
from src.homog3.forms import quad_form_irreducible, quad_form_value
from src.homog3.rational import RationalMap, rat_is_perm
from src.homog3.system import HomogSystem, to_rational
from src.mpoly.serialize import element_to_json, point_to_json
from src.permoracle.brute_force import brute_force, point_to_index

logger = logging.getLogger(__name__)

CASE_PROPORTIONAL = "proportional"
CASE_CUBIC = "cubic-rational"
CASE_NOT_PP = "NotPP"

SQUARE_FORM_NOTE = "permutation although Q1 or Q2 is a square form with a nontrivial zero"

Point = Tuple[int, int]


@dataclass(frozen=True)
class HomogVerdict:
    is_perm: bool
    case_label: str
    reason: Optional[str] = None
    collision: Optional[Tuple[Point, Point]] = None
    q1_irreducible: Optional[bool] = None
    q2_irreducible: Optional[bool] = None
    k: Optional[int] = None
    rational: Optional[RationalMap] = None
    certificate: Optional[dict] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.is_perm != (self.case_label != CASE_NOT_PP):
            raise ValueError("is_perm must agree with the case label")
        if not self.is_perm and self.collision is None:
            raise ValueError("a negative verdict carries a collision")

    def to_record(self, field) -> dict:
        record = {
            'is_perm': self.is_perm,
            'case': self.case_label,
            'reason': self.reason,
            'q1_irreducible': self.q1_irreducible,
            'q2_irreducible': self.q2_irreducible,
        }
        if self.collision is not None:
            record['collision'] = [point_to_json(field, p) for p in self.collision]
        if self.k is not None:
            record['k'] = element_to_json(field, self.k)
        if self.rational is not None:
            record['rational'] = self.rational.to_record()
        if self.certificate is not None:
            record['certificate'] = self.certificate
        if self.note is not None:
            record['note'] = self.note
        return record


def _flag(field, form) -> Optional[bool]:
    try:
        return quad_form_irreducible(field, *form)
    except ZeroForm:
        return None


def _ordered(p1: Point, p2: Point, q: int) -> Tuple[Point, Point]:
    return tuple(sorted((p1, p2), key=lambda p: point_to_index(p, q)))


def _q1_collision(system: HomogSystem) -> Optional[Tuple[Point, Point]]:
    """
    A zero (1, t) of Q1 sends (1, t) to (0, f2(1, t)), which (0, y0) also reaches.
    """
    f = system.field
    for t in f.elements():
        if quad_form_value(f, system.q1, 1, t) == 0:
            value = system.f2().evaluate(1, t)
            y0 = cbrt_index(f, f.div(value, system.b4))
            return _ordered((0, y0), (1, t), f.q)
    return None


def _q2_collision(system: HomogSystem) -> Optional[Tuple[Point, Point]]:
    """
    A zero (s, 1) of Q2 sends (s, 1) to (f1(s, 1), 0), which (x0, 0) also reaches.
    """
    f = system.field
    for s in f.elements():
        if quad_form_value(f, system.q2, s, 1) == 0:
            value = system.f1().evaluate(s, 1)
            x0 = cbrt_index(f, f.div(value, system.a1))
            return _ordered((x0, 0), (s, 1), f.q)
    return None


def _proportionality(system: HomogSystem) -> Optional[int]:
    f = system.field
    k = f.div(system.a3, system.b4)
    if k and system.a1 == f.mul(k, system.b2) and system.a2 == f.mul(k, system.b3):
        return k
    return None


def _certificate(R: RationalMap) -> Tuple[Optional[dict], Optional[str]]:
    field = R.field
    if field.q % 3 == 2:
        witness = drs_witness(R)
        if witness is None:
            raise ClassifierDisagreement(f"{R!r} permutes P^1 but has no (d, r, s) form")
        return drs_to_record(field, witness), None
    try:
        decomposition = decompose_char3(R)
    except BudgetExceeded as e:
        return None, f"no certificate: {e}"
    if decomposition is None:
        raise ClassifierDisagreement(f"{R!r} permutes P^1 but has no Mobius decomposition")
    return decomposition.to_record(), None


def classify_t32(system: HomogSystem) -> HomogVerdict:
    """
    Decide whether (x Q1, y Q2) permutes F_q^2.

    Args:
        system: the six coefficients a1, a2, a3, b2, b3, b4
    Returns:
        HomogVerdict: proportional forms, or a degree-three rational permutation
        with its certificate, or NotPP with an explicit collision
    """
    field = system.field
    q = field.q
    flags = dict(q1_irreducible=_flag(field, system.q1), q2_irreducible=_flag(field, system.q2))

    if gcd(3, q - 1) != 1:
        lam = cube_root_of_unity(field)
        return HomogVerdict(False, CASE_NOT_PP, "cubing-not-bijective", _ordered((1, 0), (lam, 0), q), **flags)
    if system.a1 == 0:
        return HomogVerdict(False, CASE_NOT_PP, "a1-zero", ((0, 0), (1, 0)), **flags)
    if system.b4 == 0:
        return HomogVerdict(False, CASE_NOT_PP, "b4-zero", ((0, 0), (0, 1)), **flags)

    collision = _q1_collision(system)
    if collision is not None:
        return HomogVerdict(False, CASE_NOT_PP, "q1-zero", collision, **flags)
    collision = _q2_collision(system)
    if collision is not None:
        return HomogVerdict(False, CASE_NOT_PP, "q2-zero", collision, **flags)

    note = None if flags['q1_irreducible'] and flags['q2_irreducible'] else SQUARE_FORM_NOTE
    k = _proportionality(system)
    if k is not None:
        return HomogVerdict(True, CASE_PROPORTIONAL, k=k, note=note, **flags)

    R = to_rational(system)
    if rat_is_perm(R):
        certificate, missing = _certificate(R)
        if missing:
            logger.warning(missing)
        return HomogVerdict(True, CASE_CUBIC, rational=R, certificate=certificate,
                            note=note or missing, **flags)

    oracle = brute_force(system.to_system())
    if oracle.is_perm:
        logger.error(f"Rational map {R!r} is not a permutation but the system is")
        raise ClassifierDisagreement(f"system {system.flat()} permutes although its rational map does not")
    return HomogVerdict(False, CASE_NOT_PP, "rational-not-perm", oracle.collision, rational=R, **flags)
