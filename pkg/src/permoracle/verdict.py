"""
Verdict record shared by the permutation oracles.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.gf.field import FieldSpec
from src.mpoly.serialize import point_to_json

Point = Tuple[int, ...]


@dataclass(frozen=True)
class PermVerdict:
    """
    Outcome of a permutation test.

    A negative verdict always carries a witness: either a collision pair of
    distinct points with equal images, or the Hermite tuple that failed.
    """
    is_perm: bool
    collision: Optional[Tuple[Point, Point]] = None
    hermite_tuple: Optional[Tuple[int, ...]] = None
    method: str = "brute_force"

    def __post_init__(self):
        has_witness = self.collision is not None or self.hermite_tuple is not None
        if self.is_perm == has_witness:
            raise ValueError("a verdict has a witness exactly when it is negative")

    @property
    def witness(self):
        return self.collision if self.collision is not None else self.hermite_tuple

    def to_record(self, field: FieldSpec) -> dict:
        record = {'method': self.method, 'is_perm': self.is_perm}
        if self.collision is not None:
            record['collision'] = [point_to_json(field, p) for p in self.collision]
        if self.hermite_tuple is not None:
            record['hermite_tuple'] = list(self.hermite_tuple)
        return record
