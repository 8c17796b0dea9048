import pytest

from src.cli.conjecture import (
    STATUS_NOT_PERM,
    STATUS_RESOLVED,
    build_system,
    conjecture_record,
    conjecture_scan,
    diagonal_square_systems,
    quadratic_monomials,
    sample_systems,
)
from src.equiv import EquivWitness, replay
from src.equiv import linalg
from src.equiv.triangular import linear_part
from src.errors import EvenCharacteristic, PreconditionViolated
from src.mpoly import PolySystem, parse_system


def test_quadratic_monomials():
    monomials = quadratic_monomials(3)
    assert len(monomials) == 6
    assert monomials[0] == (2, 0, 0)
    assert (0, 1, 1) in monomials


def test_build_system(f3):
    identity = linalg.identity(3)
    quadratic = [[0] * 6, [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
    assert build_system(f3, identity, quadratic) == parse_system("(x, y + x^2, z + x*y)", f3)


def test_resolved_record(f3):
    system = parse_system("(z, x + z^2, y + x*z)", f3)
    record = conjecture_record(system)
    assert record['is_perm']
    assert record['status'] == STATUS_RESOLVED
    witness = EquivWitness.from_records(f3, 3, record['witness'])
    assert replay(system, witness) == PolySystem.identity(f3, 3)


def test_not_perm_record(f3):
    record = conjecture_record(parse_system("(x^2, y, z)", f3))
    assert record['status'] == STATUS_NOT_PERM
    assert record['witness'] is None


def test_samples_have_invertible_linear_part(f5):
    systems = list(sample_systems(f5, 10, seed=4))
    assert len(systems) == 10
    assert all(linalg.is_invertible(f5, linear_part(s)) for s in systems)
    assert systems == list(sample_systems(f5, 10, seed=4))


def test_diagonal_mode_needs_three(f5):
    with pytest.raises(PreconditionViolated):
        next(diagonal_square_systems(f5))


def test_even_field_rejected(f2):
    with pytest.raises(EvenCharacteristic):
        conjecture_scan(f2, 5)


def test_sampled_summary(f3):
    records, summary = conjecture_scan(f3, 20, seed=1)
    assert summary['systems'] == 20
    assert summary['mode'] == "sampled"
    assert summary['seed'] == 1
    assert summary['permutations'] == len(records)
    assert summary['resolved'] + summary['unresolved'] == summary['permutations']
    assert all(r['is_perm'] for r in records)


@pytest.mark.slow
def test_exhaustive_diagonal_squares(f3):
    records, summary = conjecture_scan(f3, exhaustive=True)
    assert summary['systems'] == 3 ** 9
    assert summary['seed'] is None
    assert summary['resolved'] + summary['unresolved'] == len(records)
