import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import BudgetExceeded
from src.gf.field import build_field
from src.mpoly import MultiPoly, PolySystem, parse_system
from src.permoracle import PermVerdict, brute_force, hermite_check, verify_collision

QUADRATIC_MONOMIALS = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def quadratic_system(field, coeffs):
    first, second = coeffs[:5], coeffs[5:]
    return PolySystem([
        MultiPoly(field, 2, dict(zip(QUADRATIC_MONOMIALS, first))),
        MultiPoly(field, 2, dict(zip(QUADRATIC_MONOMIALS, second))),
    ])


class TestBruteForce:
    @pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1)])
    def test_identity_permutes(self, p, m):
        field = build_field(p, m)
        assert brute_force(PolySystem.identity(field, 2)).is_perm

    def test_square_collides_in_odd_characteristic(self, f3):
        verdict = brute_force(parse_system("(x^2, y)", f3))
        assert not verdict.is_perm
        assert verdict.collision == ((1, 0), (2, 0))

    def test_square_permutes_in_characteristic_two(self, f4):
        assert brute_force(parse_system("(x^2, y)", f4)).is_perm

    def test_collision_is_genuine(self, f5):
        system = parse_system("(x^2 + y, x*y)", f5)
        verdict = brute_force(system)
        assert not verdict.is_perm
        assert verify_collision(system, verdict)

    def test_chunking_does_not_change_the_answer(self, f5):
        system = parse_system("(x + y^2, y + x^3, z^3 + x*y)", f5)
        assert brute_force(system, chunk_size=7) == brute_force(system)

    def test_budget(self, f5):
        with pytest.raises(BudgetExceeded):
            brute_force(PolySystem.identity(f5, 3), budget=100)

    def test_constant_shift_keeps_verdict(self, f5):
        system = parse_system("(x + y^2, y)", f5)
        for shift in itertools.product(f5.elements(), repeat=2):
            assert brute_force(system.shift(shift)).is_perm


class TestVerdict:
    def test_negative_verdict_needs_a_witness(self):
        with pytest.raises(ValueError):
            PermVerdict(False)

    def test_positive_verdict_has_no_witness(self):
        with pytest.raises(ValueError):
            PermVerdict(True, hermite_tuple=(1, 0))

    def test_record(self, f3):
        record = brute_force(parse_system("(x^2, y)", f3)).to_record(f3)
        assert record == {'method': 'brute_force', 'is_perm': False, 'collision': [[1, 0], [2, 0]]}


class TestHermite:
    def test_identity(self, f3):
        assert hermite_check(parse_system("(x, y)", f3)).is_perm

    def test_sum_of_squares_fails(self, f3):
        verdict = hermite_check(parse_system("(x^2 + y^2, x*y)", f3))
        assert not verdict.is_perm
        assert verdict.method == "hermite"
        assert verdict.hermite_tuple is not None

    def test_diagonal_quadratic_first_coordinate(self, f5):
        verdict = hermite_check(parse_system("(x^2 + 2*y^2, y)", f5))
        assert not verdict.is_perm
        assert len(verdict.hermite_tuple) == 2

    def test_budget(self, f5):
        with pytest.raises(BudgetExceeded):
            hermite_check(PolySystem.identity(f5, 2), budget=10)

    def test_agrees_with_brute_force_on_every_f2_quadratic(self, f2):
        for coeffs in itertools.product(range(2), repeat=10):
            system = quadratic_system(f2, coeffs)
            assert hermite_check(system).is_perm == brute_force(system).is_perm

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=10, max_size=10))
    def test_agrees_with_brute_force_over_f3(self, coeffs):
        system = quadratic_system(build_field(3), coeffs)
        assert hermite_check(system).is_perm == brute_force(system).is_perm

    @pytest.mark.slow
    def test_agrees_with_brute_force_on_every_f3_quadratic(self, f3):
        for coeffs in itertools.product(range(3), repeat=10):
            system = quadratic_system(f3, coeffs)
            assert hermite_check(system).is_perm == brute_force(system).is_perm

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [4, 5, 7])
    def test_agrees_with_brute_force_on_seeded_samples(self, q):
        field = build_field(*{4: (2, 2), 5: (5,), 7: (7,)}[q])
        rng = np.random.default_rng(q)
        for coeffs in rng.integers(0, q, size=(1000, 10)):
            system = quadratic_system(field, [int(c) for c in coeffs])
            assert hermite_check(system).is_perm == brute_force(system).is_perm
