import pytest

from src.equiv import (
    CsShift,
    EquivWitness,
    LeftLinear,
    Relabel,
    RightLinear,
    apply_cs_shift,
    apply_linear,
    apply_relabel,
    identity_witness,
    replay,
    triangular_basis,
    verify_witness,
)
from src.equiv import linalg
from src.equiv.transforms import apply_left
from src.equiv.triangular import linear_part, quadratic_matrices
from src.errors import EvenCharacteristic, IllegalShiftDependency, PreconditionViolated, SingularMatrix, WitnessFormatError
from src.mpoly import MultiPoly, PolySystem, parse_poly, parse_system
from src.permoracle import brute_force

I2 = ((1, 0), (0, 1))


class TestLinalg:
    def test_inverse(self, f5):
        m = ((1, 2), (3, 4))
        assert linalg.mat_mul(f5, m, linalg.inverse(f5, m)) == linalg.identity(2)

    def test_singular(self, f5):
        assert not linalg.is_invertible(f5, ((1, 2), (2, 4)))
        with pytest.raises(SingularMatrix):
            linalg.inverse(f5, ((1, 2), (2, 4)))

    def test_rank_and_nullspace(self, f3):
        rows = [(1, 1, 0), (2, 2, 0)]
        assert linalg.rank(f3, rows) == 1
        assert linalg.row_reduce(f3, rows) == [(1, 1, 0)]
        kernel = linalg.nullspace(f3, rows, 3)
        assert kernel == [(1, 2, 0), (0, 0, 1)]
        for v in kernel:
            assert f3.sum(f3.mul(a, b) for a, b in zip(rows[0], v)) == 0

    def test_full_rank_has_trivial_kernel(self, f8):
        m = ((1, 2, 0), (0, 1, 3), (0, 0, 5))
        assert linalg.rank(f8, m) == 3
        assert linalg.nullspace(f8, m, 3) == []
        assert linalg.mat_mul(f8, linalg.inverse(f8, m), m) == linalg.identity(3)

    def test_nullspace_of_nothing_is_everything(self, f3):
        assert linalg.nullspace(f3, [], 2) == [(1, 0), (0, 1)]


class TestLinear:
    def test_identity_matrices(self, f5):
        system = parse_system("(x + y^2, x*y)", f5)
        assert apply_linear(system, I2, I2) == system

    def test_swap_on_the_left(self, f5):
        assert apply_linear(parse_system("(x, y)", f5), ((0, 1), (1, 0)), I2) == parse_system("(y, x)", f5)

    def test_scaled_swap_reaches_identity(self, f5):
        # F = (a5 y, b4 x) with rho = (y / b4, x / a5)
        a5, b4 = 2, 3
        system = PolySystem([MultiPoly(f5, 2, {(0, 1): a5}), MultiPoly(f5, 2, {(1, 0): b4})])
        rho = ((0, f5.inv(b4)), (f5.inv(a5), 0))
        assert apply_linear(system, rho, I2) == PolySystem.identity(f5, 2)

    def test_singular_matrix_rejected(self, f5):
        with pytest.raises(SingularMatrix):
            apply_linear(parse_system("(x, y)", f5), ((1, 1), (1, 1)), I2)


class TestCoordinateShift:
    def test_zero_shifts(self, f5):
        system = parse_system("(x, y + x^2)", f5)
        zero = MultiPoly.zero(f5, 2)
        assert apply_cs_shift(system, (zero, zero)) == system

    def test_shift_on_the_second_coordinate(self, f5):
        # (y, x) -> (y, x + (b3/b4) y^2 + (b5/b4) y) with b3, b4, b5 = 1, 2, 3
        system = parse_system("(y, x)", f5)
        shift = parse_poly("3*y^2 + 4*y", f5, 2)
        result = apply_cs_shift(system, (MultiPoly.zero(f5, 2), shift), order=(1, 0))
        assert result == parse_system("(y, x + 3*y^2 + 4*y)", f5)

    def test_shift_may_not_use_its_own_variable(self, f5):
        system = parse_system("(x, y)", f5)
        with pytest.raises(IllegalShiftDependency):
            apply_cs_shift(system, (MultiPoly.zero(f5, 2), parse_poly("y^2", f5, 2)))

    def test_shift_needs_triangular_head(self, f5):
        # coordinate 0 uses y, which only the later coordinate may own
        system = parse_system("(x + y, y)", f5)
        with pytest.raises(IllegalShiftDependency):
            apply_cs_shift(system, (MultiPoly.zero(f5, 2), parse_poly("x^2", f5, 2)))

    def test_trivariate_chain(self, f3):
        system = parse_system("(z, x, y)", f3)
        zero = MultiPoly.zero(f3, 3)
        shifts = (zero, parse_poly("z^2", f3, 3), parse_poly("x*z", f3, 3))
        result = apply_cs_shift(system, shifts, order=(2, 0, 1))
        assert result == parse_system("(z, x + z^2, y + x*z)", f3)


class TestWitness:
    def example_chain(self, f3):
        shifts = (MultiPoly.zero(f3, 3), parse_poly("2*x^2", f3, 3), parse_poly("2*x*y", f3, 3))
        return EquivWitness((Relabel((2, 0, 1)), CsShift(shifts)))

    def test_empty_witness(self, f5):
        system = parse_system("(x + y^2, y)", f5)
        assert verify_witness(system, system, EquivWitness())

    def test_relabel(self, f3):
        source = parse_system("(z, x + z^2, y + x*z)", f3)
        assert apply_relabel(source, (2, 0, 1)) == parse_system("(x, y + x^2, z + x*y)", f3)

    def test_relabel_then_shift_reaches_identity(self, f3):
        source = parse_system("(z, x + z^2, y + x*z)", f3)
        assert verify_witness(source, PolySystem.identity(f3, 3), self.example_chain(f3))

    def test_wrong_matrix_fails(self, f5):
        witness = EquivWitness((LeftLinear(((1, 1), (0, 1))),))
        assert not verify_witness(parse_system("(x, y)", f5), parse_system("(y, x)", f5), witness)

    def test_replay_errors_count_as_mismatch(self, f5):
        witness = EquivWitness((RightLinear(((0, 0), (0, 1))),))
        assert not verify_witness(parse_system("(x, y)", f5), parse_system("(x, y)", f5), witness)

    def test_records_replay_identically(self, f3):
        witness = self.example_chain(f3)
        rebuilt = EquivWitness.from_records(f3, 3, witness.to_records(f3))
        source = parse_system("(z, x + z^2, y + x*z)", f3)
        assert replay(source, rebuilt) == replay(source, witness)

    def test_unknown_step_type(self, f3):
        with pytest.raises(WitnessFormatError):
            EquivWitness.from_records(f3, 2, [{'type': 'rotate'}])

    def test_relabel_must_be_a_permutation(self):
        with pytest.raises(WitnessFormatError):
            Relabel((0, 0, 1))

    def test_equivalence_preserves_the_verdict(self, f5):
        source = parse_system("(y^2 + x, y)", f5)
        witness = EquivWitness((RightLinear(((1, 2), (0, 1))), LeftLinear(((2, 1), (1, 1)))))
        target = replay(source, witness)
        assert brute_force(source).is_perm == brute_force(target).is_perm


class TestIdentityWitness:
    def test_quadratic_matrix_halves_cross_terms(self, f3):
        system = parse_system("(x, y, z + x*y)", f3)
        S = quadratic_matrices(system)[2]
        assert S[0][1] == S[1][0] == 2
        assert linear_part(system) == linalg.identity(3)

    def test_cs_normal_form(self, f3):
        system = parse_system("(x, y + x^2, z + x*y)", f3)
        assert triangular_basis(system) == linalg.identity(3)
        witness = identity_witness(system)
        assert witness is not None
        assert verify_witness(system, PolySystem.identity(f3, 3), witness)

    def test_nontrivial_linear_part(self, f5):
        system = parse_system("(x + 2*y + 1, y, z + x^2)", f5)
        witness = identity_witness(system)
        assert witness is not None
        assert [type(s) for s in witness] == [LeftLinear, RightLinear, CsShift]

    def test_hidden_triangular_form(self, f5):
        # (x, y, z + x^2) conjugated by an invertible change of variables
        base = parse_system("(x, y + x^2, z + x*y)", f5)
        M = ((1, 1, 0), (0, 1, 2), (3, 0, 1))
        source = apply_left(base.substitute([MultiPoly.linear_form(f5, row) for row in M]),
                            linalg.inverse(f5, M))
        assert brute_force(source).is_perm
        assert identity_witness(source) is not None

    def test_square_is_not_a_permutation(self, f3):
        system = parse_system("(x^2, y, z)", f3)
        assert not brute_force(system).is_perm
        assert identity_witness(system) is None

    def test_even_characteristic_rejected(self, f4):
        with pytest.raises(EvenCharacteristic):
            identity_witness(parse_system("(x, y, z)", f4))

    def test_cubic_rejected(self, f5):
        with pytest.raises(PreconditionViolated):
            identity_witness(parse_system("(x, y, z + x^3)", f5))
