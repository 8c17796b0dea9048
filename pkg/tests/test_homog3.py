import numpy as np
import pytest

from src.errors import (
    BudgetExceeded,
    DivisionByZero,
    PreconditionViolated,
    WrongCharacteristic,
    WrongResidueClass,
    ZeroDenominator,
    ZeroForm,
)
from src.gf.field import build_field
from src.gf.residues import is_square, nonresidues
from src.homog3 import (
    CASE_CUBIC,
    CASE_NOT_PP,
    CASE_PROPORTIONAL,
    INFINITY,
    BinaryForm,
    HomogSystem,
    HomogVerdict,
    MobiusMap,
    ProjPoint,
    RationalMap,
    classify_t32,
    decompose_char3,
    drs_discriminants,
    drs_family,
    drs_map,
    drs_witness,
    pgl2,
    product_perm_equiv,
    quad_form_irreducible,
    rat_eval,
    rat_is_perm,
    scan_homog3,
    shape_conforming_permutations,
    to_rational,
)
from src.homog3 import unipoly
from src.homog3.classify import SQUARE_FORM_NOTE
from src.homog3.rational import rat_collision
from src.permoracle import brute_force


class TestForms:
    def test_binary_form_product(self, f5):
        x = BinaryForm(f5, (1, 0))
        y = BinaryForm(f5, (0, 1))
        assert (x * y).coeffs == (0, 1, 0)
        assert (x * y).to_poly().terms == {(1, 1): 1}

    def test_only_trivial_zero(self, f5):
        assert BinaryForm(f5, (1, 0, 2)).only_trivial_zero()
        assert not BinaryForm(f5, (1, 0, 1)).only_trivial_zero()

    @pytest.mark.parametrize("form,expected", [((1, 0, 2), True), ((1, 0, 1), False), ((0, 1, 1), False)])
    def test_odd_irreducibility(self, f5, form, expected):
        assert quad_form_irreducible(f5, *form) is expected

    def test_even_irreducibility(self, f2, f4):
        assert quad_form_irreducible(f2, 1, 1, 1)
        assert not quad_form_irreducible(f4, 1, 1, 1)
        assert not quad_form_irreducible(f4, 1, 0, 1)

    def test_zero_form(self, f5):
        with pytest.raises(ZeroForm):
            quad_form_irreducible(f5, 0, 0, 0)


class TestUniPoly:
    def test_cube_of_linear(self, f5):
        assert unipoly.power(f5, unipoly.linear(f5, 1), 3) == (4, 3, 2, 1)

    def test_division_and_gcd(self, f5):
        assert unipoly.divmod_poly(f5, (4, 0, 1), (4, 1)) == ((1, 1), ())
        assert unipoly.gcd(f5, (4, 0, 1), (4, 1)) == (4, 1)
        assert unipoly.gcd(f5, (), (2, 4)) == (3, 1)
        with pytest.raises(DivisionByZero):
            unipoly.divmod_poly(f5, (1, 1), ())

    def test_even_extension(self, f8):
        assert unipoly.mul(f8, (0, 1), (0, 1)) == (0, 0, 1)
        assert unipoly.add(f8, (1, 1), (1,)) == (0, 1)
        assert unipoly.sub(f8, (3,), (3,)) == ()


class TestRational:
    def test_to_rational(self, f5):
        R = to_rational(HomogSystem.of(f5, (1, 0, 0, 0, 0, 1)))
        assert R.num == (1,)
        assert R.den == (0, 0, 0, 1)

    def test_zero_denominator(self, f5):
        with pytest.raises(ZeroDenominator):
            to_rational(HomogSystem.of(f5, (1, 0, 0, 0, 0, 0)))

    def test_normal_form_cancels(self, f5):
        # (t^2 - 1) / (t - 1) = t + 1
        assert RationalMap(f5, (4, 0, 1), (4, 1)) == RationalMap(f5, (1, 1), (1,))

    def test_eval_at_infinity(self, f5):
        R = RationalMap(f5, (1,), (0, 0, 0, 1))
        assert rat_eval(R, INFINITY) == ProjPoint(0)
        assert rat_eval(R, ProjPoint(0)) == INFINITY
        assert rat_eval(RationalMap(f5, (0, 2), (1, 1)), INFINITY) == ProjPoint(2)

    def test_collision(self, f5):
        R = RationalMap(f5, (0, 0, 1), (1,))
        assert not rat_is_perm(R)
        p, r = rat_collision(R)
        assert rat_eval(R, p) == rat_eval(R, r)

    def test_pgl2_size(self, f3):
        maps = list(pgl2(f3))
        assert len(maps) == 24
        assert len(set(maps)) == 24
        assert maps[0] == MobiusMap.identity(f3)

    def test_three_points(self, f5):
        src = [ProjPoint(0), ProjPoint(1), INFINITY]
        dst = [ProjPoint(1), INFINITY, ProjPoint(3)]
        mu = MobiusMap.from_three_points(f5, src, dst)
        assert [mu(p) for p in src] == dst
        assert mu.compose(mu.inverse()) == MobiusMap.identity(f5)


class TestDrs:
    def test_discriminants(self, f5):
        assert drs_discriminants(f5, 1, 2) == (2, 3)
        assert drs_discriminants(f5, 1, 0) == (2, 0)

    def test_map_permutes(self, f5):
        assert rat_is_perm(drs_map(f5, 1, 1, 0))
        assert rat_is_perm(drs_map(f5, 2, 3, None))

    def test_witness_regenerates(self, f5):
        R = drs_map(f5, 3, 1, 4)
        d, r, s = drs_witness(R)
        assert drs_map(f5, d, r, s) == R

    def test_invalid_parameters(self, f5):
        with pytest.raises(PreconditionViolated):
            drs_map(f5, 0, 1, 2)
        with pytest.raises(PreconditionViolated):
            drs_map(f5, 1, 2, 2)

    def test_residue_class(self, f7):
        with pytest.raises(WrongResidueClass):
            drs_map(f7, 1, 1, 0)

    @pytest.mark.parametrize("q", [5, pytest.param(11, marks=pytest.mark.slow),
                                   pytest.param(17, marks=pytest.mark.slow),
                                   pytest.param(23, marks=pytest.mark.slow)])
    def test_discriminants_are_nonresidues(self, q):
        field = build_field(q)
        rng = np.random.default_rng(q)
        pairs = [(int(r), int(s)) for r, s in rng.integers(1, q, size=(1000, 2)) if r != s]
        for r, s in pairs:
            assert not any(is_square(field, d) for d in drs_discriminants(field, r, s))

    @pytest.mark.parametrize("q", [2, 5, pytest.param(11, marks=pytest.mark.slow),
                                   pytest.param(17, marks=pytest.mark.slow),
                                   pytest.param(23, marks=pytest.mark.slow)])
    def test_census_matches_family(self, q, f2, f5):
        field = {2: f2, 5: f5}.get(q) or build_field(q)
        census = shape_conforming_permutations(field)
        assert census == frozenset(drs_family(field).keys())
        finite = frozenset(drs_family(field, finite_only=True).keys())
        assert finite < census
        assert all(len(num) == 1 for num, _ in census - finite)

    def test_binary_census(self, f2):
        assert len(shape_conforming_permutations(f2)) == 3
        assert len(drs_family(f2, finite_only=True)) == 1


class TestChar3:
    def test_frobenius(self, f3):
        witness = decompose_char3(RationalMap(f3, (0, 0, 0, 1), (1,)))
        assert witness.gamma == 0
        assert witness.mu == MobiusMap.identity(f3)
        assert witness.nu == MobiusMap.identity(f3)

    def test_nonresidue_core(self, f9):
        gamma = nonresidues(f9)[0]
        R = RationalMap(f9, (0, f9.neg(gamma), 0, 1), (1,))
        witness = decompose_char3(R)
        assert witness.gamma == gamma
        assert witness.mu == witness.nu == MobiusMap.identity(f9)

    def test_non_permutation(self, f3):
        R = RationalMap(f3, (0, 2, 0, 1), (1,))
        assert not rat_is_perm(R)
        assert decompose_char3(R) is None

    def test_wrong_characteristic(self, f5):
        with pytest.raises(WrongCharacteristic):
            decompose_char3(RationalMap(f5, (0, 0, 0, 1), (1,)))

    def test_budget(self, f9):
        with pytest.raises(BudgetExceeded):
            decompose_char3(RationalMap(f9, (0, 0, 0, 1), (1,)), max_q=3)


class TestProduct:
    def test_linear_forms(self, f5):
        assert product_perm_equiv(BinaryForm(f5, (1, 0)), BinaryForm(f5, (0, 1)), BinaryForm(f5, (1,))) == (True, True)

    def test_cubic_non_permutation(self, f5):
        f1 = BinaryForm(f5, (1, 0, 1, 0))
        f2 = BinaryForm(f5, (0, 0, 0, 1))
        assert product_perm_equiv(f1, f2, BinaryForm(f5, (1,))) == (False, False)

    def test_anisotropic_factor(self, f5):
        # g = x^2 + 2y^2 has only the trivial zero and gcd(3, 4) = 1
        sides = product_perm_equiv(BinaryForm(f5, (1, 0)), BinaryForm(f5, (0, 1)), BinaryForm(f5, (1, 0, 2)))
        assert sides[0] == sides[1]

    def test_f1_with_top_power(self, f5):
        with pytest.raises(PreconditionViolated):
            product_perm_equiv(BinaryForm(f5, (1, 1)), BinaryForm(f5, (0, 1)), BinaryForm(f5, (1,)))

    def test_isotropic_factor(self, f5):
        with pytest.raises(PreconditionViolated):
            product_perm_equiv(BinaryForm(f5, (1, 0)), BinaryForm(f5, (0, 1)), BinaryForm(f5, (1, 0, 1)))


class TestClassify:
    def test_proportional(self, f5):
        verdict = classify_t32(HomogSystem.of(f5, (1, 0, 2, 1, 0, 2)))
        assert verdict.case_label == CASE_PROPORTIONAL
        assert verdict.k == 1
        assert verdict.note is None

    def test_q1_zero(self, f5):
        system = HomogSystem.of(f5, (1, 0, 1, 1, 0, 2))
        verdict = classify_t32(system)
        assert verdict.case_label == CASE_NOT_PP
        assert verdict.reason == "q1-zero"
        assert set(verdict.collision) == {(0, 4), (1, 2)}
        poly = system.to_system()
        assert poly.evaluate((0, 4)) == poly.evaluate((1, 2))

    def test_cube_roots_of_unity(self, f7):
        verdict = classify_t32(HomogSystem.of(f7, (1, 0, 1, 1, 0, 1)))
        assert verdict.reason == "cubing-not-bijective"

    def test_missing_leading_coefficients(self, f5):
        assert classify_t32(HomogSystem.of(f5, (0, 1, 1, 1, 0, 1))).reason == "a1-zero"
        assert classify_t32(HomogSystem.of(f5, (1, 0, 2, 1, 0, 0))).reason == "b4-zero"

    def test_cubic_rational_certificate(self, f5):
        # x (4x^2 + 3xy + 2y^2), y^3: the rational map is drs_map(1, 1, 0)
        system = HomogSystem.of(f5, (4, 3, 2, 0, 0, 1))
        assert to_rational(system) == drs_map(f5, 1, 1, 0)
        verdict = classify_t32(system)
        assert verdict.case_label == CASE_CUBIC
        assert verdict.note == SQUARE_FORM_NOTE
        assert set(verdict.certificate) == {"d", "r", "s"}
        assert brute_force(system.to_system()).is_perm

    def test_negative_verdict_needs_collision(self):
        with pytest.raises(ValueError):
            HomogVerdict(False, CASE_NOT_PP)

    def test_record(self, f5):
        record = classify_t32(HomogSystem.of(f5, (1, 0, 2, 1, 0, 2))).to_record(f5)
        assert record['case'] == CASE_PROPORTIONAL
        assert record['q1_irreducible'] is True


class TestScan:
    def test_exhaustive_binary(self, f2):
        records = list(scan_homog3(f2))
        assert len(records) == 16
        assert all(r['agree'] for r in records)

    def test_sampled(self, f5):
        records = list(scan_homog3(f5, exhaustive=False, samples=200, seed=11))
        assert len(records) == 200
        assert all(r['agree'] for r in records)

    def test_budget(self, f5):
        with pytest.raises(BudgetExceeded):
            list(scan_homog3(f5, budget=100))

    @pytest.mark.slow
    def test_exhaustive_five(self, f5):
        assert all(r['agree'] for r in scan_homog3(f5))

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [8, 11])
    def test_large_sampled(self, q, f8):
        field = f8 if q == 8 else build_field(q)
        records = list(scan_homog3(field, exhaustive=False, samples=4000, seed=q))
        assert all(r['agree'] for r in records)
