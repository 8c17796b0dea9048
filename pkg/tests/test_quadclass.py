import pytest
from hypothesis import given, settings, strategies as st

from src.equiv import EquivWitness, LeftLinear, verify_witness
from src.errors import ArityMismatch, BudgetExceeded, ClassifierError, EvenCharacteristic, NotNormalized, OddCharacteristic
from src.gf.field import build_field
from src.mpoly import parse_system
from src.permoracle import brute_force
from src.quadclass import (
    CLASS_FIFTH,
    CLASS_X2_Y,
    CLASS_X2_Y2,
    CLASS_XY,
    NOT_PP,
    QuadCoeffs,
    canonical_form,
    canonical_representative,
    classify_even,
    classify_odd,
    l1_coefficients,
    normalize_cross_term,
    scan_quad,
    scan_record,
)
from src.quadclass.scan import sampled_tuples


def coeffs(field, a, b):
    return QuadCoeffs.of(field, tuple(a) + tuple(b))


def assert_replays(c, verdict):
    assert verify_witness(c.to_system(), verdict.canonical, verdict.witness)


class TestCoeffs:
    def test_needs_ten_values(self, f3):
        with pytest.raises(ArityMismatch):
            QuadCoeffs.of(f3, [0] * 9)

    def test_from_system(self, f5):
        c = QuadCoeffs.from_system(parse_system("(y^2 + x, 2*x*y + 3*y)", f5))
        assert c.a == (0, 0, 1, 1, 0)
        assert c.b == (0, 2, 0, 0, 3)
        assert c.to_system() == parse_system("(y^2 + x, 2*x*y + 3*y)", f5)

    def test_constant_terms_dropped(self, f5):
        c = QuadCoeffs.from_system(parse_system("(x + 1, y + 4)", f5))
        assert c.flat() == (0, 0, 0, 1, 0, 0, 0, 0, 0, 1)

    def test_swap_variables(self, f5):
        c = coeffs(f5, (0, 0, 1, 1, 0), (0, 0, 0, 0, 1))
        assert c.swap_variables().to_system() == parse_system("(x^2 + y, x)", f5)

    def test_record_names(self, f3):
        record = coeffs(f3, (1, 0, 0, 0, 0), (0, 0, 0, 0, 2)).to_record()
        assert record['a1'] == 1 and record['b5'] == 2


class TestNormalize:
    def test_no_cross_term(self, f5):
        c = coeffs(f5, (1, 0, 2, 3, 4), (0, 1, 0, 1, 0))
        normalized, witness = normalize_cross_term(c)
        assert normalized == c
        assert len(witness) == 0

    def test_both_cross_terms(self, f5):
        c = coeffs(f5, (1, 1, 0, 2, 0), (0, 1, 0, 0, 1))
        normalized, witness = normalize_cross_term(c)
        assert normalized.a == (1, 0, 0, 2, 4)
        assert normalized.b == c.b
        assert verify_witness(c.to_system(), normalized.to_system(), witness)

    def test_cross_term_only_in_first(self, f5):
        c = coeffs(f5, (0, 1, 0, 0, 0), (0, 0, 0, 1, 0))
        normalized, witness = normalize_cross_term(c)
        assert normalized == c.swap_coordinates()
        assert witness == EquivWitness((LeftLinear(((0, 1), (1, 0))),))


class TestOdd:
    def test_case_i(self, f3):
        c = coeffs(f3, (0, 0, 0, 0, 1), (0, 0, 0, 1, 0))
        verdict = canonical_form(c)
        assert verdict.case_label == "Odd-i"
        assert verdict.canonical_class == CLASS_XY
        assert_replays(c, verdict)

    def test_case_ii(self, f5):
        c = coeffs(f5, (0, 0, 1, 1, 0), (0, 0, 0, 0, 1))
        verdict = canonical_form(c)
        assert verdict.case_label == "Odd-ii"
        assert verdict.canonical == canonical_representative(f5, CLASS_XY)
        assert_replays(c, verdict)

    def test_case_iii(self, f5):
        # (s, s^2 + x) with s = x + y
        c = coeffs(f5, (0, 0, 0, 1, 1), (1, 2, 1, 1, 0))
        verdict = canonical_form(c)
        assert verdict.case_label == "Odd-iii"
        assert_replays(c, verdict)

    def test_square_is_not_a_permutation(self, f3):
        c = coeffs(f3, (1, 0, 0, 0, 0), (0, 0, 0, 0, 1))
        verdict = canonical_form(c)
        assert not verdict.is_perm
        assert verdict.case_label == NOT_PP
        p, r = verdict.collision
        system = c.to_system()
        assert p != r and system.evaluate(p) == system.evaluate(r)

    def test_requires_normalized_input(self, f5):
        with pytest.raises(NotNormalized):
            classify_odd(coeffs(f5, (0, 1, 0, 0, 0), (0, 0, 0, 1, 0)))

    def test_rejects_even_field(self, f4):
        with pytest.raises(EvenCharacteristic):
            classify_odd(coeffs(f4, (0, 0, 0, 0, 1), (0, 0, 0, 1, 0)))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 4), min_size=10, max_size=10))
    def test_agrees_with_oracle(self, flat):
        f5 = build_field(5)
        c = QuadCoeffs.of(f5, flat)
        verdict = canonical_form(c)
        assert verdict.is_perm == brute_force(c.to_system()).is_perm
        if verdict.is_perm:
            assert verdict.canonical_class == CLASS_XY


class TestEven:
    def test_case_i(self, f4):
        c = coeffs(f4, (0, 0, 0, 0, 1), (1, 0, 0, 0, 0))
        verdict = canonical_form(c)
        assert verdict.case_label == "Even-i"
        assert verdict.canonical_class == CLASS_X2_Y
        assert_replays(c, verdict)

    def test_case_iii_after_variable_swap(self, f4):
        c = coeffs(f4, (1, 0, 0, 0, 0), (0, 0, 1, 0, 0))
        verdict = canonical_form(c)
        assert verdict.case_label == "Even-iii"
        assert verdict.canonical_class == CLASS_X2_Y2
        assert verdict.applied_symmetry.swap_variables
        assert_replays(c, verdict)

    def test_case_iv_reaches_fifth_class(self, f8):
        c = coeffs(f8, (0, 0, 1, 1, 0), (0, 0, 0, 0, 1))
        assert l1_coefficients(c) == (1, 0, 0)
        verdict = canonical_form(c)
        assert verdict.case_label == "Even-iv"
        assert verdict.canonical_class == CLASS_FIFTH
        assert verdict.linearized is not None
        assert_replays(c, verdict)

    def test_linear_mix(self, f2):
        c = QuadCoeffs.from_system(parse_system("(x + y, x^2 + y)", f2))
        verdict = canonical_form(c)
        assert verdict.is_perm == brute_force(c.to_system()).is_perm

    def test_rejects_odd_field(self, f3):
        with pytest.raises(OddCharacteristic):
            classify_even(coeffs(f3, (0, 0, 0, 0, 1), (1, 0, 0, 0, 0)))

    def test_fifth_class_needs_parameters(self, f4):
        with pytest.raises(ClassifierError):
            canonical_representative(f4, CLASS_FIFTH)

    def test_square_in_second_variable_folds_into_first(self, f4):
        c = coeffs(f4, (0, 0, 0, 1, 0), (0, 0, 1, 0, 0))
        verdict = canonical_form(c)
        assert verdict.canonical_class == CLASS_X2_Y
        assert_replays(c, verdict)
        with pytest.raises(ClassifierError):
            canonical_representative(f4, "(x, y^2)")


class TestScan:
    def test_exhaustive_binary_sweep(self, f2):
        records = list(scan_quad(f2, exhaustive=True))
        assert len(records) == 2 ** 10
        assert all(r['agree'] for r in records)

    @pytest.mark.parametrize("q", [3, 4, 5, 8])
    def test_sampled_sweep(self, q, f3, f4, f5, f8):
        field = {3: f3, 4: f4, 5: f5, 8: f8}[q]
        records = list(scan_quad(field, samples=150, seed=7))
        assert len(records) == 150
        assert all(r['agree'] for r in records)

    @pytest.mark.slow
    def test_exhaustive_ternary_sweep(self, f3):
        records = list(scan_quad(f3, exhaustive=True))
        assert len(records) == 3 ** 10
        assert all(r['agree'] for r in records)
        assert {r['verdict']['canonical_class'] for r in records if r['verdict']['is_perm']} == {CLASS_XY}

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [7, 8, 9])
    def test_large_sampled_sweep(self, q, f7, f8, f9):
        field = {7: f7, 8: f8, 9: f9}[q]
        records = list(scan_quad(field, samples=3000, seed=q))
        assert all(r['agree'] for r in records)
        if q % 2:
            assert all(r['verdict']['canonical_class'] == CLASS_XY for r in records if r['verdict']['is_perm'])

    def test_budget(self, f3):
        with pytest.raises(BudgetExceeded):
            list(scan_quad(f3, exhaustive=True, budget=1000))

    def test_sampling_is_seeded(self, f5):
        assert list(sampled_tuples(f5, 5, seed=3)) == list(sampled_tuples(f5, 5, seed=3))

    def test_record_shape(self, f3):
        record = scan_record(f3, (0, 0, 0, 0, 1, 0, 0, 0, 1, 0))
        assert record['agree']
        assert record['verdict']['case'] == "Odd-i"
        assert record['oracle']['is_perm']
