import itertools

import pytest
from hypothesis import given, settings, strategies as st

from src.binomial.expand import expand_odd
from src.binomial.extension import build_ext
from src.errors import ArityMismatch, PolyParseError
from src.gf.field import build_field
from src.mpoly import (
    MultiPoly,
    PolySystem,
    coefficient_of,
    compose_linear,
    evaluate,
    mul,
    parse_poly,
    parse_system,
    reduce,
    system_from_json,
    system_to_json,
)
from src.mpoly.poly import reduce_exponent


def points(field, n):
    return itertools.product(field.elements(), repeat=n)


class TestReduction:
    def test_exponent_folding(self):
        assert reduce_exponent(0, 3) == 0
        assert reduce_exponent(3, 3) == 1
        assert reduce_exponent(4, 3) == 2

    def test_x4_over_f3(self, f3):
        assert reduce(MultiPoly(f3, 1, {(4,): 1})) == MultiPoly(f3, 1, {(2,): 1})

    def test_x3_over_f3(self, f3):
        assert MultiPoly(f3, 1, {(3,): 1}) == MultiPoly.variable(f3, 1, 0)

    def test_square_of_sum_of_squares(self, f3):
        f = parse_poly("(x^2 + y^2)^2", f3, 2)
        assert f == MultiPoly(f3, 2, {(2, 0): 1, (2, 2): 2, (0, 2): 1})
        assert coefficient_of(f, (2, 2)) == 2

    def test_reduced_polys_agree_pointwise(self, f3):
        raw = parse_poly("x^4*y + 2*x^3 + y^5", f3, 2)
        for x, y in points(f3, 2):
            direct = f3.sum([f3.mul(f3.pow(x, 4), y), f3.mul(2, f3.pow(x, 3)), f3.pow(y, 5)])
            assert evaluate(raw, (x, y)) == direct


class TestArithmetic:
    def test_product_with_one_and_zero(self, f5):
        f = parse_poly("x^2 + 3*x*y", f5, 2)
        assert mul(f, MultiPoly.constant(f5, 2, 1)) == f
        assert mul(f, MultiPoly.zero(f5, 2)).is_zero()

    def test_difference_of_squares(self, f5):
        product = parse_poly("(x + y)*(x - y)", f5, 2)
        assert product == MultiPoly(f5, 2, {(2, 0): 1, (0, 2): 4})

    def test_evaluation(self, f7):
        assert evaluate(parse_poly("x^2*y", f7, 2), (2, 3)) == 5

    def test_constant_evaluates_to_itself(self, f7):
        c = MultiPoly.constant(f7, 2, 6)
        assert all(c.evaluate(p) == 6 for p in points(f7, 2))

    def test_top_coefficient(self, f5):
        f = MultiPoly.monomial(f5, 2, (4, 4))
        assert coefficient_of(f, (4, 4)) == 1
        assert coefficient_of(MultiPoly.zero(f5, 2), (1, 0)) == 0

    def test_arity_checked(self, f5):
        with pytest.raises(ArityMismatch):
            MultiPoly(f5, 2, {(1,): 1})

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 4), min_size=6, max_size=6), st.lists(st.integers(0, 4), min_size=6, max_size=6))
    def test_product_is_pointwise(self, left, right):
        f5 = build_field(5)
        monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        f = MultiPoly(f5, 2, dict(zip(monomials, left)))
        g = MultiPoly(f5, 2, dict(zip(monomials, right)))
        fg = f * g
        for p in points(f5, 2):
            assert fg.evaluate(p) == f5.mul(f.evaluate(p), g.evaluate(p))


class TestComposition:
    def test_identity_matrix(self, f5):
        system = parse_system("(x + y^2, x*y)", f5)
        assert compose_linear(system, ((1, 0), (0, 1))) == system

    def test_swap_matrix(self, f5):
        system = parse_system("(x, y)", f5)
        assert compose_linear(system, ((0, 1), (1, 0))) == parse_system("(y, x)", f5)

    def test_cross_term_removal(self, f5):
        # f = a3 y^2 + a4 x + a5 y under sigma(x, y) = (x, (-a4 x + y) / a5)
        a3, a4, a5 = 2, 3, 4
        f = MultiPoly(f5, 2, {(0, 2): a3, (1, 0): a4, (0, 1): a5})
        system = PolySystem([f, MultiPoly.variable(f5, 2, 0)])
        inv_a5 = f5.inv(a5)
        sigma = ((1, 0), (f5.mul(f5.neg(a4), inv_a5), inv_a5))
        composed = compose_linear(system, sigma)
        # the linear part of f collapses to y
        assert composed[0].coefficient_of((0, 1)) == 1
        assert composed[0].coefficient_of((1, 0)) == 0
        for x, y in points(f5, 2):
            image = (x, f5.mul(f5.add(f5.mul(f5.neg(a4), x), y), inv_a5))
            assert composed.evaluate((x, y)) == system.evaluate(image)

    def test_expanded_first_coordinate_on_axis(self, f5):
        ext = build_ext(f5)
        a1, a2 = 1, 3
        f1 = expand_odd(a1, a2, ext)[0]
        u2 = f5.mul(ext.u, ext.u)
        for x2 in f5.elements():
            assert f1.evaluate((0, x2)) == f5.mul(f5.mul(a2, u2), f5.pow(x2, 3))


class TestParser:
    def test_named_and_indexed_variables_agree(self, f5):
        assert parse_poly("x1*x2 + 2*x1", f5, 2) == parse_poly("x*y + 2*x", f5, 2)

    def test_element_literal(self, f4):
        assert parse_poly("{3}*x", f4, 1) == MultiPoly(f4, 1, {(1,): 3})

    def test_division_by_constant(self, f5):
        assert parse_poly("x/2", f5, 1) == MultiPoly(f5, 1, {(1,): 3})

    def test_division_by_variable_rejected(self, f5):
        with pytest.raises(PolyParseError):
            parse_poly("1/x", f5, 1)

    def test_trailing_operator_rejected(self, f5):
        with pytest.raises(PolyParseError):
            parse_poly("x +", f5, 1)

    def test_variable_outside_system(self, f5):
        with pytest.raises(PolyParseError):
            parse_system("(x, z)", f5)

    def test_system_rendering(self, f5):
        system = parse_system("(x + y^2, y)", f5)
        assert system.nvars == 2
        assert system.to_infix() == "(x + y^2, y)"

    def test_json_form_rebuilds_the_system(self, f9):
        system = parse_system("({5}*x^2 + y, x*y + {7})", f9)
        assert system_from_json(f9, system_to_json(system)) == system
