"""Tests for Clifford polynomials and their differential operators."""

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from rest_framework import serializers

from multivectors.models import AlgebraContext, Multivector

from .models import Block, CliffPoly, VarId
from .operators import (
    CR_X,
    CR_Y,
    DIRAC_X,
    DIRAC_Y,
    apply_cr,
    conjugate_cr,
    coordinate,
    euler_operator,
    is_biregular,
    laplacian,
    laplacian_power,
    paravector_variable,
    partial,
    radius_squared,
    vector_variable,
)
from .serializers import polynomial_from_json, polynomial_to_json

R3 = AlgebraContext(3)
X1, X2, Y1 = VarId(Block.X, 1), VarId(Block.X, 2), VarId(Block.Y, 1)


def small_polys(algebra: AlgebraContext = R3):
    width = 2 * (algebra.m + 1)
    exponents = st.tuples(*[st.integers(0, 2)] * width)
    coefficients = st.dictionaries(
        st.integers(0, algebra.dimension - 1), st.integers(-3, 3), min_size=1, max_size=2
    ).map(lambda terms: Multivector(algebra, terms))
    return st.dictionaries(exponents, coefficients, max_size=3).map(lambda terms: CliffPoly(algebra, terms))


def scalar_polys(algebra: AlgebraContext = R3):
    width = 2 * (algebra.m + 1)
    exponents = st.tuples(*[st.integers(0, 2)] * width)
    values = st.integers(-3, 3).filter(bool)
    return st.dictionaries(exponents, values, max_size=3).map(
        lambda terms: CliffPoly(algebra, {e: Multivector.scalar(algebra, c) for e, c in terms.items()})
    )


def vector_parts(algebra: AlgebraContext = R3):
    """Scalar components f_1..f_m of a vector-valued f = sum_j f_j e_j."""

    return st.lists(scalar_polys(algebra), min_size=algebra.m, max_size=algebra.m)


def assemble_vector(parts, algebra: AlgebraContext = R3) -> CliffPoly:
    total = CliffPoly.zero(algebra)
    for j, part in enumerate(parts, start=1):
        total = total + part * Multivector.blade(algebra, [j])
    return total


def directional_sum(parts, g: CliffPoly, block: Block) -> CliffPoly:
    """sum_j f_j d_j g over the vector coordinates of the block."""

    total = CliffPoly.zero(g.context)
    for j, part in enumerate(parts, start=1):
        total = total + part * partial(g, VarId(block, j))
    return total


class CliffPolyTests(SimpleTestCase):
    def test_variables_commute_with_units(self) -> None:
        e1 = Multivector.blade(R3, [1])
        x1 = coordinate(R3, Block.X, 1)
        self.assertEqual(e1 * x1, x1 * e1)

    def test_coefficient_order_is_kept(self) -> None:
        e1, e2 = Multivector.blade(R3, [1]), Multivector.blade(R3, [2])
        left = CliffPoly.monomial(R3, {X1: 1}, e1)
        right = CliffPoly.monomial(R3, {X2: 1}, e2)
        self.assertEqual(left * right, -(right * left))

    def test_vector_variable_squares_to_minus_radius(self) -> None:
        x = vector_variable(R3, Block.X)
        self.assertEqual(x * x, -radius_squared(R3, Block.X))

    def test_paravector_times_conjugate(self) -> None:
        x = paravector_variable(R3, Block.X)
        x_bar = paravector_variable(R3, Block.X, conjugated=True)
        expected = coordinate(R3, Block.X, 0) ** 2 + radius_squared(R3, Block.X)
        self.assertEqual(x * x_bar, expected)

    def test_bad_exponent_vector(self) -> None:
        with self.assertRaises(ValueError):
            CliffPoly(R3, {(1, 0): Multivector.scalar(R3, 1)})

    def test_block_degrees(self) -> None:
        p = CliffPoly.monomial(R3, {X1: 2, Y1: 1}) + CliffPoly.monomial(R3, {VarId(Block.X, 0): 1})
        self.assertEqual(p.max_block_degree(Block.X), 2)
        self.assertEqual(p.block_degrees(Block.Y), {0, 1})
        self.assertTrue(p.depends_on(Block.Y))
        self.assertEqual(CliffPoly.zero(R3).max_block_degree(Block.X), -1)

    @settings(max_examples=40, deadline=None)
    @given(small_polys(), small_polys(), small_polys())
    def test_product_is_associative(self, a, b, c) -> None:
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(max_examples=40, deadline=None)
    @given(small_polys(), small_polys())
    def test_conjugation_reverses_products(self, a, b) -> None:
        self.assertEqual((a * b).conjugate(), b.conjugate() * a.conjugate())


class OperatorTests(SimpleTestCase):
    def test_laplacian_of_square(self) -> None:
        x = paravector_variable(R3, Block.X)
        self.assertEqual(laplacian(x * x, Block.X), -4)

    def test_partial_derivative(self) -> None:
        p = CliffPoly.monomial(R3, {X1: 3, X2: 1}, Fraction(1, 3))
        self.assertEqual(partial(p, X1), CliffPoly.monomial(R3, {X1: 2, X2: 1}))
        self.assertTrue(partial(p, Y1).is_zero())

    def test_cauchy_riemann_of_paravector(self) -> None:
        x = paravector_variable(R3, Block.X)
        # 1 + e_j e_j summed over j = 1 - m
        self.assertEqual(apply_cr(x, CR_X), 1 - R3.m)
        self.assertEqual(conjugate_cr(x, CR_X), 1 + R3.m)

    @settings(max_examples=30, deadline=None)
    @given(small_polys())
    def test_laplacian_factors_in_both_orders(self, p) -> None:
        for spec in (CR_X, CR_Y):
            expected = laplacian(p, spec.block)
            self.assertEqual(conjugate_cr(apply_cr(p, spec), spec), expected)
            self.assertEqual(apply_cr(conjugate_cr(p, spec), spec), expected)

    @settings(max_examples=30, deadline=None)
    @given(small_polys())
    def test_laplacians_of_the_two_blocks_commute(self, p) -> None:
        self.assertEqual(laplacian(laplacian(p, Block.X), Block.Y), laplacian(laplacian(p, Block.Y), Block.X))

    def test_right_operator_acts_on_y(self) -> None:
        y = paravector_variable(R3, Block.Y)
        self.assertEqual(apply_cr(y, CR_Y), 1 - R3.m)
        self.assertTrue(apply_cr(y, CR_X).is_zero())

    def test_dirac_operator_annihilates_fueter_variable(self) -> None:
        e12 = Multivector.blade(R3, [1, 2])
        z2 = coordinate(R3, Block.X, 2) + CliffPoly.monomial(R3, {X1: 1}, e12)
        self.assertTrue(apply_cr(z2, DIRAC_X).is_zero())

    def test_laplacian_power(self) -> None:
        x0 = coordinate(R3, Block.X, 0)
        self.assertEqual(laplacian_power(x0**4, Block.X, 2), 24)
        self.assertTrue(laplacian_power(x0**3, Block.X, 2).is_zero())
        self.assertEqual(laplacian_power(x0**3, Block.X, 0), x0**3)
        with self.assertRaises(ValueError):
            laplacian_power(x0, Block.X, -1)

    def test_euler_operator_counts_vector_degree(self) -> None:
        p = CliffPoly.monomial(R3, {X1: 2, X2: 1, VarId(Block.X, 0): 5})
        self.assertEqual(euler_operator(p, Block.X), p.scale(3))

    def test_constants_are_biregular(self) -> None:
        self.assertTrue(is_biregular(CliffPoly.constant(R3, 7)))
        self.assertFalse(is_biregular(paravector_variable(R3, Block.X)))


class ProductRuleTests(SimpleTestCase):
    """Leibniz rules of the vector Dirac operators on random polynomials."""

    @settings(max_examples=25, deadline=None)
    @given(scalar_polys(), small_polys())
    def test_scalar_factor_on_the_left(self, phi, g) -> None:
        expected = apply_cr(phi, DIRAC_X) * g + phi * apply_cr(g, DIRAC_X)
        self.assertEqual(apply_cr(phi * g, DIRAC_X), expected)

    @settings(max_examples=25, deadline=None)
    @given(scalar_polys(), small_polys())
    def test_scalar_factor_on_the_right(self, phi, g) -> None:
        expected = g * apply_cr(phi, DIRAC_Y) + phi * apply_cr(g, DIRAC_Y)
        self.assertEqual(apply_cr(phi * g, DIRAC_Y), expected)

    @settings(max_examples=20, deadline=None)
    @given(vector_parts(), small_polys())
    def test_vector_factor_on_the_left(self, parts, g) -> None:
        f = assemble_vector(parts)
        expected = (
            apply_cr(f, DIRAC_X) * g - f * apply_cr(g, DIRAC_X) - directional_sum(parts, g, Block.X).scale(2)
        )
        self.assertEqual(apply_cr(f * g, DIRAC_X), expected)

    @settings(max_examples=20, deadline=None)
    @given(vector_parts(), small_polys())
    def test_vector_factor_on_the_right(self, parts, g) -> None:
        f = assemble_vector(parts)
        expected = (
            g * apply_cr(f, DIRAC_Y) - apply_cr(g, DIRAC_Y) * f - directional_sum(parts, g, Block.Y).scale(2)
        )
        self.assertEqual(apply_cr(g * f, DIRAC_Y), expected)


class PolynomialSerializerTests(SimpleTestCase):
    def test_document_layout(self) -> None:
        p = CliffPoly.monomial(R3, {X1: 2}, Multivector.blade(R3, [1, 2], Fraction(3, 2))) + CliffPoly.constant(R3, -1)
        document = polynomial_to_json(p)
        self.assertEqual(document["m"], 3)
        self.assertEqual(document["vars"], ["x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"])
        self.assertEqual(document["terms"][0], {"exps": [0, 2, 0, 0, 0, 0, 0, 0], "coef": {"e12": "3/2"}})
        self.assertEqual(document["terms"][1]["coef"], {"1": "-1"})
        self.assertEqual(polynomial_from_json(document), p)

    def test_wrong_width_is_rejected(self) -> None:
        with self.assertRaises(serializers.ValidationError):
            polynomial_from_json({"m": 3, "terms": [{"exps": [1, 0], "coef": {"1": "1"}}]})

    def test_duplicate_exponents_are_rejected(self) -> None:
        term = {"exps": [0] * 8, "coef": {"1": "1"}}
        with self.assertRaises(serializers.ValidationError):
            polynomial_from_json({"m": 3, "terms": [term, term]})

    def test_wrong_variable_names_are_rejected(self) -> None:
        with self.assertRaises(serializers.ValidationError):
            polynomial_from_json({"m": 1, "vars": ["a", "b", "c", "d"], "terms": []})
