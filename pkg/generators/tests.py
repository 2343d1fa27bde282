"""Tests for Fueter variables and biregular generators."""

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from rest_framework import serializers

from fueterlab.exceptions import CertificationError, PreconditionError
from multivectors.models import AlgebraContext
from polynomials.models import Block, CliffPoly, Side
from polynomials.operators import CR_X, CR_Y, DIRAC_X, DIRAC_Y, apply_cr, coordinate, euler_operator

from .builders import biregular_poly, fueter_variable, monogenic_poly, symmetrized_product
from .models import BiregularPoly
from .serializers import GeneratorDescriptorSerializer, generator_from_json


class FueterVariableTests(SimpleTestCase):
    def test_left_and_right_variables_are_monogenic(self) -> None:
        for m in (2, 3, 5):
            for index in range(2, m + 1):
                left = fueter_variable(Side.LEFT, index, m)
                right = fueter_variable(Side.RIGHT, index, m)
                self.assertTrue(apply_cr(left.poly, DIRAC_X).is_zero())
                self.assertTrue(apply_cr(right.poly, DIRAC_Y).is_zero())
                self.assertFalse(left.poly.depends_on(Block.Y))
                self.assertFalse(right.poly.depends_on(Block.X))

    def test_index_range(self) -> None:
        for index in (0, 1, 4):
            with self.assertRaises(PreconditionError):
                fueter_variable(Side.LEFT, index, 3)
        with self.assertRaises(PreconditionError):
            fueter_variable(Side.LEFT, 2, 1)


class SymmetrizedProductTests(SimpleTestCase):
    def test_empty_product_is_one(self) -> None:
        self.assertEqual(symmetrized_product([], Side.LEFT, 3), 1)

    def test_order_of_indices_does_not_matter(self) -> None:
        self.assertEqual(symmetrized_product([3, 2], Side.LEFT, 3), symmetrized_product([2, 3], Side.LEFT, 3))

    def test_two_factor_product(self) -> None:
        z2 = fueter_variable(Side.LEFT, 2, 3).poly
        z3 = fueter_variable(Side.LEFT, 3, 3).poly
        self.assertEqual(symmetrized_product([2, 3], Side.LEFT, 3).scale(2), z2 * z3 + z3 * z2)

    @settings(max_examples=15, deadline=None)
    @given(st.lists(st.integers(2, 4), min_size=1, max_size=3))
    def test_products_are_monogenic_and_homogeneous(self, indices) -> None:
        left = symmetrized_product(indices, Side.LEFT, 4)
        right = symmetrized_product(indices, Side.RIGHT, 4)
        self.assertTrue(apply_cr(left, DIRAC_X).is_zero())
        self.assertTrue(apply_cr(right, DIRAC_Y).is_zero())
        self.assertTrue(left.is_homogeneous(Block.X, len(indices), include_scalar=False))


class BiregularPolyTests(SimpleTestCase):
    def test_biregular_generator(self) -> None:
        P = biregular_poly([2, 3], [2], 3)
        self.assertEqual(P.bidegree, (2, 1))
        self.assertTrue(P.is_factored)
        self.assertEqual(P.left * P.right, P.poly)
        # P does not depend on x0, y0, so the full operators vanish too
        self.assertTrue(apply_cr(P.poly, CR_X).is_zero())
        self.assertTrue(apply_cr(P.poly, CR_Y).is_zero())

    @settings(max_examples=15, deadline=None)
    @given(
        st.lists(st.integers(2, 3), max_size=3),
        st.lists(st.integers(2, 3), max_size=2),
    )
    def test_euler_identities(self, left, right) -> None:
        P = biregular_poly(left, right, 3)
        k, l = P.bidegree
        self.assertEqual(euler_operator(P.poly, Block.X), P.poly.scale(k))
        self.assertEqual(euler_operator(P.poly, Block.Y), P.poly.scale(l))

    def test_homogeneous_in_each_block(self) -> None:
        P = biregular_poly([2, 3, 5], [4, 4], 5)
        self.assertEqual(P.bidegree, (3, 2))
        self.assertEqual(P.poly.block_degrees(Block.X, include_scalar=False), {3})
        self.assertEqual(P.poly.block_degrees(Block.Y, include_scalar=False), {2})
        # no x0 or y0: the full and vector degrees coincide
        self.assertTrue(P.poly.is_homogeneous(Block.X, 3))
        self.assertTrue(P.poly.is_homogeneous(Block.Y, 2))

    def test_constant_generator_for_m_one(self) -> None:
        P = biregular_poly([], [], 1)
        self.assertEqual(P.poly, 1)
        with self.assertRaises(PreconditionError):
            biregular_poly([2], [], 1)

    def test_monogenic_poly_has_no_y(self) -> None:
        P = monogenic_poly([2, 2], 3)
        self.assertEqual(P.bidegree, (2, 0))
        self.assertFalse(P.poly.depends_on(Block.Y))

    def test_non_monogenic_polynomial_is_refused(self) -> None:
        algebra = AlgebraContext(3)
        with self.assertRaises(CertificationError):
            BiregularPoly(poly=coordinate(algebra, Block.X, 1), m=3, k=1, l=0)

    def test_inhomogeneous_polynomial_is_refused(self) -> None:
        algebra = AlgebraContext(3)
        with self.assertRaises(CertificationError):
            BiregularPoly(poly=CliffPoly.constant(algebra, 1), m=3, k=1, l=0)


class GeneratorDescriptorTests(SimpleTestCase):
    def test_descriptor(self) -> None:
        P = generator_from_json({"left": [2], "right": [3, 3]}, 3)
        self.assertEqual(P.bidegree, (1, 2))
        self.assertEqual(GeneratorDescriptorSerializer.describe((2,), ()), {"left": [2], "right": []})

    def test_missing_lists_default_to_constant(self) -> None:
        self.assertEqual(generator_from_json({}, 3).poly, 1)

    def test_bad_descriptor(self) -> None:
        with self.assertRaises(serializers.ValidationError):
            generator_from_json({"left": ["two"]}, 3)
        with self.assertRaises(PreconditionError):
            generator_from_json({"left": [7]}, 3)
