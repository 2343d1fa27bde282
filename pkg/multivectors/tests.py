"""Tests for the Clifford algebra kernel."""

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from rest_framework import serializers

from fueterlab.exceptions import ContextMismatchError

from .models import (
    AlgebraContext,
    Multivector,
    add,
    as_rational,
    blade_product,
    conjugate,
    geometric_product,
    negate,
    scalar_mul,
)
from .serializers import multivector_from_json, multivector_to_json

R3 = AlgebraContext(3)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def multivectors(algebra: AlgebraContext = R3):
    return st.dictionaries(st.integers(0, algebra.dimension - 1), rationals, max_size=4).map(
        lambda terms: Multivector(algebra, terms)
    )


class BladeProductTests(SimpleTestCase):
    """Signs of products of basis blades in R_{0,m}."""

    def test_generators_square_to_minus_one(self) -> None:
        for j in range(1, 4):
            e = Multivector.blade(R3, [j])
            self.assertEqual(e * e, -1)

    def test_generators_anticommute(self) -> None:
        e1, e2 = Multivector.blade(R3, [1]), Multivector.blade(R3, [2])
        self.assertEqual(e1 * e2, Multivector.blade(R3, [1, 2]))
        self.assertEqual(e2 * e1, -Multivector.blade(R3, [1, 2]))
        self.assertEqual(Multivector.blade(R3, [2, 1]), -Multivector.blade(R3, [1, 2]))

    def test_bivector_squares_to_minus_one(self) -> None:
        e12 = Multivector.blade(R3, [1, 2])
        self.assertEqual(e12 * e12, -1)

    def test_blade_product_of_masks(self) -> None:
        self.assertEqual(blade_product(0b001, 0b010), (1, 0b011))
        self.assertEqual(blade_product(0b010, 0b001), (-1, 0b011))
        self.assertEqual(blade_product(0b011, 0b011), (-1, 0))
        self.assertEqual(blade_product(0b111, 0b111), (1, 0))

    def test_pseudoscalar_of_r3_is_central_for_vectors(self) -> None:
        e123 = Multivector.blade(R3, [1, 2, 3])
        e2 = Multivector.blade(R3, [2])
        self.assertEqual(e123 * e2, e2 * e123)


class MultivectorTests(SimpleTestCase):
    def test_conjugation_and_reversion_signs(self) -> None:
        e1 = Multivector.blade(R3, [1])
        e12 = Multivector.blade(R3, [1, 2])
        e123 = Multivector.blade(R3, [1, 2, 3])
        self.assertEqual(e1.conjugate(), -e1)
        self.assertEqual(e12.conjugate(), -e12)
        self.assertEqual(e123.conjugate(), e123)
        self.assertEqual(e1.reverse(), e1)
        self.assertEqual(e12.reverse(), -e12)
        self.assertEqual(e123.reverse(), -e123)
        self.assertEqual(e123.grade_involution(), -e123)

    def test_paravector_times_conjugate_is_norm(self) -> None:
        x = Multivector.paravector(R3, [1, 2, 3, 0])
        self.assertEqual(x * x.conjugate(), 14)
        self.assertEqual(x.norm_squared(), 14)

    def test_grade_projection(self) -> None:
        value = Multivector(R3, {0: 1, 0b001: 2, 0b011: 3})
        self.assertEqual(value.grade(1), Multivector.blade(R3, [1], 2))
        self.assertEqual(value.scalar_part, 1)

    def test_zero_coefficients_are_dropped(self) -> None:
        e1 = Multivector.blade(R3, [1])
        self.assertTrue((e1 - e1).is_zero())
        self.assertEqual(Multivector(R3, {0b001: 0}), Multivector.zero(R3))

    def test_module_level_operations(self) -> None:
        e1, e2 = Multivector.blade(R3, [1]), Multivector.blade(R3, [2])
        e12 = Multivector.blade(R3, [1, 2])
        self.assertEqual(dict(scalar_mul(e12, Fraction(3, 2)).terms), {0b011: Fraction(3, 2)})
        self.assertEqual(dict(add(e1, e2).terms), {0b001: 1, 0b010: 1})
        self.assertEqual(negate(e1), Multivector.blade(R3, [1], -1))
        self.assertTrue(add(e1, negate(e1)).is_zero())
        self.assertEqual(geometric_product(e12, e12), -1)
        self.assertEqual(conjugate(e12), negate(e12))
        self.assertEqual(conjugate(Multivector.scalar(R3, 1)), 1)

    def test_floats_are_refused(self) -> None:
        with self.assertRaises(TypeError):
            as_rational(0.5)
        with self.assertRaises(TypeError):
            Multivector.scalar(R3, 1.5)

    def test_mixing_algebras_fails(self) -> None:
        with self.assertRaises(ContextMismatchError):
            Multivector.scalar(R3, 1) + Multivector.scalar(AlgebraContext(2), 1)

    def test_generator_limit(self) -> None:
        with self.assertRaises(ValueError):
            AlgebraContext(0)
        with self.assertRaises(ValueError):
            AlgebraContext(17)

    def test_blade_keys(self) -> None:
        self.assertEqual(R3.blade_key(0), "1")
        self.assertEqual(R3.blade_key(0b101), "e13")
        self.assertEqual(R3.parse_blade_key("e13"), 0b101)
        r10 = AlgebraContext(10)
        mask = r10.mask([1, 10])
        self.assertEqual(r10.blade_key(mask), "e1,10")
        self.assertEqual(r10.parse_blade_key("e1,10"), mask)
        with self.assertRaises(ValueError):
            R3.parse_blade_key("e31")

    @settings(max_examples=60, deadline=None)
    @given(multivectors(), multivectors(), multivectors())
    def test_product_is_associative(self, a, b, c) -> None:
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(max_examples=60, deadline=None)
    @given(multivectors(), multivectors(), multivectors())
    def test_product_distributes_over_sum(self, a, b, c) -> None:
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a + b) * c, a * c + b * c)

    @settings(max_examples=60, deadline=None)
    @given(multivectors(), multivectors())
    def test_anti_automorphisms(self, a, b) -> None:
        self.assertEqual((a * b).conjugate(), b.conjugate() * a.conjugate())
        self.assertEqual((a * b).reverse(), b.reverse() * a.reverse())
        self.assertEqual((a * b).grade_involution(), a.grade_involution() * b.grade_involution())

    @settings(max_examples=40, deadline=None)
    @given(multivectors(), rationals)
    def test_scalars_commute(self, a, q) -> None:
        self.assertEqual(a * Multivector.scalar(R3, q), a.scale(q))
        self.assertEqual(Multivector.scalar(R3, q) * a, q * a)


class MultivectorSerializerTests(SimpleTestCase):
    def test_text_form(self) -> None:
        value = Multivector(R3, {0: -1, 0b101: Fraction(3, 2)})
        self.assertEqual(multivector_to_json(value), {"1": "-1", "e13": "3/2"})
        self.assertEqual(multivector_from_json({"1": "-1", "e13": "3/2"}, R3), value)

    def test_decimal_strings_are_rejected(self) -> None:
        with self.assertRaises(serializers.ValidationError):
            multivector_from_json({"e1": "1.5"}, R3)
        with self.assertRaises(serializers.ValidationError):
            multivector_from_json({"e1": 1.5}, R3)

    def test_unknown_blade_is_rejected(self) -> None:
        with self.assertRaises(serializers.ValidationError):
            multivector_from_json({"e4": "1"}, R3)
