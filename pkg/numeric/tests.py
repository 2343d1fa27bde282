"""Tests for float evaluation and the finite-difference checks."""

import json
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st
from rest_framework import serializers

from axial.models import R, RHO, X0, Y0
from axial.operators import closed_form_ABCD
from axial.quadruples import quadruple_from_separable, quadruple_from_two_variable
from axial.substitution import Lemma2Form, as_coefficients, substitute
from fueter.pipeline import classical_fueter, run_and_certify, separable_job
from fueterlab.exceptions import PreconditionError
from generators.builders import biregular_poly
from multivectors.models import AlgebraContext, Multivector
from polynomials.models import Block, CliffPoly
from polynomials.operators import CR_X, CR_Y, apply_cr, coordinate, paravector_variable

from .evaluation import (
    axial_form_function,
    eval_poly,
    numeric_product,
    paravector_value,
    poly_function,
    to_array,
    to_multivector_text,
    unit_array,
)
from .finite_differences import (
    AxialIdentity,
    Lemma2Params,
    fd_apply_cr,
    fd_axial_identity,
    fd_cr_residual,
    fd_laplacian,
    fd_partial,
    lemma2_residual,
)
from .models import EvalPoint, FDConfig, sample_points
from .serializers import points_from_json, points_to_json, report_line

R3 = AlgebraContext(3)
NEAR_ORIGIN = EvalPoint((0.5, 0.4, 0.3, 0.2), (0.1, 0.1, 0.1, 0.1))


def multivectors(algebra: AlgebraContext = R3):
    return st.dictionaries(st.integers(0, algebra.dimension - 1), st.integers(-5, 5), max_size=4).map(
        lambda terms: Multivector(algebra, terms)
    )


class EvaluationTests(SimpleTestCase):
    def test_unit_squares(self) -> None:
        e1 = unit_array(3, 1)
        np.testing.assert_allclose(numeric_product(e1, e1), -unit_array(3, 0))

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(multivectors(), multivectors())
    def test_float_product_matches_exact_product(self, a, b) -> None:
        np.testing.assert_allclose(numeric_product(to_array(a), to_array(b)), to_array(a * b))

    def test_polynomial_evaluation(self) -> None:
        x = paravector_variable(R3, Block.X)
        point = EvalPoint((1.0, 2.0, 0.0, -1.0), (0.0, 0.0, 0.0, 0.0))
        np.testing.assert_allclose(eval_poly(x, point), paravector_value(point, Block.X))
        # x x = x0^2 - |x|^2 + 2 x0 x_vec
        np.testing.assert_allclose(eval_poly(x * x, point), [-4.0, 4.0, 0.0, 0.0, -2.0, 0.0, 0.0, 0.0])
        self.assertEqual(to_multivector_text(eval_poly(x, point), R3), {"1": 1.0, "e1": 2.0, "e3": -1.0})

    def test_algebra_mismatch(self) -> None:
        with self.assertRaises(ValueError):
            eval_poly(paravector_variable(AlgebraContext(2), Block.X), NEAR_ORIGIN)


class PointTests(SimpleTestCase):
    def test_sampling_is_deterministic(self) -> None:
        first = sample_points(7, 5, 3)
        self.assertEqual(first, sample_points(7, 5, 3))
        self.assertNotEqual(first, sample_points(8, 5, 3))
        for point in first:
            self.assertTrue(all(1.0 <= value <= 2.0 for value in point.as_list()))

    def test_coordinates(self) -> None:
        point = EvalPoint.from_coordinates([0, 3, 4, 0, 1, 0, 0, 2], 3)
        self.assertEqual((point.m, point.r, point.rho), (3, 5.0, 2.0))
        self.assertEqual(point.shifted(1, 0.5).x, (0.0, 3.5, 4.0, 0.0))
        with self.assertRaises(ValueError):
            EvalPoint.from_coordinates([0, 1, 2], 3)

    def test_points_on_the_axis_are_rejected(self) -> None:
        point = EvalPoint((1.0, 0.0, 0.0, 0.0), (1.0, 1.0, 0.0, 0.0))
        with self.assertLogs("numeric.models", level="WARNING"):
            with self.assertRaises(PreconditionError):
                point.check_off_axis()
        point.check_off_axis(need_r=False)

    def test_fd_config(self) -> None:
        with override_settings(BIREG={"FD_STEP": 1e-2, "FD_ORDER": 2, "FD_TOLERANCE": 1e-4}):
            config = FDConfig.from_settings(order=None, tolerance=1e-3)
        self.assertEqual(config, FDConfig(step=1e-2, order=2, tolerance=1e-3))
        with self.assertRaises(ValueError):
            FDConfig(step=0.0, order=4, tolerance=1e-6)
        with self.assertRaises(ValueError):
            FDConfig(step=1e-3, order=3, tolerance=1e-6)


class FiniteDifferenceTests(SimpleTestCase):
    def test_partial_of_quartic_is_exact_for_fourth_order(self) -> None:
        twice_x0 = paravector_variable(R3, Block.X) + paravector_variable(R3, Block.X, conjugated=True)
        f = poly_function(twice_x0**4)
        derivative = fd_partial(f, NEAR_ORIGIN, 0, FDConfig(step=1e-2, order=4, tolerance=1e-6))
        self.assertAlmostEqual(derivative[0], 64 * 0.5**3, places=8)

    def test_constant_has_exactly_zero_derivatives(self) -> None:
        f = poly_function(CliffPoly.constant(R3, Fraction(7, 3)))
        for order in (2, 4):
            config = FDConfig(step=1e-3, order=order, tolerance=1e-6)
            for point in sample_points(6, 3, 3):
                self.assertEqual(fd_cr_residual(f, CR_X, point, config), 0.0)
                self.assertEqual(fd_cr_residual(f, CR_Y, point, config), 0.0)

    def test_exact_operators_match_central_differences(self) -> None:
        x = paravector_variable(R3, Block.X)
        y = paravector_variable(R3, Block.Y)
        e12 = Multivector.blade(R3, [1, 2])
        p = x**3 * y + e12 * coordinate(R3, Block.X, 1) ** 2 * coordinate(R3, Block.Y, 2)
        f = poly_function(p)
        config = FDConfig.from_settings()
        for spec in (CR_X, CR_Y):
            exact = apply_cr(p, spec)
            for point in sample_points(12, 100, 3):
                gap = np.max(np.abs(fd_apply_cr(f, spec, point, config) - eval_poly(exact, point)))
                self.assertLess(gap, config.tolerance)

    def test_laplacian_of_square(self) -> None:
        x = paravector_variable(R3, Block.X)
        value = fd_laplacian(poly_function(x * x), Block.X, NEAR_ORIGIN, FDConfig(1e-2, 4, 1e-6))
        np.testing.assert_allclose(value, -4 * unit_array(3, 0), atol=1e-8)

    def test_certified_output_is_biregular_numerically(self) -> None:
        result = run_and_certify(separable_job(3, 5, 4, left=[2], right=[3]))
        f = poly_function(result.direct)
        config = FDConfig.from_settings()
        for point in sample_points(3, 5, 3):
            self.assertLess(fd_cr_residual(f, CR_X, point, config), config.tolerance)
            self.assertLess(fd_cr_residual(f, CR_Y, point, config), config.tolerance)

    def test_large_coefficients_stay_within_tolerance(self) -> None:
        result = run_and_certify(separable_job(5, 5, 5))
        f = poly_function(result.direct)
        config = FDConfig.from_settings()
        for point in sample_points(3, 5, 5):
            self.assertLess(fd_cr_residual(f, CR_X, point, config), config.tolerance)
            self.assertLess(fd_cr_residual(f, CR_Y, point, config), config.tolerance)

    def test_fourth_order_convergence(self) -> None:
        # degree 5 output: the stencil error is exactly h^4/30 times a fifth derivative
        f = poly_function(classical_fueter(separable_job(3, 7, 0)))
        residuals = [
            fd_cr_residual(f, CR_X, NEAR_ORIGIN, FDConfig(step=step, order=4, tolerance=1.0))
            for step in (1e-2, 5e-3, 2.5e-3)
        ]
        for coarse, fine in zip(residuals, residuals[1:]):
            self.assertGreater(fine, 0.0)
            self.assertTrue(12.0 <= coarse / fine <= 20.0, residuals)


class AxialFormTests(SimpleTestCase):
    def test_substitution_commutes_with_evaluation(self) -> None:
        q = quadruple_from_separable(4, 3)
        P = biregular_poly([2], [3], 3)
        exact = substitute(q, P)
        f = axial_form_function(as_coefficients(q), P)
        for point in sample_points(9, 10, 3):
            np.testing.assert_allclose(eval_poly(exact, point), f(point), rtol=1e-9, atol=1e-6)

    def test_two_variable_closed_form_is_biregular(self) -> None:
        q = quadruple_from_two_variable(X0 + Y0, R + RHO)
        P = biregular_poly([], [], 3)
        f = axial_form_function(closed_form_ABCD(q, 0, 0, 3), P, constant=4.0)
        config = FDConfig.from_settings()
        for point in sample_points(11, 5, 3):
            self.assertLess(fd_cr_residual(f, CR_X, point, config), config.tolerance)
            self.assertLess(fd_cr_residual(f, CR_Y, point, config), config.tolerance)

    def test_callable_coefficients(self) -> None:
        P = biregular_poly([], [], 3)
        f = axial_form_function([lambda x0, r, y0, rho: x0 * r, 0 * X0, 0 * X0, 0 * X0], P)
        np.testing.assert_allclose(f(NEAR_ORIGIN), [0.5 * NEAR_ORIGIN.r] + [0.0] * 7)
        with self.assertRaises(ValueError):
            axial_form_function([X0], P)

    def test_omega_laplacian(self) -> None:
        config = FDConfig.from_settings()
        for point in sample_points(5, 5, 3):
            self.assertLess(fd_axial_identity(AxialIdentity.OMEGA_LAPLACIAN, None, point, config), config.tolerance)

    def test_odd_weight_in_plain_form(self) -> None:
        params = Lemma2Params(h=X0 * R, n=1, P=biregular_poly([], [], 3))
        config = FDConfig.from_settings()
        for point in sample_points(1, 5, 3):
            self.assertLess(lemma2_residual(params, point, config), config.tolerance)

    def test_omega_form(self) -> None:
        h = X0 * X0 * R * 3 - R * R * R
        params = Lemma2Params(h=h, n=1, P=biregular_poly([2], [], 3), form=Lemma2Form.DX_OMEGA)
        config = FDConfig.from_settings()
        for point in sample_points(2, 3, 3):
            self.assertLess(fd_axial_identity("lemma2_general", params, point, config), config.tolerance)

    def test_non_harmonic_weight_fails(self) -> None:
        params = Lemma2Params(h=X0 * X0, n=1, P=biregular_poly([], [], 3))
        point = sample_points(1, 1, 3)[0]
        self.assertAlmostEqual(lemma2_residual(params, point, FDConfig.from_settings()), 2.0, places=5)

    def test_missing_parameters(self) -> None:
        with self.assertRaises(ValueError):
            fd_axial_identity(AxialIdentity.LEMMA2_GENERAL, None, NEAR_ORIGIN, FDConfig.from_settings())


class PointDocumentTests(SimpleTestCase):
    def test_bare_and_wrapped_point_sets(self) -> None:
        points = sample_points(4, 2, 3)
        self.assertEqual(points_from_json(points_to_json(points), 3), points)
        self.assertEqual(points_from_json({"m": 3, "points": points_to_json(points)}, 3), points)

    def test_bad_point_sets(self) -> None:
        with self.assertRaises(serializers.ValidationError):
            points_from_json([[1.0, 2.0]], 3)
        with self.assertRaises(serializers.ValidationError):
            points_from_json({"m": 1, "points": [[1.0, 1.0, 1.0, 1.0]]}, 3)
        with self.assertRaises(serializers.ValidationError):
            points_from_json([], 3)

    def test_report_line(self) -> None:
        line = report_line("left_x", NEAR_ORIGIN, 2.5e-9, 1e-6)
        self.assertTrue(line.startswith('{"case": "left_x"'))
        record = json.loads(line)
        self.assertEqual(record["point"], NEAR_ORIGIN.as_list())
        self.assertTrue(record["pass"])
