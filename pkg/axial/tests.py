"""Tests for the axial calculus, quadruples and substitution."""

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from rest_framework import serializers

from fueterlab.exceptions import CauchyRiemannError, NotPolynomialError, ParityError, PreconditionError
from generators.builders import biregular_poly
from generators.models import BiregularPoly
from multivectors.models import AlgebraContext
from polynomials.models import Block
from polynomials.operators import is_biregular, paravector_variable

from .models import R, RHO, X0, Y0, AxialFunction, AxialVar, HolomorphicQuadruple, Parity
from .operators import (
    Lemma1Identity,
    closed_form_ABCD,
    d_lower,
    d_upper,
    fueter_orders,
    is_harmonic_pair,
    lemma1_residual,
    vekua_residuals,
)
from .quadruples import (
    HarmonicKind,
    complex_power,
    harmonic_family,
    quadruple_from_separable,
    quadruple_from_two_variable,
)
from .serializers import axial_from_json, axial_to_json, quadruple_from_json, quadruple_to_json
from .substitution import (
    Lemma2Form,
    expand_blocks,
    lemma2_check,
    reduce_parity,
    substitute,
    substitute_blocks,
)

laurent = st.dictionaries(
    st.tuples(*[st.integers(-3, 4)] * 4), st.integers(-5, 5).filter(bool), min_size=1, max_size=4
).map(AxialFunction)

ZERO = AxialFunction.zero()


class AxialFunctionTests(SimpleTestCase):
    def test_arithmetic(self) -> None:
        self.assertEqual((X0 + R) * (X0 - R), X0 * X0 - R * R)
        self.assertEqual(R.divide_by(AxialVar.R), 1)
        self.assertEqual((X0**3).partial(AxialVar.X0), X0 * X0 * 3)
        self.assertTrue((X0 - X0).is_zero())

    def test_parity_signature(self) -> None:
        f = X0 * R + R**3 * RHO**2
        signature = f.parity_signature()
        self.assertEqual((signature.in_r, signature.in_rho), (Parity.ODD, Parity.EVEN))
        self.assertTrue(f.has_parity(Parity.ODD, Parity.EVEN))
        self.assertEqual((R + X0).parity_signature().in_r, Parity.MIXED)

    def test_evaluate(self) -> None:
        f = X0 * X0 - R.shift(AxialVar.R, -2)
        self.assertAlmostEqual(f.evaluate(2.0, 0.5, 0.0, 1.0), 2.0)

    def test_symbol_names(self) -> None:
        self.assertIs(AxialVar.parse("rho"), AxialVar.RHO)
        with self.assertRaises(ValueError):
            AxialVar.parse("z")


class AxialOperatorTests(SimpleTestCase):
    def test_lower_operator(self) -> None:
        self.assertEqual(d_lower(R**4, AxialVar.R, 1), R * R * 4)
        self.assertEqual(d_lower(R**4, "r", 2), 8)
        self.assertEqual(d_lower(X0, AxialVar.R, 3), ZERO)
        self.assertEqual(d_lower(X0, AxialVar.R, 0), X0)

    def test_upper_operator(self) -> None:
        self.assertEqual(d_upper(R**5, AxialVar.R, 1), R**3 * 4)
        self.assertEqual(d_upper(R**5, AxialVar.R, 2), R * 8)
        self.assertEqual(d_upper(RHO, "rho", 1), ZERO)

    def test_negative_order_is_refused(self) -> None:
        with self.assertRaises(PreconditionError):
            d_lower(R, AxialVar.R, -1)
        with self.assertRaises(PreconditionError):
            lemma1_residual(Lemma1Identity.I, R, AxialVar.R, 0)

    @settings(max_examples=80, deadline=None)
    @given(laurent, st.sampled_from(list(AxialVar)), st.integers(1, 4), st.sampled_from(list(Lemma1Identity)))
    def test_identities_hold_for_laurent_polynomials(self, f, var, n, which) -> None:
        self.assertTrue(lemma1_residual(which, f, var, n).is_zero())

    def test_fueter_orders(self) -> None:
        self.assertEqual(fueter_orders(0, 0, 3), (1, 1))
        self.assertEqual(fueter_orders(2, 1, 5), (4, 3))
        with self.assertRaises(PreconditionError):
            fueter_orders(0, 0, 4)
        with self.assertRaises(PreconditionError):
            fueter_orders(-1, 0, 3)


class QuadrupleTests(SimpleTestCase):
    def test_complex_power(self) -> None:
        re, im = complex_power(2, AxialVar.X0, AxialVar.R)
        self.assertEqual(re, X0 * X0 - R * R)
        self.assertEqual(im, X0 * R * 2)
        self.assertEqual(complex_power(0, AxialVar.Y0, AxialVar.RHO), (AxialFunction.constant(), ZERO))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 6), st.integers(0, 6))
    def test_separable_quadruples_keep_parity(self, n, p) -> None:
        q = quadruple_from_separable(n, p)
        self.assertTrue(q.parity_ok)
        self.assertFalse(any(q.cauchy_riemann_residuals()))

    def test_negative_bidegree(self) -> None:
        with self.assertRaises(PreconditionError):
            quadruple_from_separable(-1, 0)

    def test_non_holomorphic_data_is_refused(self) -> None:
        with self.assertRaises(CauchyRiemannError):
            HolomorphicQuadruple(X0 * X0, ZERO, ZERO, ZERO)

    def test_two_variable_quadruple(self) -> None:
        q = quadruple_from_two_variable(X0 + Y0, R + RHO)
        self.assertEqual(q.u2, R + RHO)
        self.assertEqual(q.v2, -(X0 + Y0))
        self.assertFalse(q.parity_ok)
        with self.assertRaises(CauchyRiemannError):
            quadruple_from_two_variable(X0, RHO)

    def test_sum_and_scale(self) -> None:
        q = quadruple_from_separable(1, 0) + quadruple_from_separable(2, 0).scale(3)
        self.assertEqual(q.u1, X0 + (X0 * X0 - R * R) * 3)

    def test_harmonic_families(self) -> None:
        for kind in HarmonicKind:
            for n, p in ((0, 0), (1, 2), (3, 1), (4, 4)):
                self.assertTrue(is_harmonic_pair(harmonic_family(n, p, kind)))
        self.assertTrue(harmonic_family(3, 2, "im_re").has_parity(Parity.ODD, Parity.EVEN))
        self.assertTrue(harmonic_family(2, 3, "re_im").has_parity(Parity.EVEN, Parity.ODD))


class VekuaTests(SimpleTestCase):
    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(0, 5),
        st.integers(0, 5),
        st.integers(0, 2),
        st.integers(0, 2),
        st.sampled_from([1, 3, 5]),
    )
    def test_closed_form_of_separable_data(self, n, p, k, l, m) -> None:
        A, B, C, D = closed_form_ABCD(quadruple_from_separable(n, p), k, l, m)
        self.assertFalse(any(vekua_residuals(A, B, C, D, k, l, m)))

    def test_closed_form_of_two_variable_data(self) -> None:
        q = quadruple_from_two_variable(X0 + Y0, R + RHO)
        A, B, C, D = closed_form_ABCD(q, 0, 0, 3)
        self.assertEqual(A, ZERO)
        self.assertEqual(B, AxialFunction.monomial(b=-2, d=-1, coefficient=-1))
        self.assertEqual(C, AxialFunction.monomial(b=-1, d=-2, coefficient=-1))
        self.assertEqual(D, -(X0 + Y0).shift(AxialVar.R, -2).shift(AxialVar.RHO, -2))
        for k, l, m in ((0, 0, 3), (1, 2, 3), (2, 0, 5)):
            self.assertFalse(any(vekua_residuals(*closed_form_ABCD(q, k, l, m), k, l, m)))

    def test_broken_coefficients_are_detected(self) -> None:
        A, B, C, D = closed_form_ABCD(quadruple_from_separable(4, 2), 0, 0, 3)
        self.assertTrue(any(vekua_residuals(A + X0, B, C, D, 0, 0, 3)))


class SubstitutionTests(SimpleTestCase):
    def test_first_power_gives_paravector(self) -> None:
        P = biregular_poly([], [], 3)
        self.assertEqual(substitute(quadruple_from_separable(1, 0), P), paravector_variable(AlgebraContext(3), Block.X))

    def test_block_and_full_routes_agree(self) -> None:
        P = biregular_poly([2], [3], 3)
        for n, p in ((2, 1), (3, 3), (0, 2)):
            q = quadruple_from_separable(n, p)
            self.assertEqual(expand_blocks(substitute_blocks(q, P), P.poly.context), substitute(q, P))

    def test_unfactored_generator_needs_full_route(self) -> None:
        factored = biregular_poly([2], [], 3)
        P = BiregularPoly(poly=factored.poly, m=3, k=1, l=0)
        q = quadruple_from_separable(2, 0)
        with self.assertRaises(PreconditionError):
            substitute_blocks(q, P)
        self.assertEqual(substitute(q, P), substitute(q, factored))

    def test_parity_is_enforced(self) -> None:
        with self.assertRaises(ParityError):
            reduce_parity(X0 + R, odd_in_r=False, odd_in_rho=False)
        with self.assertRaises(NotPolynomialError):
            reduce_parity(X0.shift(AxialVar.X0, -2), odd_in_r=False, odd_in_rho=False)
        self.assertEqual(reduce_parity(R**3 * RHO, True, True), R * R)

    def test_two_variable_quadruple_has_no_substitution(self) -> None:
        q = quadruple_from_two_variable(X0 + Y0, R + RHO)
        with self.assertRaises(ParityError):
            substitute(q, biregular_poly([], [], 3))

    def test_closed_form_substitutes_to_biregular_polynomial(self) -> None:
        P = biregular_poly([2], [2], 3)
        coefficients = closed_form_ABCD(quadruple_from_separable(5, 4), 1, 1, 3)
        self.assertTrue(is_biregular(substitute(coefficients, P)))


class LaplacianOfAxialFormsTests(SimpleTestCase):
    def test_plain_form_example(self) -> None:
        P = biregular_poly([], [], 3)
        lhs, rhs = lemma2_check(X0 * X0 - R * R, 1, 0, 0, 3, P, Lemma2Form.DX_PLAIN)
        self.assertEqual(lhs, rhs)
        self.assertEqual(lhs, -4)

    def test_every_form(self) -> None:
        P = biregular_poly([2], [3], 3)
        cases = {
            Lemma2Form.DX_PLAIN: harmonic_family(3, 1, HarmonicKind.RE_RE),
            Lemma2Form.DX_OMEGA: harmonic_family(3, 1, HarmonicKind.IM_RE),
            Lemma2Form.DY_PLAIN: harmonic_family(1, 3, HarmonicKind.RE_RE),
            Lemma2Form.DY_NU: harmonic_family(1, 3, HarmonicKind.RE_IM),
        }
        for form, h in cases.items():
            with self.subTest(form=form.value):
                lhs, rhs = lemma2_check(h, 1, 1, 1, 3, P, form)
                self.assertEqual(lhs, rhs)

    def test_second_power_with_unfactored_generator(self) -> None:
        factored = biregular_poly([2, 3], [], 5)
        P = BiregularPoly(poly=factored.poly, m=5, k=2, l=0)
        h = harmonic_family(5, 0, HarmonicKind.IM_RE)
        lhs, rhs = lemma2_check(h, 2, 2, 0, 5, P, "Dx_omega")
        self.assertEqual(lhs, rhs)

    def test_non_harmonic_weight(self) -> None:
        P = biregular_poly([], [], 3)
        with self.assertRaises(PreconditionError):
            lemma2_check(X0 * X0, 1, 0, 0, 3, P, Lemma2Form.DX_PLAIN)
        lhs, rhs = lemma2_check(X0 * X0, 1, 0, 0, 3, P, Lemma2Form.DX_PLAIN, enforce_harmonic=False)
        self.assertNotEqual(lhs, rhs)

    def test_generator_must_match_degrees(self) -> None:
        with self.assertRaises(PreconditionError):
            lemma2_check(X0, 1, 1, 0, 3, biregular_poly([], [], 3), Lemma2Form.DX_PLAIN)


class AxialSerializerTests(SimpleTestCase):
    def test_function_document(self) -> None:
        f = X0 * X0 * 3 - R.shift(AxialVar.RHO, -1)
        document = axial_to_json(f)
        self.assertEqual(document["terms"][0], {"a": 2, "b": 0, "c": 0, "d": 0, "coef": "3"})
        self.assertEqual(axial_from_json(document), f)

    def test_duplicate_terms_are_rejected(self) -> None:
        term = {"a": 1, "b": 0, "c": 0, "d": 0, "coef": "1"}
        with self.assertRaises(serializers.ValidationError):
            axial_from_json({"terms": [term, term]})

    def test_quadruple_document(self) -> None:
        q = quadruple_from_separable(2, 1)
        document = quadruple_to_json(q)
        self.assertTrue(document["parity_ok"])
        self.assertEqual(quadruple_from_json(document), q)

    def test_non_holomorphic_quadruple_document(self) -> None:
        document = quadruple_to_json(quadruple_from_separable(1, 0))
        document = {**document, "v1": axial_to_json(ZERO)}
        with self.assertRaises(CauchyRiemannError):
            quadruple_from_json(document)
