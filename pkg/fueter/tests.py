"""Tests for the biregular Fueter pipeline."""

import pickle
from unittest import mock

from django.test import SimpleTestCase
from rest_framework import serializers

from axial.models import R, RHO, X0, Y0
from axial.quadruples import quadruple_from_separable, quadruple_from_two_variable
from axial.serializers import quadruple_to_json
from fueterlab.exceptions import CertificationError, ParityError, PreconditionError
from generators.builders import biregular_poly
from generators.models import BiregularPoly
from multivectors.models import AlgebraContext
from polynomials.models import Block, CliffPoly
from polynomials.operators import CR_X, apply_cr, laplacian, paravector_variable

from .constants import double_factorial_product
from .models import FueterJob
from .pipeline import (
    GridSpec,
    classical_fueter,
    default_indices,
    fueter_constant,
    fueter_map,
    fueter_map_closed_form,
    quadruple_sum,
    run_and_certify,
    run_grid,
    separable_job,
    separable_output_bidegree,
)
from .serializers import grid_from_json, is_grid_document, job_from_json, result_to_json


class ConstantTests(SimpleTestCase):
    def test_double_factorial_product(self) -> None:
        self.assertEqual(double_factorial_product(0, 3, 1), 2)
        self.assertEqual(double_factorial_product(1, 3, 2), 8)
        self.assertEqual(double_factorial_product(2, 5, 4), 8 * 6 * 4 * 2)
        self.assertEqual(double_factorial_product(4, 3, 0), 1)
        with self.assertRaises(ValueError):
            double_factorial_product(0, 3, -1)

    def test_fueter_constant(self) -> None:
        self.assertEqual(fueter_constant(0, 0, 3, (1, 1)), 4)
        self.assertEqual(fueter_constant(1, 0, 3, (2, 1)), 16)


class PinnedValueTests(SimpleTestCase):
    def test_square_laplacians(self) -> None:
        algebra = AlgebraContext(3)
        x = paravector_variable(algebra, Block.X)
        y = paravector_variable(algebra, Block.Y)
        self.assertEqual(laplacian(x * x, Block.X), -4)
        self.assertEqual(laplacian(y * y, Block.Y), -4)

    def test_second_powers_give_sixteen(self) -> None:
        job = separable_job(3, 2, 2)
        self.assertEqual(fueter_map(job), 16)
        self.assertEqual(fueter_map_closed_form(job), 16)
        result = run_and_certify(job)
        self.assertTrue(result.certified)
        self.assertEqual(result.constant, 4)

    def test_first_powers_vanish(self) -> None:
        self.assertTrue(fueter_map(separable_job(3, 1, 1)).is_zero())

    def test_unfactored_generator_uses_full_route(self) -> None:
        factored = biregular_poly([2], [3], 3)
        unfactored = BiregularPoly(poly=factored.poly, m=3, k=1, l=1)
        q = quadruple_from_separable(5, 4)
        self.assertEqual(fueter_map(FueterJob(3, q, unfactored)), fueter_map(FueterJob(3, q, factored)))


class BiregularGridTests(SimpleTestCase):
    """Both routes agree and follow the degree law on the full grid."""

    def test_grid(self) -> None:
        spec = GridSpec(ms=(3, 5), ks=(0, 1, 2), ls=(0, 1, 2), ns=tuple(range(6)), ps=tuple(range(6)))
        for job in spec.jobs():
            with self.subTest(job=job.slug):
                result = run_and_certify(job)
                self.assertTrue(result.certified)
                n, p = job.bidegree
                expected = separable_output_bidegree(n, p, job.k, job.l, job.m)
                if expected is None:
                    self.assertTrue(result.direct.is_zero())
                    continue
                self.assertFalse(result.direct.is_zero())
                self.assertTrue(result.direct.is_homogeneous(Block.X, expected[0]))
                self.assertTrue(result.direct.is_homogeneous(Block.Y, expected[1]))

    def test_output_bidegree(self) -> None:
        self.assertEqual(separable_output_bidegree(2, 2, 0, 0, 3), (0, 0))
        self.assertEqual(separable_output_bidegree(5, 4, 1, 1, 3), (2, 1))
        self.assertIsNone(separable_output_bidegree(3, 5, 1, 0, 3))

    def test_grid_shares_generators(self) -> None:
        jobs = GridSpec(ms=(3,), ks=(1,), ls=(0,), ns=(2, 3), ps=(0,)).jobs()
        self.assertIs(jobs[0].P, jobs[1].P)
        self.assertEqual([job.slug for job in jobs], ["m3_k1_l0_n2_p0", "m3_k1_l0_n3_p0"])

    def test_grid_descriptor_must_match(self) -> None:
        with self.assertRaises(PreconditionError):
            GridSpec(ms=(3,), ks=(0,), ls=(0,), ns=(1,), ps=(1,), left=(2,)).jobs()

    def test_process_pool_merges_by_key(self) -> None:
        jobs = [separable_job(3, 2, 2), separable_job(3, 4, 3, left=[2])]
        serial = run_grid(jobs, threads=1)
        pooled = run_grid(jobs, threads=2)
        self.assertEqual(set(serial), {(3, 0, 0, 2, 2), (3, 1, 0, 4, 3)})
        for key, result in serial.items():
            self.assertEqual(pooled[key].direct, result.direct)


class CertificationTests(SimpleTestCase):
    def test_route_mismatch_is_reported(self) -> None:
        job = separable_job(3, 2, 2)
        with mock.patch("fueter.pipeline.fueter_map_closed_form", return_value=CliffPoly.constant(AlgebraContext(3), 15)):
            with self.assertLogs("fueter.pipeline", level="ERROR"):
                with self.assertRaises(CertificationError) as caught:
                    run_and_certify(job)
        self.assertEqual(caught.exception.key, (3, 0, 0, 2, 2))

    def test_error_survives_pickling(self) -> None:
        error = pickle.loads(pickle.dumps(CertificationError("broken", key=(3, 0, 0, 1, 1))))
        self.assertEqual(str(error), "broken")
        self.assertEqual(error.key, (3, 0, 0, 1, 1))


class JobTests(SimpleTestCase):
    def test_even_m_is_refused(self) -> None:
        with self.assertRaises(PreconditionError):
            separable_job(4, 2, 2)

    def test_generator_from_other_algebra(self) -> None:
        with self.assertRaises(PreconditionError):
            FueterJob(3, quadruple_from_separable(1, 1), biregular_poly([], [], 5))

    def test_two_variable_quadruple_is_refused(self) -> None:
        q = quadruple_from_two_variable(X0 + Y0, R + RHO)
        with self.assertRaises(ParityError):
            FueterJob(3, q, biregular_poly([], [], 3))

    def test_sum_of_quadruples(self) -> None:
        q = quadruple_sum(quadruple_from_separable(n, 2) for n in (2, 3))
        job = FueterJob(3, q, biregular_poly([], [], 3))
        self.assertEqual(job.slug, "m3_k0_l0")
        expected = fueter_map(separable_job(3, 2, 2)) + fueter_map(separable_job(3, 3, 2))
        self.assertEqual(fueter_map(job), expected)

    def test_default_indices(self) -> None:
        self.assertEqual(default_indices(3, 3), [2, 3, 2])
        self.assertEqual(default_indices(0, 1), [])
        with self.assertRaises(PreconditionError):
            default_indices(1, 1)


class ClassicalTheoremTests(SimpleTestCase):
    def test_pinned_case(self) -> None:
        out = classical_fueter(separable_job(3, 4, 0))
        self.assertFalse(out.is_zero())
        self.assertFalse(out.depends_on(Block.Y))
        self.assertTrue(out.is_homogeneous(Block.X, 2))
        self.assertTrue(apply_cr(out, CR_X).is_zero())

    def test_with_generator(self) -> None:
        out = classical_fueter(separable_job(5, 6, 0, left=[2]))
        self.assertTrue(out.is_homogeneous(Block.X, 1))
        self.assertTrue(apply_cr(out, CR_X).is_zero())

    def test_y_dependence_is_refused(self) -> None:
        with self.assertRaises(PreconditionError):
            classical_fueter(separable_job(3, 4, 1))
        with self.assertRaises(PreconditionError):
            classical_fueter(separable_job(3, 4, 0, right=[2]))


class JobDocumentTests(SimpleTestCase):
    def test_separable_job(self) -> None:
        job = job_from_json({"m": 3, "k": 1, "quad": {"separable": {"n": 4, "p": 2}}, "P": {"left": [2]}})
        self.assertEqual(job.key, (3, 1, 0, 4, 2))

    def test_explicit_quadruple(self) -> None:
        document = {"m": 3, "quad": {"quadruple": quadruple_to_json(quadruple_from_separable(2, 2))}}
        job = job_from_json(document)
        self.assertEqual(job.key, (3, 0, 0, None, None))
        self.assertEqual(fueter_map(job), 16)

    def test_degree_mismatch(self) -> None:
        with self.assertRaises(PreconditionError):
            job_from_json({"m": 3, "k": 2, "quad": {"separable": {"n": 4, "p": 2}}, "P": {"left": [2]}})

    def test_quad_source_must_be_unique(self) -> None:
        quadruple = quadruple_to_json(quadruple_from_separable(1, 1))
        with self.assertRaises(serializers.ValidationError):
            job_from_json({"m": 3, "quad": {"separable": {"n": 1, "p": 1}, "quadruple": quadruple}})
        with self.assertRaises(serializers.ValidationError):
            job_from_json({"m": 3, "quad": {}})
        with self.assertRaises(serializers.ValidationError):
            job_from_json({"m": 3, "quad": {"separable": {"n": -1, "p": 1}}})

    def test_grid_document(self) -> None:
        document = {"m": [3], "n": [2, 3], "p": [2], "P": {"left": [2], "right": []}}
        self.assertTrue(is_grid_document(document))
        self.assertFalse(is_grid_document({"m": 3}))
        spec = grid_from_json(document)
        self.assertEqual((spec.ks, spec.ls), ((1,), (0,)))
        self.assertEqual(len(spec.jobs()), 2)

    def test_result_document(self) -> None:
        document = result_to_json(run_and_certify(separable_job(3, 2, 2)))
        self.assertEqual((document["m"], document["n"], document["p"]), (3, 2, 2))
        self.assertEqual(document["direct"]["terms"], [{"exps": [0] * 8, "coef": {"1": "16"}}])
        self.assertEqual(document["constant"], 4)
        self.assertTrue(document["routes_agree"])
        self.assertTrue(document["biregular"])
