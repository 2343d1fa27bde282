"""Command-level tests: outputs, determinism and exit codes."""

import json
import tempfile
from io import StringIO
from pathlib import Path

from django.apps import apps
from django.conf import settings
from django.core.management import CommandError, call_command
from django.test import SimpleTestCase
from rest_framework import serializers

from axial.quadruples import quadruple_from_separable
from axial.serializers import quadruple_from_json
from generators.builders import biregular_poly, fueter_variable
from multivectors.models import AlgebraContext
from numeric.serializers import points_from_json
from polynomials.models import Block, Side
from polynomials.operators import paravector_variable
from polynomials.serializers import polynomial_from_json, polynomial_to_json

from .base import EXIT_FAILURE, EXIT_PRECONDITION, EXIT_SCHEMA, index_list
from .files import dumps, load_json, write_atomic
from .suites import lemma1_suite


class CommandTestCase(SimpleTestCase):
    def setUp(self) -> None:
        self._directory = tempfile.TemporaryDirectory()
        self.directory = Path(self._directory.name)

    def tearDown(self) -> None:
        self._directory.cleanup()

    def call(self, *args, **options) -> str:
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code: int, *args, **options) -> CommandError:
        with self.assertRaises(CommandError) as caught:
            self.call(*args, **options)
        self.assertEqual(caught.exception.returncode, code)
        return caught.exception

    def write(self, name: str, document) -> str:
        path = self.directory / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)


class SettingsTests(SimpleTestCase):
    def test_only_engine_apps_are_installed(self) -> None:
        self.assertFalse(apps.is_installed("django.contrib.auth"))
        self.assertFalse(apps.is_installed("django.contrib.contenttypes"))
        for app in ("multivectors", "polynomials", "generators", "axial", "fueter", "numeric", "cli"):
            self.assertTrue(apps.is_installed(app))

    def test_no_database_or_api_settings(self) -> None:
        for name in ("DATABASES", "REST_FRAMEWORK", "DEFAULT_AUTO_FIELD"):
            self.assertFalse(settings.is_overridden(name), name)
        self.assertTrue(settings.is_overridden("BIREG"))


class FileHelperTests(CommandTestCase):
    def test_dumps_is_sorted(self) -> None:
        self.assertEqual(dumps({"b": 1, "a": [1, 2]}), '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n')

    def test_atomic_write_leaves_no_temporary_file(self) -> None:
        target = write_atomic(self.directory / "nested" / "out.json", "{}\n")
        self.assertEqual(target.read_text(), "{}\n")
        self.assertEqual([path.name for path in target.parent.iterdir()], ["out.json"])

    def test_index_list(self) -> None:
        self.assertEqual(index_list("2,3"), [2, 3])
        self.assertEqual(index_list(""), [])

    def test_broken_json_is_a_schema_error(self) -> None:
        path = self.directory / "broken.json"
        path.write_text("{", encoding="utf-8")
        with self.assertRaises(serializers.ValidationError):
            load_json(path)


class GenerateCommandTests(CommandTestCase):
    def test_single_job_from_flags(self) -> None:
        target = self.directory / "result.json"
        output = self.call("generate", m=3, n=2, p=2, out=str(target))
        self.assertEqual(output.strip(), "m3_k0_l0_n2_p2: biregular, routes agree, constant 4")
        document = json.loads(target.read_text())
        self.assertEqual(document["direct"]["terms"], [{"exps": [0] * 8, "coef": {"1": "16"}}])
        self.assertTrue(document["routes_agree"])

    def test_output_is_byte_identical(self) -> None:
        first, second = self.directory / "a.json", self.directory / "b.json"
        for target in (first, second):
            self.call("generate", m=3, k=1, n=4, p=2, left=[2], out=str(target))
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_job_file(self) -> None:
        job = self.write("job.json", {"m": 3, "l": 1, "quad": {"separable": {"n": 3, "p": 4}}, "P": {"right": [3]}})
        target = self.directory / "result.json"
        self.call("generate", job, out=str(target))
        document = json.loads(target.read_text())
        self.assertEqual((document["k"], document["l"], document["n"], document["p"]), (0, 1, 3, 4))
        self.assertTrue(polynomial_from_json(document["direct"]).is_homogeneous(Block.Y, 1))

    def test_grid_file(self) -> None:
        grid = self.write("grid.json", {"m": [3], "k": [0, 1], "n": [2, 4], "p": [2]})
        output = self.call("generate", grid, out=str(self.directory / "results"), threads=1)
        self.assertIn("certified 4 jobs", output)
        names = sorted(path.name for path in (self.directory / "results").iterdir())
        self.assertEqual(
            names, ["m3_k0_l0_n2_p2.json", "m3_k0_l0_n4_p2.json", "m3_k1_l0_n2_p2.json", "m3_k1_l0_n4_p2.json"]
        )

    def test_schema_errors(self) -> None:
        self.assertExitCode(EXIT_SCHEMA, "generate", n=2, p=2, out=str(self.directory / "x.json"))
        self.assertExitCode(EXIT_SCHEMA, "generate", str(self.directory / "missing.json"), out=str(self.directory / "x.json"))
        broken = self.directory / "broken.json"
        broken.write_text("[1, ", encoding="utf-8")
        self.assertExitCode(EXIT_SCHEMA, "generate", str(broken), out=str(self.directory / "x.json"))

    def test_precondition_errors(self) -> None:
        target = str(self.directory / "x.json")
        error = self.assertExitCode(EXIT_PRECONDITION, "generate", m=4, n=2, p=2, out=target)
        self.assertIn("m must be odd", str(error))
        self.assertExitCode(EXIT_PRECONDITION, "generate", m=3, n=2, p=2, left=[5], out=target)
        self.assertExitCode(EXIT_PRECONDITION, "generate", m=3, k=2, n=2, p=2, left=[2], out=target)
        self.assertFalse((self.directory / "x.json").exists())


class LemmaCommandTests(CommandTestCase):
    def test_operator_identities(self) -> None:
        output = self.call("lemma", "1", seed=1, count=5)
        self.assertIn("lemma 1: 400/400 cases passed (seed 1)", output)

    def test_every_order_and_symbol_is_checked(self) -> None:
        report = lemma1_suite(4, count=1)
        self.assertEqual(len(report.cases), 5 * 4 * 4)
        keys = [case.key for case in report.cases if case.key.startswith("(i) ")]
        self.assertEqual(len(keys), 16)
        for n in range(1, 5):
            self.assertEqual(sum(key.endswith(f" n={n}") for key in keys), 4)

    def test_suite_is_reproducible(self) -> None:
        self.assertEqual(lemma1_suite(9, count=3).lines(), lemma1_suite(9, count=3).lines())

    def test_passing_suite_with_expected_failure(self) -> None:
        self.assertExitCode(EXIT_FAILURE, "lemma", "1", seed=1, count=2, expect_fail=True)

    def test_laplacian_closed_forms(self) -> None:
        output = self.call("lemma", "2", seed=2, ms=[3], points=3)
        self.assertNotIn("FAIL", output)

    def test_injected_failure(self) -> None:
        output = self.call("lemma", "2", seed=2, ms=[3], points=2, expect_fail=True)
        self.assertIn("injected non-harmonic h=x0^2 m=3\tFAIL", output)

    def test_vekua_systems(self) -> None:
        output = self.call("lemma", "3", ms=[3])
        self.assertNotIn("FAIL", output)
        self.assertIn("(z1+z2)^4", output)

    def test_bad_fd_settings(self) -> None:
        self.assertExitCode(EXIT_SCHEMA, "lemma", "2", ms=[3], fd_step=-1.0)


class EvalCommandTests(CommandTestCase):
    def test_generator_is_biregular(self) -> None:
        poly = self.write("P.json", polynomial_to_json(biregular_poly([2, 3], [2], 3).poly))
        lines = self.call("eval", poly, count=4, seed=3).splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(all(json.loads(line)["pass"] for line in lines))

    def test_result_document_and_point_file(self) -> None:
        target = self.directory / "result.json"
        self.call("generate", m=3, k=1, n=5, p=2, left=[3], out=str(target))
        points = self.write("points.json", [[1.0, 0.5, 0.25, 2.0, 1.5, 1.0, -1.0, 0.5]])
        lines = self.call("eval", str(target), points).splitlines()
        self.assertEqual(len(lines), 1)
        self.assertEqual(json.loads(lines[0])["point"], [1.0, 0.5, 0.25, 2.0, 1.5, 1.0, -1.0, 0.5])

    def test_paravector_is_not_monogenic(self) -> None:
        poly = self.write("x.json", polynomial_to_json(paravector_variable(AlgebraContext(3), Block.X)))
        self.assertExitCode(EXIT_FAILURE, "eval", poly, count=2)
        # the Cauchy-Riemann operator gives the constant 1 - m = -2
        out = StringIO()
        with self.assertRaises(CommandError):
            call_command("eval", poly, count=1, operator="left_x", stdout=out)
        self.assertAlmostEqual(json.loads(out.getvalue())["residual"], 2.0, places=6)
        self.call("eval", poly, count=2, operator="right_y")

    def test_constant_passes_everywhere(self) -> None:
        poly = self.write("one.json", polynomial_to_json(biregular_poly([], [], 5).poly))
        lines = self.call("eval", poly, count=3, seed=8).splitlines()
        self.assertEqual([json.loads(line)["residual"] for line in lines], [0.0, 0.0, 0.0])

    def test_points_for_other_algebra(self) -> None:
        poly = self.write("P.json", polynomial_to_json(biregular_poly([], [], 3).poly))
        points = self.write("points.json", {"m": 1, "points": [[1.0, 1.0, 1.0, 1.0]]})
        self.assertExitCode(EXIT_SCHEMA, "eval", poly, points)


class ExportCommandTests(CommandTestCase):
    def test_generator(self) -> None:
        output = self.call("export", "generator", m=3, left=[2], right=[3, 3])
        self.assertEqual(polynomial_from_json(json.loads(output)), biregular_poly([2], [3, 3], 3).poly)

    def test_variable(self) -> None:
        output = self.call("export", "variable", m=5, side="right", index=4)
        self.assertEqual(polynomial_from_json(json.loads(output)), fueter_variable(Side.RIGHT, 4, 5).poly)

    def test_quadruple_file(self) -> None:
        target = self.directory / "q.json"
        self.call("export", "quadruple", n=3, p=2, out=str(target))
        self.assertEqual(quadruple_from_json(load_json(target)), quadruple_from_separable(3, 2))

    def test_points_are_seeded(self) -> None:
        first = self.call("export", "points", m=3, count=3, seed=5)
        self.assertEqual(first, self.call("export", "points", m=3, count=3, seed=5))
        self.assertEqual(len(points_from_json(json.loads(first), 3)), 3)

    def test_bad_index(self) -> None:
        self.assertExitCode(EXIT_PRECONDITION, "export", "variable", m=3, index=5)
