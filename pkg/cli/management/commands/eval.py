"""Finite-difference biregularity report of a polynomial on a point set."""

from __future__ import annotations

from cli.base import EngineCommand
from cli.files import load_json
from numeric.evaluation import poly_function
from numeric.finite_differences import fd_cr_residual
from numeric.models import sample_points
from numeric.serializers import points_from_json, report_line
from polynomials.operators import CR_X, CR_Y
from polynomials.serializers import polynomial_from_json

OPERATORS = {
    "biregular": (CR_X, CR_Y),
    "left_x": (CR_X,),
    "right_y": (CR_Y,),
}


class Command(EngineCommand):
    help = (
        "Stream one JSON line per point with the central-difference residual of d_x f and f d_y. "
        "The polynomial file may be a polynomial document or a generate result (its direct route is used)."
    )

    def add_arguments(self, parser):
        parser.add_argument("poly_file")
        parser.add_argument("points_file", nargs="?", help="JSON array of points; sampled when omitted")
        parser.add_argument("--operator", choices=sorted(OPERATORS), default="biregular")
        parser.add_argument("--count", type=int, default=100, help="number of sampled points")
        self.add_seed_argument(parser)
        self.add_fd_arguments(parser)

    def run(self, poly_file, points_file=None, **options):
        config = self.fd_config(options)
        document = load_json(poly_file)
        if isinstance(document, dict) and "direct" in document:
            document = document["direct"]
        poly = polynomial_from_json(document)
        m = poly.context.m
        if points_file:
            points = points_from_json(load_json(points_file), m)
        else:
            points = sample_points(self.seed(options), options["count"], m)
        f = poly_function(poly)
        failures = 0
        for index, point in enumerate(points):
            residual = max(fd_cr_residual(f, spec, point, config) for spec in OPERATORS[options["operator"]])
            failures += residual >= config.tolerance
            self.stdout.write(report_line(f"point {index}", point, residual, config.tolerance))
        if failures:
            self.fail(f"{failures} of {len(points)} points exceed tolerance {config.tolerance:g}")
