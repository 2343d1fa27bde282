"""Write generator polynomials, quadruples or point sets as JSON."""

from __future__ import annotations

from axial.quadruples import quadruple_from_separable
from axial.serializers import quadruple_to_json
from cli.base import EngineCommand, index_list
from cli.files import dumps, write_atomic
from generators.builders import biregular_poly, fueter_variable
from numeric.models import sample_points
from numeric.serializers import points_to_json
from polynomials.models import Side
from polynomials.serializers import polynomial_to_json


class Command(EngineCommand):
    help = "Export P_{k,l} (generator), a Fueter variable, a separable quadruple or sampled points."

    def add_arguments(self, parser):
        parser.add_argument("kind", choices=("generator", "variable", "quadruple", "points"))
        parser.add_argument("--m", type=int, default=3)
        parser.add_argument("--left", type=index_list, default=[])
        parser.add_argument("--right", type=index_list, default=[])
        parser.add_argument("--side", choices=[side.value for side in Side], default=Side.LEFT.value)
        parser.add_argument("--index", type=int, default=2, help="Fueter variable index (2..m)")
        parser.add_argument("--n", type=int, default=0)
        parser.add_argument("--p", type=int, default=0)
        parser.add_argument("--count", type=int, default=100)
        self.add_seed_argument(parser)
        parser.add_argument("--out", help="output file (stdout when omitted)")

    def _document(self, kind, options):
        m = options["m"]
        if kind == "generator":
            return polynomial_to_json(biregular_poly(options["left"], options["right"], m).poly)
        if kind == "variable":
            return polynomial_to_json(fueter_variable(Side(options["side"]), options["index"], m).poly)
        if kind == "quadruple":
            return quadruple_to_json(quadruple_from_separable(options["n"], options["p"]))
        return {"m": m, "points": points_to_json(sample_points(self.seed(options), options["count"], m))}

    def run(self, kind, **options):
        text = dumps(self._document(kind, options))
        if options.get("out"):
            write_atomic(options["out"], text)
        else:
            self.stdout.write(text, ending="")
