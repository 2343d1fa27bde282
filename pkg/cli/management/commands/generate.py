"""Run the biregular Fueter pipeline and write certified results."""

from __future__ import annotations

import logging
from pathlib import Path

from cli.base import EngineCommand, index_list
from cli.files import dumps, load_json, write_atomic
from fueter.pipeline import run_and_certify, run_grid
from fueter.serializers import grid_from_json, is_grid_document, job_from_json, result_to_json

logger = logging.getLogger(__name__)


class Command(EngineCommand):
    help = (
        "Certify one Fueter job (or a grid of jobs) given as a JSON file or by flags. "
        "A single job writes one result file to --out; a grid writes m*_k*_l*_n*_p*.json files into the --out directory."
    )

    def add_arguments(self, parser):
        parser.add_argument("job_file", nargs="?", help="job or grid descriptor (JSON)")
        parser.add_argument("--m", type=int, help="number of generators (odd)")
        parser.add_argument("--k", type=int, help="degree of P in x")
        parser.add_argument("--l", type=int, help="degree of P in y")
        parser.add_argument("--n", type=int, help="x-degree of the separable quadruple")
        parser.add_argument("--p", type=int, help="y-degree of the separable quadruple")
        parser.add_argument("--left", type=index_list, default=[], help="Fueter variable indices in x, e.g. 2,3")
        parser.add_argument("--right", type=index_list, default=[], help="Fueter variable indices in y")
        parser.add_argument("--threads", type=int, help="worker processes for grids (default BIREG_THREADS)")
        parser.add_argument("--out", required=True, help="result file, or directory for a grid")

    def _document_from_flags(self, options) -> dict:
        document = {
            "m": options["m"],
            "quad": {"separable": {"n": options["n"], "p": options["p"]}},
            "P": {"left": options["left"], "right": options["right"]},
        }
        for name in ("k", "l"):
            if options[name] is not None:
                document[name] = options[name]
        return document

    def run(self, job_file=None, **options):
        document = load_json(job_file) if job_file else self._document_from_flags(options)
        out = Path(options["out"])
        if is_grid_document(document):
            grid = grid_from_json(document)
            results = run_grid(grid.jobs(), threads=options.get("threads"))
            for key in sorted(results):
                result = results[key]
                write_atomic(out / f"{result.job.slug}.json", dumps(result_to_json(result)))
            self.stdout.write(f"certified {len(results)} jobs into {out}")
            return
        job = job_from_json(document)
        result = run_and_certify(job)
        write_atomic(out, dumps(result_to_json(result)))
        logger.info("job %s certified, result written to %s", job.key, out)
        self.stdout.write(f"{job.slug}: biregular, routes agree, constant {result.constant}")
