"""Run one of the seeded residual suites for the axial lemmas."""

from __future__ import annotations

from cli.base import EngineCommand
from cli.suites import DEFAULT_MS, lemma1_suite, lemma2_suite, lemma3_suite


class Command(EngineCommand):
    help = (
        "Check the operator identities (1), the Laplacian-power closed forms (2) or the "
        "Vekua systems (3). Exits 0 when every case passes, or, with --expect-fail, when some case fails."
    )

    def add_arguments(self, parser):
        parser.add_argument("which", choices=("1", "2", "3"))
        self.add_seed_argument(parser)
        parser.add_argument("--count", type=int, default=50, help="random functions per identity (suite 1)")
        parser.add_argument("--m", type=int, action="append", dest="ms", help="odd m to check; repeatable")
        parser.add_argument("--points", type=int, default=20, help="sampled points for the numeric part of suite 2")
        parser.add_argument("--expect-fail", action="store_true", help="invert the verdict; suite 2 injects a non-harmonic h")
        self.add_fd_arguments(parser)

    def run(self, which, **options):
        seed = self.seed(options)
        ms = tuple(options.get("ms") or DEFAULT_MS)
        expect_fail = options["expect_fail"]
        if which == "1":
            report = lemma1_suite(seed, count=options["count"])
        elif which == "2":
            report = lemma2_suite(
                seed, self.fd_config(options), ms=ms, points=options["points"], inject_failure=expect_fail
            )
        else:
            report = lemma3_suite(ms=ms)
        for line in report.lines():
            self.stdout.write(line)
        self.stdout.write(report.summary() + (f" (seed {seed})" if report.seed is not None else ""))
        if report.passed == expect_fail:
            verdict = "no case failed although failure was expected" if expect_fail else f"{len(report.failures)} case(s) failed"
            self.fail(f"{report.name}: {verdict}")
