"""Seeded residual suites for the three axial lemmas."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from axial.models import AxialFunction, AxialVar
from axial.operators import Lemma1Identity, closed_form_ABCD, lemma1_residual, vekua_residuals
from axial.quadruples import (
    HarmonicKind,
    complex_power,
    harmonic_family,
    quadruple_from_separable,
    quadruple_from_two_variable,
)
from axial.substitution import Lemma2Form, expand_blocks, lemma2_check, substitute_blocks
from fueter.pipeline import default_indices
from generators.builders import biregular_poly
from numeric.finite_differences import Lemma2Params, lemma2_residual
from numeric.models import FDConfig, sample_points
from polynomials.models import Block
from polynomials.operators import is_biregular

logger = logging.getLogger(__name__)

DEFAULT_MS = (3, 5)
DEFAULT_DEGREES = (0, 1, 2)
DEFAULT_BIDEGREES = tuple(range(6))

# harmonic family that keeps each Laplacian form a polynomial
FORM_KINDS = {
    Lemma2Form.DX_PLAIN: HarmonicKind.RE_RE,
    Lemma2Form.DX_OMEGA: HarmonicKind.IM_RE,
    Lemma2Form.DY_PLAIN: HarmonicKind.RE_RE,
    Lemma2Form.DY_NU: HarmonicKind.RE_IM,
}


@dataclass(frozen=True)
class SuiteCase:
    key: str
    passed: bool
    detail: str = "0"


@dataclass
class SuiteReport:
    name: str
    seed: int | None = None
    cases: list[SuiteCase] = field(default_factory=list)

    def add(self, key: str, passed: bool, detail: str = "0") -> None:
        self.cases.append(SuiteCase(key, passed, detail))

    @property
    def failures(self) -> list[SuiteCase]:
        return [case for case in self.cases if not case.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [f"{case.key}\t{'ok' if case.passed else 'FAIL'}\t{case.detail}" for case in self.cases]

    def summary(self) -> str:
        return f"{self.name}: {len(self.cases) - len(self.failures)}/{len(self.cases)} cases passed"


def random_laurent(rng: random.Random, max_terms: int = 4, low: int = -3, high: int = 4) -> AxialFunction:
    """A few terms with exponents in [low, high] and small rational coefficients."""

    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exponents = tuple(rng.randint(low, high) for _ in AxialVar)
        terms[exponents] = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5))
    return AxialFunction(terms)


def lemma1_suite(seed: int, count: int = 50, max_order: int = 4) -> SuiteReport:
    """Every identity on ``count`` random Laurent polynomials, for each symbol and n in 1..max_order."""

    logger.info("lemma 1 suite: seed %d, %d functions per identity", seed, count)
    rng = random.Random(seed)
    report = SuiteReport("lemma 1", seed)
    for which in Lemma1Identity:
        for index in range(count):
            f = random_laurent(rng)
            for var, n in product(AxialVar, range(1, max_order + 1)):
                residual = lemma1_residual(which, f, var, n)
                report.add(f"({which.value}) #{index} {var.label} n={n}", residual.is_zero(), residual.to_text())
    return report


def _lemma2_exact(
    report: SuiteReport,
    rng: random.Random,
    ns: Sequence[int],
    degrees: Sequence[int],
    ms: Sequence[int],
) -> None:
    for m, k, l in product(ms, degrees, degrees):
        P = biregular_poly(default_indices(k, m), default_indices(l, m), m)
        for n, form in product(ns, Lemma2Form):
            main, other = rng.randint(1, 2 * n + 1), rng.randint(0, 2)
            x_degree, y_degree = (main, other) if form.block is Block.X else (other, main)
            h = harmonic_family(x_degree, y_degree, FORM_KINDS[form])
            lhs, rhs = lemma2_check(h, n, k, l, m, P, form)
            report.add(f"exact m={m} k={k} l={l} n={n} {form.value} h={h.to_text()}", lhs == rhs, (lhs - rhs).to_text())


def _lemma2_numeric(report: SuiteReport, seed: int, config: FDConfig, count: int) -> None:
    m = 3
    params = Lemma2Params(h=AxialFunction.monomial(a=1, b=1), n=1, P=biregular_poly([], [], m))
    for index, point in enumerate(sample_points(seed, count, m)):
        residual = lemma2_residual(params, point, config)
        report.add(f"numeric h=x0*r #{index}", residual < config.tolerance, f"{residual:.3e}")


def lemma2_suite(
    seed: int,
    config: FDConfig,
    ns: Sequence[int] = (1, 2),
    degrees: Sequence[int] = DEFAULT_DEGREES,
    ms: Sequence[int] = DEFAULT_MS,
    points: int = 20,
    inject_failure: bool = False,
) -> SuiteReport:
    """Exact checks over harmonic families, plus the odd h = x0 r by finite differences.

    ``inject_failure`` adds the non-harmonic h = x0^2, which must fail.
    """

    logger.info("lemma 2 suite: seed %d", seed)
    rng = random.Random(seed)
    report = SuiteReport("lemma 2", seed)
    _lemma2_exact(report, rng, ns, degrees, ms)
    _lemma2_numeric(report, seed, config, points)
    if inject_failure:
        m = ms[0]
        P = biregular_poly([], [], m)
        lhs, rhs = lemma2_check(AxialFunction.monomial(a=2), 1, 0, 0, m, P, Lemma2Form.DX_PLAIN, enforce_harmonic=False)
        report.add(f"injected non-harmonic h=x0^2 m={m}", lhs == rhs, (lhs - rhs).to_text())
    return report


def lemma3_suite(
    ms: Sequence[int] = DEFAULT_MS,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    bidegrees: Sequence[int] = DEFAULT_BIDEGREES,
    two_variable_powers: Sequence[int] = (1, 2, 3, 4),
) -> SuiteReport:
    """Vekua residuals of the closed-form coefficients and biregularity after substitution.

    Quadruples built from (z1 + z2)^j break the parity pattern; for them only
    the Vekua residuals are checked.
    """

    report = SuiteReport("lemma 3")
    for m, k, l in product(ms, degrees, degrees):
        P = biregular_poly(default_indices(k, m), default_indices(l, m), m)
        for n, p in product(bidegrees, bidegrees):
            coefficients = closed_form_ABCD(quadruple_from_separable(n, p), k, l, m)
            nonzero = [index for index, r in enumerate(vekua_residuals(*coefficients, k, l, m), 1) if r]
            biregular = is_biregular(expand_blocks(substitute_blocks(coefficients, P), P.poly.context))
            detail = "0" if not nonzero and biregular else f"vekua {nonzero}, biregular={biregular}"
            report.add(f"m={m} k={k} l={l} n={n} p={p}", not nonzero and biregular, detail)
        for j in two_variable_powers:
            u, v = _sum_power(j)
            coefficients = closed_form_ABCD(quadruple_from_two_variable(u, v), k, l, m)
            nonzero = [index for index, r in enumerate(vekua_residuals(*coefficients, k, l, m), 1) if r]
            report.add(f"m={m} k={k} l={l} (z1+z2)^{j}", not nonzero, f"vekua {nonzero}" if nonzero else "0")
    return report


def _sum_power(j: int) -> tuple[AxialFunction, AxialFunction]:
    """Real and imaginary parts of ((x0 + y0) + i (r + rho))^j."""

    s_re, s_im = complex_power(1, AxialVar.X0, AxialVar.R)
    t_re, t_im = complex_power(1, AxialVar.Y0, AxialVar.RHO)
    re, im = AxialFunction.constant(), AxialFunction.zero()
    base_re, base_im = s_re + t_re, s_im + t_im
    for _ in range(j):
        re, im = re * base_re - im * base_im, re * base_im + im * base_re
    return re, im
