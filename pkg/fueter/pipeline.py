"""Both routes of the biregular Fueter map and their cross-check.

The direct route substitutes the quadruple and applies
Delta_x^(k+(m-1)/2) Delta_y^(l+(m-1)/2). The closed-form route applies the
axial operators D_r, D^r, D_rho, D^rho first, substitutes afterwards and
multiplies by the double-factorial constants. Both are exact.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import cycle, islice, product
from typing import Iterable, Sequence

from django.conf import settings

from axial.models import AxialVar, HolomorphicQuadruple
from axial.operators import closed_form_ABCD
from axial.quadruples import quadruple_from_separable
from axial.substitution import substitute, substitute_blocks
from fueterlab.exceptions import CertificationError, PreconditionError
from generators.builders import biregular_poly
from generators.models import BiregularPoly
from polynomials.models import Block, CliffPoly
from polynomials.operators import CR_X, apply_cr, biregular_residuals, laplacian_power

from .constants import double_factorial_product
from .models import FueterJob, FueterResult, JobKey

logger = logging.getLogger(__name__)


def fueter_constant(k: int, l: int, m: int, orders: tuple[int, int]) -> int:
    nx, ny = orders
    return double_factorial_product(k, m, nx) * double_factorial_product(l, m, ny)


def _direct_split(job: FueterJob) -> CliffPoly:
    nx, ny = job.orders
    total = CliffPoly.zero(job.P.poly.context)
    for term in substitute_blocks(job.q, job.P):
        x_part = laplacian_power(term.x_part, Block.X, nx)
        if not x_part:
            continue
        y_part = laplacian_power(term.y_part, Block.Y, ny)
        if y_part:
            total = total + x_part * y_part
    return total


def fueter_map(job: FueterJob) -> CliffPoly:
    """Delta_x^(k+(m-1)/2) Delta_y^(l+(m-1)/2) applied to the substituted quadruple."""

    if job.P.is_factored:
        return _direct_split(job)
    nx, ny = job.orders
    return laplacian_power(laplacian_power(substitute(job.q, job.P), Block.X, nx), Block.Y, ny)


def fueter_map_closed_form(job: FueterJob) -> CliffPoly:
    """c (A P + B omega P + C P nu + D omega P nu) with A..D from the axial operators."""

    coefficients = closed_form_ABCD(job.q, job.k, job.l, job.m)
    constant = fueter_constant(job.k, job.l, job.m, job.orders)
    if job.P.is_factored:
        total = CliffPoly.zero(job.P.poly.context)
        for term in substitute_blocks(coefficients, job.P):
            total = total + term.expand()
    else:
        total = substitute(coefficients, job.P)
    return total.scale(constant)


def run_and_certify(job: FueterJob) -> FueterResult:
    """Compute both routes and the two Cauchy-Riemann residuals.

    Raises :class:`CertificationError` when the routes differ or a residual
    is nonzero.
    """

    direct = fueter_map(job)
    closed_form = fueter_map_closed_form(job)
    result = FueterResult(
        job=job,
        direct=direct,
        closed_form=closed_form,
        constant=fueter_constant(job.k, job.l, job.m, job.orders),
        residuals=biregular_residuals(direct),
    )
    if not result.routes_agree:
        logger.error("job %s: direct and closed-form routes differ", job.key)
        raise CertificationError(f"job {job.slug}: direct route and closed form differ", key=job.key)
    if not result.biregular:
        logger.error("job %s: output is not biregular", job.key)
        raise CertificationError(f"job {job.slug}: nonzero Cauchy-Riemann residual", key=job.key)
    logger.debug("job %s certified (%d terms)", job.key, len(direct))
    return result


def classical_fueter(job: FueterJob) -> CliffPoly:
    """Delta_x^(k+(m-1)/2) [(u + omega v) P_k] for y-free data with l = 0.

    The y-Laplacian is not applied: it would annihilate a y-free function.
    The output is certified left monogenic in x.
    """

    q = job.q
    if job.l != 0:
        raise PreconditionError(f"the classical reduction needs l = 0, got l={job.l}")
    if q.u2 or q.v2:
        raise PreconditionError("the classical reduction needs u2 = v2 = 0")
    if any(f.depends_on(var) for f in (q.u1, q.v1) for var in (AxialVar.Y0, AxialVar.RHO)):
        raise PreconditionError("the classical reduction needs data independent of y0 and rho")
    nx, _ = job.orders
    out = laplacian_power(substitute(q, job.P), Block.X, nx)
    if out.depends_on(Block.Y) or apply_cr(out, CR_X):
        logger.error("classical job %s: output is not a y-free left monogenic polynomial", job.key)
        raise CertificationError(f"classical job {job.slug} failed", key=job.key)
    return out


# job construction -------------------------------------------------------------


def default_indices(degree: int, m: int) -> list[int]:
    """Generator indices 2, 3, ..., m, 2, ... of the given length."""

    if degree and m < 2:
        raise PreconditionError(f"positive degree needs m >= 2, got m={m}")
    return list(islice(cycle(range(2, m + 1)), degree)) if degree else []


def separable_job(
    m: int, n: int, p: int, left: Sequence[int] = (), right: Sequence[int] = (), P: BiregularPoly | None = None
) -> FueterJob:
    if P is None:
        P = biregular_poly(left, right, m)
    return FueterJob(m=m, q=quadruple_from_separable(n, p), P=P, bidegree=(n, p))


def separable_output_bidegree(n: int, p: int, k: int, l: int, m: int) -> tuple[int, int] | None:
    """Bidegree of the Fueter image of the separable (n, p) quadruple; None when it vanishes."""

    if n < 2 * k + m - 1 or p < 2 * l + m - 1:
        return None
    return n - k - m + 1, p - l - m + 1


@dataclass(frozen=True)
class GridSpec:
    ms: tuple[int, ...]
    ks: tuple[int, ...]
    ls: tuple[int, ...]
    ns: tuple[int, ...]
    ps: tuple[int, ...]
    left: tuple[int, ...] | None = None
    right: tuple[int, ...] | None = None

    def jobs(self) -> list[FueterJob]:
        """One job per (m, k, l, n, p); P is shared by every (m, k, l)."""

        cache: dict[tuple[int, int, int], BiregularPoly] = {}
        jobs = []
        for m, k, l, n, p in product(self.ms, self.ks, self.ls, self.ns, self.ps):
            if (m, k, l) not in cache:
                left = list(self.left) if self.left is not None else default_indices(k, m)
                right = list(self.right) if self.right is not None else default_indices(l, m)
                if (len(left), len(right)) != (k, l):
                    raise PreconditionError(f"generator descriptor has degree {(len(left), len(right))}, grid asks {(k, l)}")
                cache[(m, k, l)] = biregular_poly(left, right, m)
            jobs.append(separable_job(m, n, p, P=cache[(m, k, l)]))
        return jobs


def _setup_worker() -> None:
    import django
    from django.apps import apps

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "fueterlab.settings")
    if not apps.ready:
        django.setup()


def run_grid(jobs: Iterable[FueterJob], threads: int | None = None) -> dict[JobKey, FueterResult]:
    """Certify every job, in a process pool when more than one worker is allowed.

    Results are merged by job key; the first failure is re-raised.
    """

    jobs = list(jobs)
    threads = threads or settings.BIREG["THREADS"]
    if threads <= 1 or len(jobs) <= 1:
        results = [run_and_certify(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads, initializer=_setup_worker) as pool:
            results = list(pool.map(run_and_certify, jobs))
    merged = {result.job.key: result for result in results}
    nonzero = sum(1 for result in merged.values() if result.direct)
    logger.info("certified %d jobs (%d nonzero outputs) with %d worker(s)", len(merged), nonzero, threads)
    return merged


def quadruple_sum(quadruples: Iterable[HolomorphicQuadruple]) -> HolomorphicQuadruple:
    quadruples = iter(quadruples)
    total = next(quadruples)
    for q in quadruples:
        total = total + q
    return total
