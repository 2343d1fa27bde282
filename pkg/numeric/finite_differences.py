"""Central-difference versions of the Cauchy-Riemann and Laplace operators."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from axial.models import AxialFunction
from axial.substitution import Lemma2Form, lemma2_closed_form
from fueterlab.exceptions import PreconditionError
from generators.models import BiregularPoly
from multivectors.models import AlgebraContext
from polynomials.models import Block, OperatorSpec, Side, block_positions

from .evaluation import PointFunction, axial_form_function, numeric_product, unit_array, unit_direction
from .models import EvalPoint, FDConfig

logger = logging.getLogger(__name__)

# offset -> weight for the +offset sample; the -offset sample takes -weight
# (first derivative) or +weight (second derivative, plus the centre weight)
FIRST_DERIVATIVE = {
    2: ((1, 0.5),),
    4: ((1, 2 / 3), (2, -1 / 12)),
}
SECOND_DERIVATIVE = {
    2: (-2.0, ((1, 1.0),)),
    4: (-5 / 2, ((1, 4 / 3), (2, -1 / 12))),
}


def _odd_stencil(f: PointFunction, point: EvalPoint, position: int, step: float, weights) -> np.ndarray:
    total = 0.0
    for offset, weight in weights:
        forward = f(point.shifted(position, offset * step))
        backward = f(point.shifted(position, -offset * step))
        total = total + weight * (forward - backward)
    return total


def _even_stencil(f: PointFunction, point: EvalPoint, position: int, step: float, stencil) -> np.ndarray:
    centre, weights = stencil
    total = centre * f(point)
    for offset, weight in weights:
        forward = f(point.shifted(position, offset * step))
        backward = f(point.shifted(position, -offset * step))
        total = total + weight * (forward + backward)
    return total


def fd_partial(f: PointFunction, point: EvalPoint, position: int, config: FDConfig) -> np.ndarray:
    return _odd_stencil(f, point, position, config.step, FIRST_DERIVATIVE[config.order]) / config.step


def fd_second_partial(f: PointFunction, point: EvalPoint, position: int, config: FDConfig) -> np.ndarray:
    return _even_stencil(f, point, position, config.step, SECOND_DERIVATIVE[config.order]) / config.step**2


def _positions(point: EvalPoint, block: Block, include_scalar: bool = True) -> range:
    return block_positions(AlgebraContext(point.m), block, include_scalar)


def fd_apply_cr(f: PointFunction, spec: OperatorSpec, point: EvalPoint, config: FDConfig) -> np.ndarray:
    """Central-difference sum_j e_j d_j f (LEFT) or sum_j (d_j f) e_j (RIGHT)."""

    positions = _positions(point, spec.block)
    total = np.zeros(1 << point.m, dtype=float)
    if spec.include_scalar_direction:
        total += fd_partial(f, point, positions[0], config)
    for j, position in enumerate(positions[1:], start=1):
        derivative = fd_partial(f, point, position, config)
        unit = unit_array(point.m, j)
        if spec.side is Side.LEFT:
            total += numeric_product(unit, derivative)
        else:
            total += numeric_product(derivative, unit)
    return total


def fd_cr_residual(f: PointFunction, spec: OperatorSpec, point: EvalPoint, config: FDConfig) -> float:
    """Max-norm over blades of the central-difference operator applied to f."""

    return float(np.max(np.abs(fd_apply_cr(f, spec, point, config))))


def fd_laplacian(
    f: PointFunction, block: Block, point: EvalPoint, config: FDConfig, include_scalar: bool = True
) -> np.ndarray:
    total = np.zeros(1 << point.m, dtype=float)
    for position in _positions(point, block, include_scalar):
        total += fd_second_partial(f, point, position, config)
    return total


def fd_laplacian_power(f: PointFunction, block: Block, n: int, point: EvalPoint, config: FDConfig) -> np.ndarray:
    """Nested stencils; each level costs two orders of h in round-off, so keep n small."""

    if n < 0:
        raise ValueError(f"Laplacian power must be non-negative, got {n}")
    if n == 0:
        return f(point)
    inner = lambda q: fd_laplacian_power(f, block, n - 1, q, config)  # noqa: E731
    return fd_laplacian(inner, block, point, config)


# axial identities ---------------------------------------------------------------


class AxialIdentity(enum.Enum):
    OMEGA_LAPLACIAN = "omega_laplacian"
    LEMMA2_GENERAL = "lemma2_general"


@dataclass(frozen=True)
class Lemma2Params:
    """Data of one Laplacian-power instance; h may be odd in r or rho."""

    h: AxialFunction
    n: int
    P: BiregularPoly
    form: Lemma2Form = Lemma2Form.DX_PLAIN


def omega_laplacian_residual(point: EvalPoint, config: FDConfig) -> float:
    """|Delta_xvec omega + ((m-1)/r^2) omega| at the point."""

    point.check_off_axis(need_rho=False)
    omega = lambda q: unit_direction(q, Block.X)  # noqa: E731
    lhs = fd_laplacian(omega, Block.X, point, config, include_scalar=False)
    rhs = -((point.m - 1) / point.r**2) * omega(point)
    return float(np.max(np.abs(lhs - rhs)))


def _placed(h, slot: int) -> list:
    coefficients: list = [AxialFunction.zero()] * 4
    coefficients[slot] = h
    return coefficients


def lemma2_residual(params: Lemma2Params, point: EvalPoint, config: FDConfig) -> float:
    """Delta^n of the h-form minus the product constant times D(n){h} in the same form."""

    form = params.form
    point.check_off_axis(need_r=form.block is Block.X, need_rho=form.block is Block.Y)
    m = params.P.m
    if point.m != m:
        raise PreconditionError(f"point has m={point.m}, P has m={m}")
    lhs_function = axial_form_function(_placed(params.h, form.slot), params.P)
    closed = lemma2_closed_form(params.h, params.n, params.P.k, params.P.l, m, form)
    rhs = axial_form_function(_placed(closed, form.slot), params.P)(point)
    lhs = fd_laplacian_power(lhs_function, form.block, params.n, point, config)
    return float(np.max(np.abs(lhs - rhs)))


def fd_axial_identity(
    which: AxialIdentity | str, params: Lemma2Params | None, point: EvalPoint, config: FDConfig
) -> float:
    which = AxialIdentity(which)
    if which is AxialIdentity.OMEGA_LAPLACIAN:
        return omega_laplacian_residual(point, config)
    if params is None:
        raise ValueError("lemma2_general needs Lemma2Params")
    return lemma2_residual(params, point, config)
