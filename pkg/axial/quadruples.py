"""Holomorphic quadruples built from one- and two-variable data."""

from __future__ import annotations

import enum
import logging
from math import comb

from fueterlab.exceptions import CauchyRiemannError, PreconditionError

from .models import AxialFunction, AxialVar, HolomorphicQuadruple

logger = logging.getLogger(__name__)


def complex_power(n: int, real: AxialVar, imaginary: AxialVar) -> tuple[AxialFunction, AxialFunction]:
    """Real and imaginary parts of (s + i t)^n with s, t the given symbols."""

    if n < 0:
        raise ValueError(f"power must be non-negative, got {n}")
    re_terms, im_terms = {}, {}
    for j in range(n + 1):
        exponents = [0, 0, 0, 0]
        exponents[real] = n - j
        exponents[imaginary] = j
        # i**j cycles 1, i, -1, -i
        coefficient = comb(n, j) * (-1 if (j // 2) % 2 else 1)
        (im_terms if j % 2 else re_terms)[tuple(exponents)] = coefficient
    return AxialFunction(re_terms), AxialFunction(im_terms)


def quadruple_from_separable(n: int, p: int) -> HolomorphicQuadruple:
    """(ac, bc, ad, bd) with a+ib = (x0+ir)^n and c+id = (y0+i rho)^p."""

    if n < 0 or p < 0:
        raise PreconditionError(f"separable bidegree must be non-negative, got ({n}, {p})")
    a, b = complex_power(n, AxialVar.X0, AxialVar.R)
    c, d = complex_power(p, AxialVar.Y0, AxialVar.RHO)
    quadruple = HolomorphicQuadruple(a * c, b * c, a * d, b * d)
    if not quadruple.parity_ok:
        raise AssertionError(f"separable quadruple ({n}, {p}) lost its parity pattern")
    return quadruple


def two_variable_cr_residuals(u: AxialFunction, v: AxialFunction) -> list[AxialFunction]:
    """u + iv holomorphic in z1 = x0 + ir and in z2 = y0 + i rho."""

    x0, r, y0, rho = AxialVar
    return [
        u.partial(x0) - v.partial(r),
        u.partial(r) + v.partial(x0),
        u.partial(y0) - v.partial(rho),
        u.partial(rho) + v.partial(y0),
    ]


def quadruple_from_two_variable(u: AxialFunction, v: AxialFunction) -> HolomorphicQuadruple:
    """(u, v, v, -u) from u + iv holomorphic in both complex variables.

    The result usually fails the substitution parity pattern; it is still
    returned (``parity_ok`` is False) for numeric verification.
    """

    failing = [index for index, residual in enumerate(two_variable_cr_residuals(u, v), 1) if residual]
    if failing:
        raise CauchyRiemannError(f"u + iv is not holomorphic in both variables (equations {failing})")
    quadruple = HolomorphicQuadruple(u, v, v, -u)
    violations = quadruple.parity_violations()
    if violations:
        logger.info("two-variable quadruple fails the parity pattern in %s; exact substitution unavailable", violations)
    return quadruple


class HarmonicKind(enum.Enum):
    """Which product of real/imaginary parts a harmonic test function uses."""

    RE_RE = "re_re"
    IM_RE = "im_re"
    RE_IM = "re_im"
    IM_IM = "im_im"


def harmonic_family(n: int, p: int, kind: HarmonicKind | str) -> AxialFunction:
    """Re/Im(x0+ir)^n times Re/Im(y0+i rho)^p; harmonic in both pairs.

    RE_RE is (even, even), IM_RE (odd, even), RE_IM (even, odd), IM_IM (odd, odd).
    """

    kind = HarmonicKind(kind)
    a, b = complex_power(n, AxialVar.X0, AxialVar.R)
    c, d = complex_power(p, AxialVar.Y0, AxialVar.RHO)
    x_part = a if kind in (HarmonicKind.RE_RE, HarmonicKind.RE_IM) else b
    y_part = c if kind in (HarmonicKind.RE_RE, HarmonicKind.IM_RE) else d
    return x_part * y_part
