"""The operators D_t(n), D^t(n) and the identities built on them.

D_t(n){f} = ((1/t) d_t)^n f and D^t(n){f} = d_t(D^t(n-1){f} / t), with
D_t(0) = D^t(0) = identity. Division by t is a Laurent exponent shift.
"""

from __future__ import annotations

import enum
from typing import Union

from fueterlab.exceptions import PreconditionError

from .models import AxialFunction, AxialVar, HolomorphicQuadruple

VarLike = Union[AxialVar, str]


class Lemma1Identity(enum.Enum):
    """The five commutation rules between d_t, D_t(n) and D^t(n)."""

    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"


def _var(var: VarLike) -> AxialVar:
    return var if isinstance(var, AxialVar) else AxialVar.parse(var)


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"operator order must be a non-negative integer, got {n!r}")


def d_lower(f: AxialFunction, var: VarLike, n: int) -> AxialFunction:
    """D_t(n){f}."""

    var = _var(var)
    _check_order(n)
    for _ in range(n):
        if f.is_zero():
            break
        f = f.partial(var).divide_by(var)
    return f


def d_upper(f: AxialFunction, var: VarLike, n: int) -> AxialFunction:
    """D^t(n){f}, by the defining recursion."""

    var = _var(var)
    _check_order(n)
    for _ in range(n):
        if f.is_zero():
            break
        f = f.divide_by(var).partial(var)
    return f


def lemma1_residual(which: Union[Lemma1Identity, str], f: AxialFunction, var: VarLike, n: int) -> AxialFunction:
    """Left side minus right side of identity ``which``; always zero."""

    which = Lemma1Identity(which)
    var = _var(var)
    if n < 1:
        raise PreconditionError(f"identity ({which.value}) is stated for n >= 1, got n={n}")

    def d(g: AxialFunction) -> AxialFunction:
        return g.partial(var)

    if which is Lemma1Identity.I:
        return d(d(d_lower(f, var, n))) - (d_lower(d(d(f)), var, n) - d_lower(f, var, n + 1).scale(2 * n))
    if which is Lemma1Identity.II:
        return d(d_lower(f.divide_by(var), var, n - 1)) - d_upper(f, var, n)
    if which is Lemma1Identity.III:
        return d_upper(d(f), var, n) - d(d_lower(f, var, n))
    if which is Lemma1Identity.IV:
        upper = d_upper(f, var, n)
        return d_lower(d(f), var, n) - d(upper) - upper.divide_by(var).scale(2 * n)
    return d(d(d_upper(f, var, n))) - (d_upper(d(d(f)), var, n) - d_upper(f, var, n + 1).scale(2 * n))


def harmonic_pair_residuals(h: AxialFunction) -> tuple[AxialFunction, AxialFunction]:
    """(h_x0x0 + h_rr, h_y0y0 + h_rhorho)."""

    x0, r, y0, rho = AxialVar
    return (
        h.partial(x0).partial(x0) + h.partial(r).partial(r),
        h.partial(y0).partial(y0) + h.partial(rho).partial(rho),
    )


def is_harmonic_pair(h: AxialFunction) -> bool:
    first, second = harmonic_pair_residuals(h)
    return first.is_zero() and second.is_zero()


def vekua_residuals(
    A: AxialFunction, B: AxialFunction, C: AxialFunction, D: AxialFunction, k: int, l: int, m: int
) -> list[AxialFunction]:
    """The eight first-order equations whose vanishing makes F biregular."""

    x0, r, y0, rho = AxialVar
    kx = 2 * k + m - 1
    ky = 2 * l + m - 1
    return [
        A.partial(x0) - B.partial(r) - B.divide_by(r).scale(kx),
        B.partial(x0) + A.partial(r),
        C.partial(x0) - D.partial(r) - D.divide_by(r).scale(kx),
        D.partial(x0) + C.partial(r),
        A.partial(y0) - C.partial(rho) - C.divide_by(rho).scale(ky),
        C.partial(y0) + A.partial(rho),
        B.partial(y0) - D.partial(rho) - D.divide_by(rho).scale(ky),
        D.partial(y0) + B.partial(rho),
    ]


def fueter_orders(k: int, l: int, m: int) -> tuple[int, int]:
    """(k + (m-1)/2, l + (m-1)/2); m must be odd."""

    if not isinstance(m, int) or m < 1 or m % 2 == 0:
        raise PreconditionError(f"m must be odd, got m={m}")
    if k < 0 or l < 0:
        raise PreconditionError(f"degrees must be non-negative, got k={k}, l={l}")
    half = (m - 1) // 2
    return k + half, l + half


def closed_form_ABCD(
    q: HolomorphicQuadruple, k: int, l: int, m: int
) -> tuple[AxialFunction, AxialFunction, AxialFunction, AxialFunction]:
    """A, B, C, D of the closed form of the Fueter map (constant excluded)."""

    nx, ny = fueter_orders(k, l, m)
    r, rho = AxialVar.R, AxialVar.RHO
    A = d_lower(d_lower(q.u1, rho, ny), r, nx)
    B = d_upper(d_lower(q.v1, rho, ny), r, nx)
    C = d_lower(d_upper(q.u2, rho, ny), r, nx)
    D = d_upper(d_upper(q.v2, rho, ny), r, nx)
    return A, B, C, D
