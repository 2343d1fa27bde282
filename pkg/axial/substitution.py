"""Turning axial data into Clifford polynomials.

A coefficient even in r is rewritten through r^2 = |x|^2; an odd one is
divided by r and the factor omega r becomes the vector variable x (likewise
rho and y). Vector factors of x stand on the left of P, those of y on the
right.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from fueter.constants import double_factorial_product
from fueterlab.exceptions import NotPolynomialError, ParityError, PreconditionError
from generators.models import BiregularPoly
from multivectors.models import AlgebraContext
from polynomials.models import Block, CliffPoly, TermAccumulator, block_positions
from polynomials.operators import laplacian_power, radius_squared, vector_variable

from .models import AxialFunction, AxialVar, HolomorphicQuadruple, Parity
from .operators import d_lower, d_upper, harmonic_pair_residuals

Coefficients = tuple[AxialFunction, AxialFunction, AxialFunction, AxialFunction]

# (odd in r, odd in rho) of the A, B, C, D slots
SLOT_PARITIES = ((False, False), (True, False), (False, True), (True, True))


def as_coefficients(data: Union[HolomorphicQuadruple, Sequence[AxialFunction]]) -> Coefficients:
    if isinstance(data, HolomorphicQuadruple):
        return data.u1, data.v1, data.u2, data.v2
    coefficients = tuple(data)
    if len(coefficients) != 4:
        raise ValueError("expected four axial coefficients")
    return coefficients  # type: ignore[return-value]


def reduce_parity(f: AxialFunction, odd_in_r: bool, odd_in_rho: bool, label: str = "coefficient") -> AxialFunction:
    """Divide out r (rho) when odd and check that only even, non-negative powers remain."""

    wanted = (Parity.ODD if odd_in_r else Parity.EVEN, Parity.ODD if odd_in_rho else Parity.EVEN)
    if not f.has_parity(*wanted):
        raise ParityError(
            f"{label} must be ({wanted[0].value}, {wanted[1].value}) in (r, rho), got {f.parity_signature()}"
        )
    if odd_in_r:
        f = f.divide_by(AxialVar.R)
    if odd_in_rho:
        f = f.divide_by(AxialVar.RHO)
    for var in AxialVar:
        if f.min_exponent(var) < 0:
            raise NotPolynomialError(f"{label} keeps a negative power of {var.label}; not a polynomial")
    return f


@lru_cache(maxsize=512)
def _radius_power(m: int, block: Block, power: int) -> CliffPoly:
    algebra = AlgebraContext(m)
    return radius_squared(algebra, block) ** power


def axial_to_polynomial(f: AxialFunction, algebra: AlgebraContext) -> CliffPoly:
    """x0^a r^(2s) y0^c rho^(2t) -> x0^a |x|^(2s) y0^c |y|^(2t); f must be reduced."""

    total = TermAccumulator(algebra)
    x_slot, y_slot = block_positions(algebra, Block.X)[0], block_positions(algebra, Block.Y)[0]
    for (a, b, c, d), coefficient in f.terms.items():
        if min(a, b, c, d) < 0 or b % 2 or d % 2:
            raise NotPolynomialError(f"term x0^{a} r^{b} y0^{c} rho^{d} is not a polynomial in x, y")
        radial = _radius_power(algebra.m, Block.X, b // 2) * _radius_power(algebra.m, Block.Y, d // 2)
        for exponents, unit in radial.terms.items():
            shifted = list(exponents)
            shifted[x_slot] += a
            shifted[y_slot] += c
            total.add_multivector(tuple(shifted), unit, coefficient)
    return total.build()


@dataclass(frozen=True)
class BlockTerm:
    """One summand X(x) * Y(y) of a substituted function."""

    x_part: CliffPoly
    y_part: CliffPoly

    def expand(self) -> CliffPoly:
        return self.x_part * self.y_part


def _split_by_y(f: AxialFunction) -> dict[tuple[int, int], AxialFunction]:
    """Group terms by their (y0, rho) exponents: f = sum g_(c,d)(x0, r) y0^c rho^d."""

    groups: dict[tuple[int, int], dict] = {}
    for (a, b, c, d), coefficient in f.terms.items():
        groups.setdefault((c, d), {})[(a, b, 0, 0)] = coefficient
    return {key: AxialFunction(terms) for key, terms in groups.items()}


def substitute_blocks(
    data: Union[HolomorphicQuadruple, Sequence[AxialFunction]], P: BiregularPoly
) -> list[BlockTerm]:
    """AP + B omega P + C P nu + D omega P nu as a list of x-only by y-only products.

    Needs the factors P = P_k(x) Q_l(y); see :func:`substitute` for any P.
    """

    if not P.is_factored:
        raise PreconditionError("block substitution needs P given as P_k(x) Q_l(y)")
    algebra = P.poly.context
    x_vector = vector_variable(algebra, Block.X)
    y_vector = vector_variable(algebra, Block.Y)
    left_with_vector = x_vector * P.left
    right_with_vector = P.right * y_vector
    terms: list[BlockTerm] = []
    for label, f, (odd_r, odd_rho) in zip("ABCD", as_coefficients(data), SLOT_PARITIES):
        if f.is_zero():
            continue
        reduced = reduce_parity(f, odd_r, odd_rho, label)
        x_factor = left_with_vector if odd_r else P.left
        y_factor = right_with_vector if odd_rho else P.right
        for (c, d), g in sorted(_split_by_y(reduced).items()):
            x_part = axial_to_polynomial(g, algebra) * x_factor
            y_part = y_factor * axial_to_polynomial(AxialFunction.monomial(c=c, d=d), algebra)
            if x_part and y_part:
                terms.append(BlockTerm(x_part, y_part))
    return terms


def substitute(data: Union[HolomorphicQuadruple, Sequence[AxialFunction]], P: BiregularPoly) -> CliffPoly:
    """The polynomial A P + B omega P + C P nu + D omega P nu."""

    algebra = P.poly.context
    x_vector = vector_variable(algebra, Block.X)
    y_vector = vector_variable(algebra, Block.Y)
    factors = (P.poly, x_vector * P.poly, P.poly * y_vector, x_vector * P.poly * y_vector)
    total = CliffPoly.zero(algebra)
    for label, f, (odd_r, odd_rho), factor in zip("ABCD", as_coefficients(data), SLOT_PARITIES, factors):
        if f.is_zero():
            continue
        reduced = reduce_parity(f, odd_r, odd_rho, label)
        total = total + axial_to_polynomial(reduced, algebra) * factor
    return total


def expand_blocks(terms: Iterable[BlockTerm], algebra: AlgebraContext) -> CliffPoly:
    total = CliffPoly.zero(algebra)
    for term in terms:
        total = total + term.expand()
    return total


# Laplacian powers of axial functions times P ----------------------------------


class Lemma2Form(enum.Enum):
    """h P or h omega P under Delta_x, h P or h P nu under Delta_y."""

    DX_PLAIN = "Dx_plain"
    DX_OMEGA = "Dx_omega"
    DY_PLAIN = "Dy_plain"
    DY_NU = "Dy_nu"

    @property
    def block(self) -> Block:
        return Block.X if self in (Lemma2Form.DX_PLAIN, Lemma2Form.DX_OMEGA) else Block.Y

    @property
    def slot(self) -> int:
        return {"Dx_plain": 0, "Dx_omega": 1, "Dy_plain": 0, "Dy_nu": 2}[self.value]


def _placed(h: AxialFunction, slot: int) -> Coefficients:
    zero = AxialFunction.zero()
    coefficients = [zero, zero, zero, zero]
    coefficients[slot] = h
    return tuple(coefficients)  # type: ignore[return-value]


def lemma2_closed_form(h: AxialFunction, n: int, k: int, l: int, m: int, form: Lemma2Form) -> AxialFunction:
    """prod_j (2k+m-(2j-1)) times D_r(n), D^r(n), D_rho(n) or D^rho(n) of h."""

    degree = k if form.block is Block.X else l
    constant = double_factorial_product(degree, m, n)
    operator = {
        Lemma2Form.DX_PLAIN: lambda f: d_lower(f, AxialVar.R, n),
        Lemma2Form.DX_OMEGA: lambda f: d_upper(f, AxialVar.R, n),
        Lemma2Form.DY_PLAIN: lambda f: d_lower(f, AxialVar.RHO, n),
        Lemma2Form.DY_NU: lambda f: d_upper(f, AxialVar.RHO, n),
    }[form]
    return operator(h).scale(constant)


def lemma2_check(
    h: AxialFunction,
    n: int,
    k: int,
    l: int,
    m: int,
    P: BiregularPoly,
    form: Union[Lemma2Form, str],
    enforce_harmonic: bool = True,
) -> tuple[CliffPoly, CliffPoly]:
    """(Delta^n of the substituted h-form, closed form substituted); equal when the lemma holds."""

    form = Lemma2Form(form)
    if (P.m, P.k, P.l) != (m, k, l):
        raise PreconditionError(f"P has (m, k, l) = {(P.m, P.k, P.l)}, expected {(m, k, l)}")
    if n < 0:
        raise PreconditionError(f"Laplacian power must be non-negative, got {n}")
    if enforce_harmonic and not all(residual.is_zero() for residual in harmonic_pair_residuals(h)):
        raise PreconditionError(f"h = {h.to_text()} is not harmonic in (x0, r) and (y0, rho)")
    placed = _placed(h, form.slot)
    closed = _placed(lemma2_closed_form(h, n, k, l, m, form), form.slot)
    if not P.is_factored:
        return laplacian_power(substitute(placed, P), form.block, n), substitute(closed, P)
    algebra = P.poly.context
    lhs = CliffPoly.zero(algebra)
    for term in substitute_blocks(placed, P):
        if form.block is Block.X:
            x_part, y_part = laplacian_power(term.x_part, Block.X, n), term.y_part
        else:
            x_part, y_part = term.x_part, laplacian_power(term.y_part, Block.Y, n)
        if x_part and y_part:
            lhs = lhs + x_part * y_part
    return lhs, expand_blocks(substitute_blocks(closed, P), algebra)

