"""Construction of Fueter variables and symmetrized monogenic products."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

from fueterlab.exceptions import CertificationError, PreconditionError
from multivectors.models import AlgebraContext, Multivector
from polynomials.models import Block, CliffPoly, Side, VarId
from polynomials.operators import DIRAC_X, DIRAC_Y, apply_cr

from .models import BiregularPoly, FueterVariable

logger = logging.getLogger(__name__)


def _check_index(index: int, m: int) -> None:
    if m < 2:
        raise PreconditionError(f"Fueter variables need m >= 2, got m={m}")
    if not isinstance(index, int) or not 2 <= index <= m:
        raise PreconditionError(f"Fueter variable index must lie in 2..{m}, got {index!r}")


def fueter_variable(side: Side, index: int, m: int) -> FueterVariable:
    """The degree-one monogenic polynomial attached to direction ``index``."""

    _check_index(index, m)
    algebra = AlgebraContext(m)
    if side is Side.LEFT:
        unit = Multivector.blade(algebra, [1, index])
        poly = CliffPoly.variable(algebra, VarId(Block.X, index)) + CliffPoly.monomial(
            algebra, {VarId(Block.X, 1): 1}, unit
        )
    else:
        unit = Multivector.blade(algebra, [index, 1])
        poly = CliffPoly.variable(algebra, VarId(Block.Y, index)) + CliffPoly.monomial(
            algebra, {VarId(Block.Y, 1): 1}, unit
        )
    return FueterVariable(side, index, poly)


@lru_cache(maxsize=256)
def _symmetrized(indices: tuple[int, ...], side: Side, m: int) -> CliffPoly:
    algebra = AlgebraContext(m)
    variables = {index: fueter_variable(side, index, m).poly for index in set(indices)}
    total = CliffPoly.zero(algebra)
    for order in permutations(indices):
        product = CliffPoly.constant(algebra)
        for index in order:
            product = product * variables[index]
        total = total + product
    return total.scale(Fraction(1, factorial(len(indices))))


def symmetrized_product(indices: Sequence[int], side: Side, m: int) -> CliffPoly:
    """(1/k!) sum over orderings of the product of Fueter variables.

    The empty list gives the constant 1 in R_{0,m}.
    """

    indices = tuple(indices)
    if not indices:
        return CliffPoly.constant(AlgebraContext(m))
    for index in indices:
        _check_index(index, m)
    result = _symmetrized(tuple(sorted(indices)), side, m)
    spec = DIRAC_X if side is Side.LEFT else DIRAC_Y
    if not apply_cr(result, spec).is_zero():
        raise CertificationError(f"symmetrized product {indices} is not {side.value} monogenic")
    return result


def biregular_poly(left_indices: Iterable[int], right_indices: Iterable[int], m: int) -> BiregularPoly:
    """P_{k,l} = P_k(x) Q_l(y) from the symmetrized-product family."""

    left_indices = list(left_indices)
    right_indices = list(right_indices)
    if m < 2 and (left_indices or right_indices):
        raise PreconditionError("positive-degree generators need m >= 2; m = 1 supports only P_{0,0} = 1")
    left = symmetrized_product(left_indices, Side.LEFT, m)
    right = symmetrized_product(right_indices, Side.RIGHT, m)
    logger.debug("built P_{%d,%d} for m=%d from %s / %s", len(left_indices), len(right_indices), m, left_indices, right_indices)
    return BiregularPoly(
        poly=left * right,
        m=m,
        k=len(left_indices),
        l=len(right_indices),
        left=left,
        right=right,
    )


def monogenic_poly(indices: Iterable[int], m: int) -> BiregularPoly:
    """P_k(x) alone, seen as P_{k,0}; input of the classical theorem."""

    return biregular_poly(indices, [], m)
