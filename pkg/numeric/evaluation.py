"""Float evaluation of polynomials and axial forms.

A multivector of doubles is a numpy vector of length 2**m indexed by blade
mask; products go through a Cayley table built from the exact blade rule.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence, Union

import numpy as np

from axial.models import AxialFunction
from axial.substitution import SLOT_PARITIES
from generators.models import BiregularPoly
from multivectors.models import AlgebraContext, Multivector, blade_product
from polynomials.models import Block, CliffPoly

from .models import EvalPoint

PointFunction = Callable[[EvalPoint], np.ndarray]
AxialCoefficient = Union[AxialFunction, Callable[[float, float, float, float], float]]


@lru_cache(maxsize=None)
def cayley_table(m: int) -> tuple[np.ndarray, np.ndarray]:
    """(signs, products) with e_a e_b = signs[a, b] e_{products[a, b]}."""

    dimension = 1 << m
    signs = np.empty((dimension, dimension), dtype=float)
    products = np.empty((dimension, dimension), dtype=np.intp)
    for a in range(dimension):
        for b in range(dimension):
            signs[a, b], products[a, b] = blade_product(a, b)
    return signs, products


def numeric_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m = int(a.shape[0]).bit_length() - 1
    signs, products = cayley_table(m)
    result = np.zeros_like(b, dtype=float)
    for mask in np.flatnonzero(a):
        # each row of products is a permutation of the blades
        result[products[mask]] += a[mask] * signs[mask] * b
    return result


def to_array(value: Multivector) -> np.ndarray:
    array = np.zeros(value.context.dimension, dtype=float)
    for mask, coefficient in value.terms.items():
        array[mask] = float(coefficient)
    return array


def unit_array(m: int, index: int) -> np.ndarray:
    """e_index as an array; index 0 gives the scalar 1."""

    array = np.zeros(1 << m, dtype=float)
    array[0 if index == 0 else 1 << (index - 1)] = 1.0
    return array


def eval_poly(p: CliffPoly, point: EvalPoint) -> np.ndarray:
    """Term-by-term evaluation in descending graded-lexicographic order."""

    if point.m != p.context.m:
        raise ValueError(f"point has m={point.m}, polynomial has m={p.context.m}")
    coordinates = point.coordinates
    total = np.zeros(p.context.dimension, dtype=float)
    for exponents, coefficient in p.sorted_terms():
        monomial = float(np.prod(coordinates ** np.array(exponents, dtype=float)))
        total += monomial * to_array(coefficient)
    return total


def poly_function(p: CliffPoly) -> PointFunction:
    return lambda point: eval_poly(p, point)


def paravector_value(point: EvalPoint, block: Block) -> np.ndarray:
    values = point.x if block is Block.X else point.y
    array = np.zeros(1 << point.m, dtype=float)
    array[0] = values[0]
    for j, value in enumerate(values[1:], start=1):
        array[1 << (j - 1)] = value
    return array


def unit_direction(point: EvalPoint, block: Block) -> np.ndarray:
    """omega = x_vec / r or nu = y_vec / rho."""

    vector = paravector_value(point, block)
    vector[0] = 0.0
    radius = point.r if block is Block.X else point.rho
    return vector / radius


def to_multivector_text(array: np.ndarray, algebra: AlgebraContext) -> dict[str, float]:
    return {algebra.blade_key(int(mask)): float(array[mask]) for mask in np.flatnonzero(array)}


def _coefficient_value(f: AxialCoefficient, x0: float, r: float, y0: float, rho: float) -> float:
    if isinstance(f, AxialFunction):
        return f.evaluate(x0, r, y0, rho)
    return float(f(x0, r, y0, rho))


def axial_form_function(
    coefficients: Sequence[AxialCoefficient], P: BiregularPoly, constant: float = 1.0
) -> PointFunction:
    """c (A P + B omega P + C P nu + D omega P nu) as a point function.

    Coefficients may be Laurent axial functions or plain callables of
    (x0, r, y0, rho), so data without the substitution parity pattern and
    transcendental data are both accepted.
    """

    coefficients = list(coefficients)
    if len(coefficients) != 4:
        raise ValueError("expected four axial coefficients")

    def evaluate(point: EvalPoint) -> np.ndarray:
        x0, y0 = point.x[0], point.y[0]
        r, rho = point.r, point.rho
        p_value = eval_poly(P.poly, point)
        total = np.zeros_like(p_value)
        for f, (odd_r, odd_rho) in zip(coefficients, SLOT_PARITIES):
            if isinstance(f, AxialFunction) and f.is_zero():
                continue
            value = _coefficient_value(f, x0, r, y0, rho)
            term = p_value
            if odd_r:
                term = numeric_product(unit_direction(point, Block.X), term)
            if odd_rho:
                term = numeric_product(term, unit_direction(point, Block.Y))
            total = total + value * term
        return constant * total

    return evaluate
