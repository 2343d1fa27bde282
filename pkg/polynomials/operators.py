"""Coordinate derivatives, Cauchy-Riemann operators and Laplacians."""

from __future__ import annotations

from multivectors.models import AlgebraContext, Multivector, blade_product

from .models import Block, CliffPoly, OperatorSpec, Side, TermAccumulator, VarId, block_positions

CR_X = OperatorSpec(Block.X, Side.LEFT, True)
CR_Y = OperatorSpec(Block.Y, Side.RIGHT, True)
DIRAC_X = OperatorSpec(Block.X, Side.LEFT, False)
DIRAC_Y = OperatorSpec(Block.Y, Side.RIGHT, False)


def _differentiate_into(
    accumulator: TermAccumulator,
    p: CliffPoly,
    position: int,
    unit_mask: int | None,
    side: Side,
    sign: int = 1,
) -> None:
    """Add sign * (e_unit d p) (or (d p) e_unit) for the variable at ``position``."""

    for exponents, coefficient in p.terms.items():
        power = exponents[position]
        if not power:
            continue
        lowered = exponents[:position] + (power - 1,) + exponents[position + 1 :]
        factor = sign * power
        for mask, value in coefficient.terms.items():
            if unit_mask is None:
                accumulator.add(lowered, mask, value * factor)
                continue
            if side is Side.LEFT:
                blade_sign, product = blade_product(unit_mask, mask)
            else:
                blade_sign, product = blade_product(mask, unit_mask)
            accumulator.add(lowered, product, value * factor * blade_sign)


def partial(p: CliffPoly, var: VarId) -> CliffPoly:
    """Coordinate partial derivative d/d var."""

    accumulator = TermAccumulator(p.context)
    _differentiate_into(accumulator, p, var.position(p.context), None, Side.LEFT)
    return accumulator.build()


def _cauchy_riemann(p: CliffPoly, spec: OperatorSpec, vector_sign: int) -> CliffPoly:
    accumulator = TermAccumulator(p.context)
    positions = block_positions(p.context, spec.block)
    if spec.include_scalar_direction:
        _differentiate_into(accumulator, p, positions[0], None, spec.side)
    for j, position in enumerate(positions[1:], start=1):
        _differentiate_into(accumulator, p, position, 1 << (j - 1), spec.side, vector_sign)
    return accumulator.build()


def apply_cr(p: CliffPoly, spec: OperatorSpec) -> CliffPoly:
    """sum_j e_j d_j p (LEFT) or sum_j (d_j p) e_j (RIGHT), plus d_0 p when requested."""

    return _cauchy_riemann(p, spec, 1)


def conjugate_cr(p: CliffPoly, spec: OperatorSpec) -> CliffPoly:
    """The conjugate operator d_0 - sum_j e_j d_j on the same side."""

    return _cauchy_riemann(p, spec, -1)


def laplacian(p: CliffPoly, block: Block) -> CliffPoly:
    """sum_{j=0}^m d_j^2 p over the block's coordinates."""

    accumulator = TermAccumulator(p.context)
    positions = block_positions(p.context, block)
    for exponents, coefficient in p.terms.items():
        for position in positions:
            power = exponents[position]
            if power < 2:
                continue
            lowered = exponents[:position] + (power - 2,) + exponents[position + 1 :]
            accumulator.add_multivector(lowered, coefficient, power * (power - 1))
    return accumulator.build()


def laplacian_power(p: CliffPoly, block: Block, n: int) -> CliffPoly:
    """Delta^n p; zero as soon as the block degree drops below two."""

    if n < 0:
        raise ValueError(f"Laplacian power must be non-negative, got {n}")
    for _ in range(n):
        if p.max_block_degree(block) < 2:
            return CliffPoly.zero(p.context)
        p = laplacian(p, block)
    return p


def biregular_residuals(p: CliffPoly) -> tuple[CliffPoly, CliffPoly]:
    """(d_x p, p d_y); p is biregular iff both are zero."""

    return apply_cr(p, CR_X), apply_cr(p, CR_Y)


def is_biregular(p: CliffPoly) -> bool:
    left, right = biregular_residuals(p)
    return left.is_zero() and right.is_zero()


def euler_operator(p: CliffPoly, block: Block) -> CliffPoly:
    """sum_{j=1}^m v_j d_{v_j} p; equals k p on vector-homogeneous degree k."""

    accumulator = TermAccumulator(p.context)
    for exponents, coefficient in p.terms.items():
        degree = sum(exponents[i] for i in block_positions(p.context, block, include_scalar=False))
        if degree:
            accumulator.add_multivector(exponents, coefficient, degree)
    return accumulator.build()


# named polynomials ----------------------------------------------------------


def coordinate(context: AlgebraContext, block: Block, index: int) -> CliffPoly:
    return CliffPoly.variable(context, VarId(block, index))


def vector_variable(context: AlgebraContext, block: Block) -> CliffPoly:
    """The vector part sum_{j>=1} v_j e_j."""

    total = CliffPoly.zero(context)
    for j in range(1, context.m + 1):
        total = total + CliffPoly.monomial(context, {VarId(block, j): 1}, Multivector.blade(context, [j]))
    return total


def paravector_variable(context: AlgebraContext, block: Block, conjugated: bool = False) -> CliffPoly:
    """v_0 + sum v_j e_j, or its conjugate v_0 - sum v_j e_j."""

    vector = vector_variable(context, block)
    scalar = coordinate(context, block, 0)
    return scalar - vector if conjugated else scalar + vector


def radius_squared(context: AlgebraContext, block: Block) -> CliffPoly:
    """|v|^2 = sum_{j>=1} v_j^2 as a scalar polynomial."""

    total = CliffPoly.zero(context)
    for j in range(1, context.m + 1):
        total = total + CliffPoly.monomial(context, {VarId(block, j): 2})
    return total
