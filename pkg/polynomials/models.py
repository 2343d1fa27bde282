"""Sparse polynomials in x0..xm, y0..ym with Multivector coefficients."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Union

from multivectors.models import AlgebraContext, Multivector, Rational, as_rational, blade_product

Exponents = tuple[int, ...]


class Block(enum.Enum):
    """Which paravector variable a coordinate belongs to."""

    X = "x"
    Y = "y"


class Side(enum.Enum):
    """Side on which the units e_j of an operator multiply."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class VarId:
    """One coordinate x_index or y_index."""

    block: Block
    index: int

    def position(self, context: AlgebraContext) -> int:
        """Slot of the variable inside an exponent vector of length 2(m+1)."""

        if not 0 <= self.index <= context.m:
            raise ValueError(f"variable index {self.index} outside 0..{context.m}")
        offset = 0 if self.block is Block.X else context.m + 1
        return offset + self.index

    def __str__(self) -> str:
        return f"{self.block.value}{self.index}"


@dataclass(frozen=True)
class OperatorSpec:
    """One of the four operators d_x, d_{x vector}, .d_y, .d_{y vector}.

    ``LEFT`` puts e_j in front of the derivative, ``RIGHT`` appends it.
    ``include_scalar_direction`` adds the unit-coefficient d_{x0} (or d_{y0}).
    """

    block: Block
    side: Side
    include_scalar_direction: bool = True


def variable_names(context: AlgebraContext) -> list[str]:
    return [f"{block.value}{index}" for block in Block for index in range(context.m + 1)]


def block_positions(context: AlgebraContext, block: Block, include_scalar: bool = True) -> range:
    start = 0 if block is Block.X else context.m + 1
    return range(start if include_scalar else start + 1, start + context.m + 1)


def grlex_key(exponents: Exponents) -> tuple[int, Exponents]:
    return sum(exponents), exponents


class TermAccumulator:
    """Mutable exps -> mask -> rational table used while building a result."""

    __slots__ = ("context", "table")

    def __init__(self, context: AlgebraContext) -> None:
        self.context = context
        self.table: dict[Exponents, dict[int, Fraction]] = defaultdict(dict)

    def add(self, exponents: Exponents, mask: int, value: Fraction) -> None:
        row = self.table[exponents]
        total = row.get(mask, 0) + value
        if total:
            row[mask] = total
        else:
            row.pop(mask, None)

    def add_multivector(self, exponents: Exponents, coefficient: Multivector, factor: Fraction | int = 1) -> None:
        for mask, value in coefficient.terms.items():
            self.add(exponents, mask, value * factor)

    def build(self) -> "CliffPoly":
        terms = {
            exponents: Multivector._from_clean(self.context, row)
            for exponents, row in self.table.items()
            if row
        }
        return CliffPoly._from_clean(self.context, terms)


class CliffPoly:
    """Finite sum of monomials x^a y^b with Multivector coefficients.

    Variables are real and commute with every coefficient; the order of
    Clifford factors is kept by the operations themselves.
    """

    __slots__ = ("context", "_terms")

    def __init__(self, context: AlgebraContext, terms: Mapping[Exponents, Multivector] | None = None) -> None:
        self.context = context
        width = 2 * (context.m + 1)
        cleaned: dict[Exponents, Multivector] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != width or any(e < 0 for e in exponents):
                raise ValueError(f"exponent vector {exponents} must hold {width} non-negative integers")
            context.check(coefficient.context)
            if coefficient:
                cleaned[exponents] = cleaned[exponents] + coefficient if exponents in cleaned else coefficient
        self._terms = {e: c for e, c in cleaned.items() if c}

    @classmethod
    def _from_clean(cls, context: AlgebraContext, terms: dict[Exponents, Multivector]) -> "CliffPoly":
        instance = cls.__new__(cls)
        instance.context = context
        instance._terms = terms
        return instance

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, context: AlgebraContext) -> "CliffPoly":
        return cls._from_clean(context, {})

    @classmethod
    def constant(cls, context: AlgebraContext, value: Union[Multivector, Rational] = 1) -> "CliffPoly":
        if not isinstance(value, Multivector):
            value = Multivector.scalar(context, value)
        return cls.monomial(context, {}, value)

    @classmethod
    def monomial(
        cls,
        context: AlgebraContext,
        powers: Mapping[VarId, int],
        coefficient: Union[Multivector, Rational] = 1,
    ) -> "CliffPoly":
        if not isinstance(coefficient, Multivector):
            coefficient = Multivector.scalar(context, coefficient)
        exponents = [0] * (2 * (context.m + 1))
        for var, power in powers.items():
            exponents[var.position(context)] += power
        return cls(context, {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, context: AlgebraContext, var: VarId) -> "CliffPoly":
        return cls.monomial(context, {var: 1})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, Multivector]:
        return MappingProxyType(self._terms)

    @property
    def width(self) -> int:
        return 2 * (self.context.m + 1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, Multivector]]:
        """Terms in descending graded-lexicographic order."""

        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def block_degree(self, exponents: Exponents, block: Block, include_scalar: bool = True) -> int:
        return sum(exponents[i] for i in block_positions(self.context, block, include_scalar))

    def max_block_degree(self, block: Block) -> int:
        """Largest total degree in the block's variables; -1 for the zero polynomial."""

        return max((self.block_degree(e, block) for e in self._terms), default=-1)

    def block_degrees(self, block: Block, include_scalar: bool = True) -> set[int]:
        return {self.block_degree(e, block, include_scalar) for e in self._terms}

    def depends_on(self, block: Block) -> bool:
        return any(self.block_degree(e, block) for e in self._terms)

    def is_homogeneous(self, block: Block, degree: int, include_scalar: bool = True) -> bool:
        return self.block_degrees(block, include_scalar) <= {degree}

    # arithmetic -----------------------------------------------------------

    def _combine(self, other: "CliffPoly", sign: int) -> "CliffPoly":
        self.context.check(other.context)
        result = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            current = result.get(exponents)
            if current is None:
                result[exponents] = coefficient if sign > 0 else -coefficient
                continue
            total = current + coefficient if sign > 0 else current - coefficient
            if total:
                result[exponents] = total
            else:
                del result[exponents]
        return CliffPoly._from_clean(self.context, result)

    def __add__(self, other: "CliffPoly") -> "CliffPoly":
        if not isinstance(other, CliffPoly):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "CliffPoly") -> "CliffPoly":
        if not isinstance(other, CliffPoly):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "CliffPoly":
        return CliffPoly._from_clean(self.context, {e: -c for e, c in self._terms.items()})

    def scale(self, factor: Rational) -> "CliffPoly":
        factor = as_rational(factor)
        if not factor:
            return CliffPoly.zero(self.context)
        return CliffPoly._from_clean(self.context, {e: c.scale(factor) for e, c in self._terms.items()})

    def left_multiply(self, unit: Multivector) -> "CliffPoly":
        """unit * self, with the Clifford factor on the left of each coefficient."""

        self.context.check(unit.context)
        accumulator = TermAccumulator(self.context)
        for exponents, coefficient in self._terms.items():
            accumulator.add_multivector(exponents, unit * coefficient)
        return accumulator.build()

    def right_multiply(self, unit: Multivector) -> "CliffPoly":
        self.context.check(unit.context)
        accumulator = TermAccumulator(self.context)
        for exponents, coefficient in self._terms.items():
            accumulator.add_multivector(exponents, coefficient * unit)
        return accumulator.build()

    def __mul__(self, other: object) -> "CliffPoly":
        if isinstance(other, CliffPoly):
            return poly_mul(self, other)
        if isinstance(other, Multivector):
            return self.right_multiply(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> "CliffPoly":
        if isinstance(other, Multivector):
            return self.left_multiply(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> "CliffPoly":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = CliffPoly.constant(self.context)
        for _ in range(power):
            result = result * self
        return result

    def conjugate(self) -> "CliffPoly":
        """Clifford conjugation applied coefficientwise."""

        return CliffPoly._from_clean(self.context, {e: c.conjugate() for e, c in self._terms.items()})

    # protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CliffPoly):
            return self.context == other.context and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == CliffPoly.constant(self.context, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context.m, frozenset(self._terms.items())))

    def __iter__(self) -> Iterator[tuple[Exponents, Multivector]]:
        return iter(self.sorted_terms())

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        names = variable_names(self.context)
        parts = []
        for exponents, coefficient in self.sorted_terms():
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(names, exponents)
                if power
            )
            parts.append(f"({coefficient.to_text()})" + (f"*{monomial}" if monomial else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CliffPoly(m={self.context.m}, {self.to_text()})"


def poly_add(p: CliffPoly, q: CliffPoly) -> CliffPoly:
    return p + q


def poly_mul(p: CliffPoly, q: CliffPoly) -> CliffPoly:
    """Product with coefficients multiplied as (coeff of p)(coeff of q)."""

    p.context.check(q.context)
    accumulator = TermAccumulator(p.context)
    for exps_p, coef_p in p._terms.items():
        items_p = coef_p.terms.items()
        for exps_q, coef_q in q._terms.items():
            exponents = tuple(a + b for a, b in zip(exps_p, exps_q))
            items_q = coef_q.terms.items()
            for mask_p, value_p in items_p:
                for mask_q, value_q in items_q:
                    sign, mask = blade_product(mask_p, mask_q)
                    accumulator.add(exponents, mask, value_p * value_q if sign > 0 else -(value_p * value_q))
    return accumulator.build()
