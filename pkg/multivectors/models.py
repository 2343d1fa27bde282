"""Value types of the real Clifford algebra R_{0,m} (e_j**2 = -1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from django.conf import settings

from fueterlab.exceptions import ContextMismatchError

Rational = Union[int, Fraction, str]


def as_rational(value: Rational) -> Fraction:
    """Coerce ``value`` to an exact rational; floats are refused."""

    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {type(value).__name__}")
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class AlgebraContext:
    """The algebra R_{0,m} generated by e_1..e_m."""

    m: int

    def __post_init__(self) -> None:
        limit = settings.BIREG["MAX_GENERATORS"]
        if not isinstance(self.m, int) or not 1 <= self.m <= limit:
            raise ValueError(f"m must be an integer in 1..{limit}, got {self.m!r}")

    @property
    def dimension(self) -> int:
        return 1 << self.m

    def check(self, other: "AlgebraContext") -> None:
        if self != other:
            raise ContextMismatchError(f"R_0,{self.m} value combined with R_0,{other.m} value")

    def mask(self, indices: Iterable[int]) -> int:
        """Bitmask of the blade e_{j1}...e_{jk}; bit j-1 encodes e_j."""

        result = 0
        for index in indices:
            if not 1 <= index <= self.m:
                raise ValueError(f"generator index {index} outside 1..{self.m}")
            result |= 1 << (index - 1)
        return result

    def blade_key(self, mask: int) -> str:
        """Text form of a blade: "1", "e1", "e13" (or "e1,10" once m >= 10)."""

        if not mask:
            return "1"
        indices = blade_indices(mask)
        separator = "," if self.m >= 10 else ""
        return "e" + separator.join(str(index) for index in indices)

    def parse_blade_key(self, key: str) -> int:
        if key == "1":
            return 0
        if not key.startswith("e") or len(key) == 1:
            raise ValueError(f"malformed blade key {key!r}")
        body = key[1:]
        parts = body.split(",") if self.m >= 10 else list(body)
        try:
            indices = [int(part) for part in parts]
        except ValueError as exc:
            raise ValueError(f"malformed blade key {key!r}") from exc
        if sorted(set(indices)) != indices:
            raise ValueError(f"blade key {key!r} must list strictly ascending indices")
        return self.mask(indices)


def blade_indices(mask: int) -> tuple[int, ...]:
    """Ascending generator indices of a blade mask."""

    indices = []
    index = 1
    while mask:
        if mask & 1:
            indices.append(index)
        mask >>= 1
        index += 1
    return tuple(indices)


def blade_grade(mask: int) -> int:
    return mask.bit_count()


@lru_cache(maxsize=1 << 16)
def blade_product(a: int, b: int) -> tuple[int, int]:
    """Return ``(sign, mask)`` with e_a e_b = sign * e_mask.

    The sign counts the transpositions that sort the concatenated index
    sequence, plus one factor -1 per generator present in both blades.
    """

    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def conjugation_sign(mask: int) -> int:
    """Sign of the Clifford conjugate on a grade-k blade: (-1)**(k(k+1)/2)."""

    grade = blade_grade(mask)
    return -1 if (grade * (grade + 1) // 2) & 1 else 1


def reversion_sign(mask: int) -> int:
    grade = blade_grade(mask)
    return -1 if (grade * (grade - 1) // 2) & 1 else 1


def blade_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return blade_grade(mask), blade_indices(mask)


class Multivector:
    """Sparse element of R_{0,m}: a map blade mask -> nonzero rational.

    Instances are immutable; every operation returns a new value in normal
    form (no stored zero coefficient), so ``==`` is algebraic equality.
    """

    __slots__ = ("context", "_terms")

    def __init__(self, context: AlgebraContext, terms: Mapping[int, Rational] | None = None) -> None:
        self.context = context
        cleaned: dict[int, Fraction] = {}
        full = context.dimension - 1
        for mask, coefficient in (terms or {}).items():
            if mask & ~full:
                raise ValueError(f"blade mask {mask:#b} outside R_0,{context.m}")
            value = as_rational(coefficient)
            if value:
                cleaned[mask] = value
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, context: AlgebraContext, terms: dict[int, Fraction]) -> "Multivector":
        instance = cls.__new__(cls)
        instance.context = context
        instance._terms = terms
        return instance

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, context: AlgebraContext) -> "Multivector":
        return cls._from_clean(context, {})

    @classmethod
    def scalar(cls, context: AlgebraContext, value: Rational = 1) -> "Multivector":
        return cls(context, {0: value})

    @classmethod
    def blade(cls, context: AlgebraContext, indices: Iterable[int], value: Rational = 1) -> "Multivector":
        """The basis element value * e_{j1}...e_{jk}, indices in any order.

        Unsorted indices are multiplied out, so ``blade(ctx, [2, 1])`` is -e_1e_2.
        """

        result = cls.scalar(context, value)
        for index in indices:
            result = result * cls._from_clean(context, {context.mask([index]): Fraction(1)})
        return result

    @classmethod
    def vector(cls, context: AlgebraContext, values: Iterable[Rational]) -> "Multivector":
        """sum_j values[j-1] e_j for j = 1..m."""

        values = list(values)
        if len(values) != context.m:
            raise ValueError(f"expected {context.m} vector components, got {len(values)}")
        return cls(context, {1 << j: value for j, value in enumerate(values)})

    @classmethod
    def paravector(cls, context: AlgebraContext, values: Iterable[Rational]) -> "Multivector":
        """values[0] + sum_j values[j] e_j."""

        values = list(values)
        if len(values) != context.m + 1:
            raise ValueError(f"expected {context.m + 1} paravector components, got {len(values)}")
        return cls.scalar(context, values[0]) + cls.vector(context, values[1:])

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    @property
    def scalar_part(self) -> Fraction:
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(mask == 0 for mask in self._terms)

    def grade(self, k: int) -> "Multivector":
        """Projection onto the grade-k blades."""

        return Multivector._from_clean(
            self.context, {mask: c for mask, c in self._terms.items() if blade_grade(mask) == k}
        )

    def norm_squared(self) -> Fraction:
        """Scalar part of a * conjugate(a); x x-bar = |x|^2 for a paravector."""

        return sum((c * c for c in self._terms.values()), Fraction(0))

    def sorted_items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: blade_sort_key(item[0]))

    # arithmetic -----------------------------------------------------------

    def _combine(self, other: "Multivector", sign: int) -> "Multivector":
        self.context.check(other.context)
        result = dict(self._terms)
        for mask, coefficient in other._terms.items():
            value = result.get(mask, 0) + sign * coefficient
            if value:
                result[mask] = value
            else:
                result.pop(mask, None)
        return Multivector._from_clean(self.context, result)

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "Multivector":
        return Multivector._from_clean(self.context, {mask: -c for mask, c in self._terms.items()})

    def scale(self, factor: Rational) -> "Multivector":
        factor = as_rational(factor)
        if not factor:
            return Multivector.zero(self.context)
        return Multivector._from_clean(self.context, {mask: c * factor for mask, c in self._terms.items()})

    def __mul__(self, other: object) -> "Multivector":
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> "Multivector":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def conjugate(self) -> "Multivector":
        return Multivector._from_clean(
            self.context, {mask: conjugation_sign(mask) * c for mask, c in self._terms.items()}
        )

    def reverse(self) -> "Multivector":
        return Multivector._from_clean(
            self.context, {mask: reversion_sign(mask) * c for mask, c in self._terms.items()}
        )

    def grade_involution(self) -> "Multivector":
        return Multivector._from_clean(
            self.context,
            {mask: (-c if blade_grade(mask) & 1 else c) for mask, c in self._terms.items()},
        )

    # protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Multivector):
            return self.context == other.context and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_scalar() and self.scalar_part == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context.m, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{coefficient}" if mask == 0 else f"{coefficient}*{self.context.blade_key(mask)}"
            for mask, coefficient in self.sorted_items()
        )

    def __repr__(self) -> str:
        return f"Multivector(m={self.context.m}, {self.to_text()})"


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of the blade product."""

    a.context.check(b.context)
    result: dict[int, Fraction] = {}
    for mask_a, coef_a in a._terms.items():
        for mask_b, coef_b in b._terms.items():
            sign, mask = blade_product(mask_a, mask_b)
            value = result.get(mask, 0) + (coef_a * coef_b if sign > 0 else -coef_a * coef_b)
            if value:
                result[mask] = value
            else:
                result.pop(mask, None)
    return Multivector._from_clean(a.context, result)


def conjugate(a: Multivector) -> Multivector:
    return a.conjugate()


def add(a: Multivector, b: Multivector) -> Multivector:
    return a + b


def negate(a: Multivector) -> Multivector:
    return -a


def scalar_mul(a: Multivector, q: Rational) -> Multivector:
    return a.scale(q)
