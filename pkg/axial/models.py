"""Laurent polynomials in the axial symbols and holomorphic quadruples."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from fueterlab.exceptions import CauchyRiemannError
from multivectors.models import Rational, as_rational

AxialExponents = tuple[int, int, int, int]


class AxialVar(enum.IntEnum):
    """Slot of a symbol inside an exponent 4-tuple (a, b, c, d)."""

    X0 = 0
    R = 1
    Y0 = 2
    RHO = 3

    @classmethod
    def parse(cls, name: str) -> "AxialVar":
        aliases = {"x0": cls.X0, "r": cls.R, "y0": cls.Y0, "rho": cls.RHO, "ρ": cls.RHO}
        try:
            return aliases[name.lower()]
        except KeyError as exc:
            raise ValueError(f"unknown axial symbol {name!r}") from exc

    @property
    def label(self) -> str:
        return ("x0", "r", "y0", "rho")[self]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class ParitySignature:
    """Parity of an axial function in r and in rho."""

    in_r: Parity
    in_rho: Parity

    def __str__(self) -> str:
        return f"({self.in_r.value}, {self.in_rho.value})"


def _parity_of(exponents) -> Parity:
    parities = {e & 1 for e in exponents}
    if parities == {1}:
        return Parity.ODD
    if parities <= {0}:
        return Parity.EVEN
    return Parity.MIXED


class AxialFunction:
    """Sum of c * x0^a r^b y0^c rho^d with rational c and integer exponents.

    All four exponents may be negative while calculating; substitution and
    evaluation are where non-polynomial terms are refused.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[AxialExponents, Rational] | None = None) -> None:
        cleaned: dict[AxialExponents, Fraction] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != 4:
                raise ValueError(f"axial exponents must be a 4-tuple, got {exponents}")
            value = cleaned.get(exponents, 0) + as_rational(coefficient)
            cleaned[exponents] = value
        self._terms = {e: c for e, c in cleaned.items() if c}

    @classmethod
    def _from_clean(cls, terms: dict[AxialExponents, Fraction]) -> "AxialFunction":
        instance = cls.__new__(cls)
        instance._terms = terms
        return instance

    @classmethod
    def zero(cls) -> "AxialFunction":
        return cls._from_clean({})

    @classmethod
    def constant(cls, value: Rational = 1) -> "AxialFunction":
        return cls({(0, 0, 0, 0): value})

    @classmethod
    def symbol(cls, var: AxialVar, power: int = 1) -> "AxialFunction":
        exponents = [0, 0, 0, 0]
        exponents[var] = power
        return cls({tuple(exponents): 1})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, d: int = 0, coefficient: Rational = 1) -> "AxialFunction":
        return cls({(a, b, c, d): coefficient})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[AxialExponents, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[AxialExponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def parity_signature(self) -> ParitySignature:
        return ParitySignature(
            _parity_of(e[AxialVar.R] for e in self._terms),
            _parity_of(e[AxialVar.RHO] for e in self._terms),
        )

    def has_parity(self, in_r: Parity, in_rho: Parity) -> bool:
        """True when every term matches; the zero function matches anything."""

        wanted_r = 1 if in_r is Parity.ODD else 0
        wanted_rho = 1 if in_rho is Parity.ODD else 0
        return all(
            (e[AxialVar.R] & 1) == wanted_r and (e[AxialVar.RHO] & 1) == wanted_rho for e in self._terms
        )

    def min_exponent(self, var: AxialVar) -> int:
        return min((e[var] for e in self._terms), default=0)

    def depends_on(self, var: AxialVar) -> bool:
        return any(e[var] for e in self._terms)

    # arithmetic -----------------------------------------------------------

    def _combine(self, other: "AxialFunction", sign: int) -> "AxialFunction":
        result = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            value = result.get(exponents, 0) + sign * coefficient
            if value:
                result[exponents] = value
            else:
                result.pop(exponents, None)
        return AxialFunction._from_clean(result)

    def __add__(self, other: "AxialFunction") -> "AxialFunction":
        if not isinstance(other, AxialFunction):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "AxialFunction") -> "AxialFunction":
        if not isinstance(other, AxialFunction):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "AxialFunction":
        return AxialFunction._from_clean({e: -c for e, c in self._terms.items()})

    def scale(self, factor: Rational) -> "AxialFunction":
        factor = as_rational(factor)
        if not factor:
            return AxialFunction.zero()
        return AxialFunction._from_clean({e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: object) -> "AxialFunction":
        if isinstance(other, AxialFunction):
            result: dict[AxialExponents, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    exponents = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                    value = result.get(exponents, 0) + c1 * c2
                    if value:
                        result[exponents] = value
                    else:
                        result.pop(exponents, None)
            return AxialFunction._from_clean(result)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> "AxialFunction":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> "AxialFunction":
        if power < 0:
            raise ValueError("use shift() for negative powers of a symbol")
        result = AxialFunction.constant()
        for _ in range(power):
            result = result * self
        return result

    def shift(self, var: AxialVar, amount: int) -> "AxialFunction":
        """Multiply by var**amount (Laurent shift; amount may be negative)."""

        result = {}
        for exponents, coefficient in self._terms.items():
            moved = list(exponents)
            moved[var] += amount
            result[tuple(moved)] = coefficient
        return AxialFunction._from_clean(result)

    def divide_by(self, var: AxialVar) -> "AxialFunction":
        return self.shift(var, -1)

    def partial(self, var: AxialVar) -> "AxialFunction":
        result = {}
        for exponents, coefficient in self._terms.items():
            power = exponents[var]
            if not power:
                continue
            moved = list(exponents)
            moved[var] -= 1
            result[tuple(moved)] = coefficient * power
        return AxialFunction._from_clean(result)

    def evaluate(self, x0: float, r: float, y0: float, rho: float) -> float:
        point = (x0, r, y0, rho)
        total = 0.0
        for exponents, coefficient in self.sorted_terms():
            value = float(coefficient)
            for base, power in zip(point, exponents):
                if power:
                    value *= base**power
            total += value
        return total

    # protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AxialFunction):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == AxialFunction.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponents, coefficient in self.sorted_terms():
            factors = [
                var.label if power == 1 else f"{var.label}^{power}"
                for var, power in zip(AxialVar, exponents)
                if power
            ]
            parts.append("*".join([str(coefficient), *factors]))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AxialFunction({self.to_text()})"


X0 = AxialFunction.symbol(AxialVar.X0)
R = AxialFunction.symbol(AxialVar.R)
Y0 = AxialFunction.symbol(AxialVar.Y0)
RHO = AxialFunction.symbol(AxialVar.RHO)


# parity each slot must carry for exact substitution
QUADRUPLE_PARITIES = {
    "u1": (Parity.EVEN, Parity.EVEN),
    "v1": (Parity.ODD, Parity.EVEN),
    "u2": (Parity.EVEN, Parity.ODD),
    "v2": (Parity.ODD, Parity.ODD),
}


@dataclass(frozen=True)
class HolomorphicQuadruple:
    """(u1, v1, u2, v2): u1+iv1, u2+iv2 holomorphic in x0+ir; u1+iu2, v1+iv2 in y0+i rho.

    Construction fails with :class:`CauchyRiemannError` unless all eight
    equations hold exactly.
    """

    u1: AxialFunction
    v1: AxialFunction
    u2: AxialFunction
    v2: AxialFunction

    def __post_init__(self) -> None:
        failing = [index for index, residual in enumerate(self.cauchy_riemann_residuals(), 1) if residual]
        if failing:
            raise CauchyRiemannError(f"Cauchy-Riemann equations {failing} fail for {self}")

    def cauchy_riemann_residuals(self) -> list[AxialFunction]:
        x0, r, y0, rho = AxialVar
        u1, v1, u2, v2 = self.u1, self.v1, self.u2, self.v2
        return [
            u1.partial(x0) - v1.partial(r),
            u1.partial(r) + v1.partial(x0),
            u2.partial(x0) - v2.partial(r),
            u2.partial(r) + v2.partial(x0),
            u1.partial(y0) - u2.partial(rho),
            u1.partial(rho) + u2.partial(y0),
            v1.partial(y0) - v2.partial(rho),
            v1.partial(rho) + v2.partial(y0),
        ]

    def components(self) -> dict[str, AxialFunction]:
        return {"u1": self.u1, "v1": self.v1, "u2": self.u2, "v2": self.v2}

    def parity_violations(self) -> list[str]:
        return [
            name
            for name, function in self.components().items()
            if not function.has_parity(*QUADRUPLE_PARITIES[name])
        ]

    @property
    def parity_ok(self) -> bool:
        return not self.parity_violations()

    def __add__(self, other: "HolomorphicQuadruple") -> "HolomorphicQuadruple":
        if not isinstance(other, HolomorphicQuadruple):
            return NotImplemented
        return HolomorphicQuadruple(self.u1 + other.u1, self.v1 + other.v1, self.u2 + other.u2, self.v2 + other.v2)

    def scale(self, factor: Rational) -> "HolomorphicQuadruple":
        return HolomorphicQuadruple(self.u1.scale(factor), self.v1.scale(factor), self.u2.scale(factor), self.v2.scale(factor))

    def __str__(self) -> str:
        return f"({self.u1.to_text()}, {self.v1.to_text()}, {self.u2.to_text()}, {self.v2.to_text()})"
