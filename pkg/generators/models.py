"""Certified monogenic building blocks."""

from __future__ import annotations

from dataclasses import dataclass, field

from fueterlab.exceptions import CertificationError
from polynomials.models import Block, CliffPoly, Side
from polynomials.operators import DIRAC_X, DIRAC_Y, apply_cr


@dataclass(frozen=True)
class FueterVariable:
    """z_j = x_j + e_1e_j x_1 (LEFT) or w_j = y_j + y_1 e_je_1 (RIGHT)."""

    side: Side
    index: int
    poly: CliffPoly

    def __post_init__(self) -> None:
        spec = DIRAC_X if self.side is Side.LEFT else DIRAC_Y
        if not apply_cr(self.poly, spec).is_zero():
            raise CertificationError(f"Fueter variable {self.side.value} {self.index} is not monogenic")


@dataclass(frozen=True)
class BiregularPoly:
    """P_{k,l}(x, y): homogeneous of bidegree (k, l) in the vector variables.

    ``left``/``right`` keep the factors when the polynomial was built as
    P_k(x) Q_l(y); the pipeline uses them to keep the blocks apart.
    """

    poly: CliffPoly
    m: int
    k: int
    l: int
    left: CliffPoly | None = field(default=None, compare=False)
    right: CliffPoly | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.poly.context.m != self.m:
            raise CertificationError(f"polynomial lives in R_0,{self.poly.context.m}, expected m={self.m}")
        for block, degree in ((Block.X, self.k), (Block.Y, self.l)):
            if not self.poly.is_homogeneous(block, degree, include_scalar=False):
                raise CertificationError(f"P is not homogeneous of degree {degree} in {block.value}")
            if any(exponents[self._scalar_slot(block)] for exponents in self.poly.terms):
                raise CertificationError(f"P depends on {block.value}0")
        if not apply_cr(self.poly, DIRAC_X).is_zero():
            raise CertificationError("P is not left monogenic in x")
        if not apply_cr(self.poly, DIRAC_Y).is_zero():
            raise CertificationError("P is not right monogenic in y")

    def _scalar_slot(self, block: Block) -> int:
        return 0 if block is Block.X else self.m + 1

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.k, self.l

    @property
    def is_factored(self) -> bool:
        return self.left is not None and self.right is not None
