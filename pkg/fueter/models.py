"""Jobs and results of the biregular Fueter pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field

from axial.models import HolomorphicQuadruple
from axial.operators import fueter_orders
from fueterlab.exceptions import ParityError, PreconditionError
from generators.models import BiregularPoly
from polynomials.models import CliffPoly

JobKey = tuple[int, int, int, int | None, int | None]


@dataclass(frozen=True)
class FueterJob:
    """Quadruple q and P_{k,l} for an odd number m of generators.

    ``bidegree`` records (n, p) when q came from the separable family; it
    only labels the job.
    """

    m: int
    q: HolomorphicQuadruple
    P: BiregularPoly
    bidegree: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        fueter_orders(self.P.k, self.P.l, self.m)
        if self.P.m != self.m:
            raise PreconditionError(f"P lives in R_0,{self.P.m} but the job has m={self.m}")
        violations = self.q.parity_violations()
        if violations:
            raise ParityError(f"quadruple slots {violations} break the parity pattern; use numeric checks instead")

    @property
    def k(self) -> int:
        return self.P.k

    @property
    def l(self) -> int:
        return self.P.l

    @property
    def orders(self) -> tuple[int, int]:
        """Laplacian powers (k + (m-1)/2, l + (m-1)/2)."""

        return fueter_orders(self.k, self.l, self.m)

    @property
    def key(self) -> JobKey:
        n, p = self.bidegree if self.bidegree is not None else (None, None)
        return self.m, self.k, self.l, n, p

    @property
    def slug(self) -> str:
        """File stem such as ``m3_k0_l0_n2_p2``."""

        m, k, l, n, p = self.key
        stem = f"m{m}_k{k}_l{l}"
        if n is not None:
            stem += f"_n{n}_p{p}"
        return stem


@dataclass(frozen=True)
class FueterResult:
    job: FueterJob
    direct: CliffPoly
    closed_form: CliffPoly
    constant: int
    residuals: tuple[CliffPoly, CliffPoly]

    @property
    def routes_agree(self) -> bool:
        return self.direct == self.closed_form

    @property
    def biregular(self) -> bool:
        return all(residual.is_zero() for residual in self.residuals)

    @property
    def certified(self) -> bool:
        return self.routes_agree and self.biregular
