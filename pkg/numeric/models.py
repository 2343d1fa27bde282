"""Evaluation points and finite-difference settings."""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from django.conf import settings

from fueterlab.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalPoint:
    """x = (x0, ..., xm) and y = (y0, ..., ym) as floats."""

    x: tuple[float, ...]
    y: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.x) != len(self.y) or len(self.x) < 2:
            raise ValueError(f"x and y need the same length m+1 >= 2, got {len(self.x)} and {len(self.y)}")

    @classmethod
    def from_coordinates(cls, values: Sequence[float], m: int) -> "EvalPoint":
        values = [float(v) for v in values]
        if len(values) != 2 * (m + 1):
            raise ValueError(f"expected {2 * (m + 1)} coordinates for m={m}, got {len(values)}")
        return cls(tuple(values[: m + 1]), tuple(values[m + 1 :]))

    @property
    def m(self) -> int:
        return len(self.x) - 1

    @property
    def coordinates(self) -> np.ndarray:
        return np.array(self.x + self.y, dtype=float)

    @property
    def r(self) -> float:
        return math.hypot(*self.x[1:])

    @property
    def rho(self) -> float:
        return math.hypot(*self.y[1:])

    def shifted(self, position: int, delta: float) -> "EvalPoint":
        """The point moved by ``delta`` along coordinate ``position`` (0..2m+1)."""

        values = list(self.x + self.y)
        values[position] += delta
        return EvalPoint(tuple(values[: self.m + 1]), tuple(values[self.m + 1 :]))

    def check_off_axis(self, floor: float | None = None, need_r: bool = True, need_rho: bool = True) -> None:
        floor = settings.BIREG["AXIAL_FLOOR"] if floor is None else floor
        for name, value, needed in (("r", self.r, need_r), ("rho", self.rho, need_rho)):
            if needed and value < floor:
                logger.warning("rejecting point %s: %s = %g below floor %g", self.as_list(), name, value, floor)
                raise PreconditionError(f"{name} = {value:g} is below the axial floor {floor:g}")

    def as_list(self) -> list[float]:
        return list(self.x + self.y)


def sample_points(seed: int, count: int, m: int, box: tuple[float, float] | None = None) -> list[EvalPoint]:
    """``count`` points with every coordinate uniform in ``box``; deterministic per seed."""

    low, high = box or settings.BIREG["SAMPLE_BOX"]
    rng = random.Random(seed)
    logger.info("sampling %d points for m=%d in [%g, %g] with seed %d", count, m, low, high, seed)
    return [
        EvalPoint.from_coordinates([rng.uniform(low, high) for _ in range(2 * (m + 1))], m) for _ in range(count)
    ]


@dataclass(frozen=True)
class FDConfig:
    """Central differences of the given order with step ``step``."""

    step: float
    order: int
    tolerance: float

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise ValueError(f"finite-difference step must be positive, got {self.step}")
        if self.order not in (2, 4):
            raise ValueError(f"finite-difference order must be 2 or 4, got {self.order}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")

    @classmethod
    def from_settings(cls, **overrides) -> "FDConfig":
        """Defaults from ``settings.BIREG``; ``None`` overrides are ignored."""

        config = settings.BIREG
        base = cls(step=config["FD_STEP"], order=config["FD_ORDER"], tolerance=config["FD_TOLERANCE"])
        return replace(base, **{key: value for key, value in overrides.items() if value is not None})
