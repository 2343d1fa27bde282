"""Exceptions shared by every app of the engine."""

from __future__ import annotations


class BiregError(Exception):
    """Base class for all engine errors."""


class ContextMismatchError(BiregError, ValueError):
    """Raised when values from different Clifford algebras are combined."""


class PreconditionError(BiregError, ValueError):
    """A mathematical hypothesis of an operation does not hold."""


class ParityError(PreconditionError):
    """An axial coefficient has the wrong parity in r or rho."""


class NotPolynomialError(PreconditionError):
    """Substitution would leave a negative power of r, rho, x0 or y0."""


class CauchyRiemannError(PreconditionError):
    """Holomorphic input data violates its Cauchy-Riemann system."""


class CertificationError(BiregError, AssertionError):
    """An exact check that must hold came out false."""

    def __init__(self, message: str, key: tuple | None = None) -> None:
        super().__init__(message)
        self.key = key

    def __reduce__(self):
        return type(self), (str(self), self.key)
