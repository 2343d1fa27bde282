"""Normalising constants of the Laplacian closed forms."""

from __future__ import annotations


def double_factorial_product(k: int, m: int, n: int) -> int:
    """prod_{j=1}^{n} (2k + m - (2j - 1)); the empty product is 1.

    For odd m and n = k + (m-1)/2 this is (2k + m - 1)!!.
    """

    if n < 0:
        raise ValueError(f"number of factors must be non-negative, got {n}")
    product = 1
    for j in range(1, n + 1):
        product *= 2 * k + m - (2 * j - 1)
    return product
