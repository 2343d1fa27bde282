"""Application configuration for the polynomials app."""

from django.apps import AppConfig


class PolynomialsConfig(AppConfig):
    """Clifford-valued polynomials and Cauchy-Riemann operators."""

    name = "polynomials"
    verbose_name = "Clifford polynomials"
