"""Application configuration for the multivectors app."""

from django.apps import AppConfig


class MultivectorsConfig(AppConfig):
    """Clifford algebra arithmetic."""

    name = "multivectors"
    verbose_name = "Clifford algebra"
