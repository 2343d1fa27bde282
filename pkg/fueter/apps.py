"""Application configuration for the fueter app."""

from django.apps import AppConfig


class FueterConfig(AppConfig):
    """The main pipeline."""

    name = "fueter"
    verbose_name = "Fueter map"
