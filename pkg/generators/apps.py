"""Application configuration for the generators app."""

from django.apps import AppConfig


class GeneratorsConfig(AppConfig):
    name = "generators"
    verbose_name = "Biregular generators"
