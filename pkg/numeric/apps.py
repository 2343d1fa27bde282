"""Application configuration for the numeric app."""

from django.apps import AppConfig


class NumericConfig(AppConfig):
    name = "numeric"
    verbose_name = "Numeric checks"
