"""Application configuration for the axial app."""

from django.apps import AppConfig


class AxialConfig(AppConfig):
    """Axial Laurent calculus."""

    name = "axial"
    verbose_name = "Axial calculus"
