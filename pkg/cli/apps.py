"""Application configuration for the command-line front end."""

from django.apps import AppConfig


class CliConfig(AppConfig):
    """Hosts the management commands."""

    name = "cli"
    verbose_name = "Command line"
