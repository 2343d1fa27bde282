"""Shared parts of the engine's management commands.

Exit codes: 0 pass, 2 schema or unreadable input, 3 mathematical
precondition, 4 certification or suite failure.
"""

from __future__ import annotations

import argparse

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from fueterlab.exceptions import CertificationError, PreconditionError
from numeric.models import FDConfig

EXIT_SCHEMA = 2
EXIT_PRECONDITION = 3
EXIT_FAILURE = 4


def index_list(text: str) -> list[int]:
    """Parse "2,3" into [2, 3]; the empty string gives the empty list."""

    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def validation_message(error: serializers.ValidationError) -> str:
    detail = error.detail
    if isinstance(detail, dict):
        return "; ".join(f"{key}: {value}" for key, value in detail.items())
    return str(detail)


class EngineCommand(BaseCommand):
    """Runs :meth:`run` and turns engine exceptions into exit codes."""

    def add_fd_arguments(self, parser) -> None:
        parser.add_argument("--fd-step", type=float, help="central-difference step h")
        parser.add_argument("--fd-order", type=int, choices=(2, 4), help="central-difference order")
        parser.add_argument("--tol", type=float, help="pass threshold for numeric residuals")

    def add_seed_argument(self, parser) -> None:
        parser.add_argument("--seed", type=int, default=None, help="seed of every random choice")

    def fd_config(self, options) -> FDConfig:
        try:
            return FDConfig.from_settings(
                step=options.get("fd_step"), order=options.get("fd_order"), tolerance=options.get("tol")
            )
        except ValueError as exc:
            raise CommandError(str(exc), returncode=EXIT_SCHEMA) from exc

    def seed(self, options) -> int:
        seed = options.get("seed")
        return settings.BIREG["DEFAULT_SEED"] if seed is None else seed

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except serializers.ValidationError as exc:
            raise CommandError(f"invalid input: {validation_message(exc)}", returncode=EXIT_SCHEMA) from exc
        except PreconditionError as exc:
            raise CommandError(str(exc), returncode=EXIT_PRECONDITION) from exc
        except CertificationError as exc:
            raise CommandError(str(exc), returncode=EXIT_FAILURE) from exc

    def run(self, *args, **options) -> None:
        raise NotImplementedError

    def fail(self, message: str) -> None:
        raise CommandError(message, returncode=EXIT_FAILURE)
