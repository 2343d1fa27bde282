"""Django settings for the fueterlab project."""

from __future__ import annotations

import os

# The project never serves requests; the key only satisfies Django's checks.
SECRET_KEY = os.environ.get("BIREG_SECRET_KEY", "fueterlab-offline-only")

DEBUG = False

ALLOWED_HOSTS: list[str] = []


# Application definition

INSTALLED_APPS = [
    "rest_framework",
    "multivectors",
    "polynomials",
    "generators",
    "axial",
    "fueter",
    "numeric",
    "cli",
]


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Logging ------------------------------------------------------------------

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": os.environ.get("BIREG_LOG_LEVEL", "INFO"),
            "propagate": False,
        }
        for app in ("multivectors", "polynomials", "generators", "axial", "fueter", "numeric", "cli")
    },
}


# Engine configuration -----------------------------------------------------

BIREG = {
    # central-difference defaults for the numeric checks
    "FD_STEP": 1e-3,
    "FD_ORDER": 4,
    "FD_TOLERANCE": 1e-6,
    # process-pool size for grid jobs
    "THREADS": max(1, int(os.environ.get("BIREG_THREADS", "1"))),
    # blade masks are int bitmasks; 2**m components caps practical m
    "MAX_GENERATORS": 16,
    # points with r or rho below the floor are rejected by axial checks
    "AXIAL_FLOOR": 1e-6,
    "SAMPLE_BOX": (1.0, 2.0),
    "DEFAULT_SEED": 1,
}
