"""Reading documents and writing results atomically."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from rest_framework import serializers


def load_json(path: str | os.PathLike):
    """Parse a JSON file; unreadable or malformed input is a schema error."""

    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise serializers.ValidationError({"file": f"cannot read {path}: {exc.strerror}"}) from exc
    except json.JSONDecodeError as exc:
        raise serializers.ValidationError({"file": f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})"}) from exc


def dumps(document) -> str:
    """Deterministic text: sorted keys, two-space indent, trailing newline."""

    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> Path:
    """Write through a temporary file in the target directory, then rename."""

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    descriptor, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.unlink(temporary)
        raise
    return path
