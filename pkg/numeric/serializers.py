"""Point sets and residual report lines.

Points are a JSON array of coordinate arrays [x0, ..., xm, y0, ..., ym].
Reports are JSON lines {"case": ..., "point": [...], "residual": r, "pass": b}.
"""

from __future__ import annotations

import json

from rest_framework import serializers

from .models import EvalPoint


class PointSetSerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=1)
    points = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField(), allow_empty=False), allow_empty=False
    )

    def validate(self, attrs):
        width = 2 * (attrs["m"] + 1)
        for position, point in enumerate(attrs["points"]):
            if len(point) != width:
                raise serializers.ValidationError({"points": f"point {position} needs {width} coordinates"})
        return attrs

    def create(self, validated_data) -> list[EvalPoint]:
        m = validated_data["m"]
        return [EvalPoint.from_coordinates(point, m) for point in validated_data["points"]]


def points_from_json(data, m: int) -> list[EvalPoint]:
    """Accepts a bare array of points, or {"m": .., "points": [..]}."""

    if isinstance(data, list):
        data = {"m": m, "points": data}
    serializer = PointSetSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    if serializer.validated_data["m"] != m:
        raise serializers.ValidationError({"m": f"points are for m={serializer.validated_data['m']}, expected {m}"})
    return serializer.save()


def points_to_json(points: list[EvalPoint]) -> list[list[float]]:
    return [point.as_list() for point in points]


def report_line(case: str, point: EvalPoint, residual: float, tolerance: float) -> str:
    record = {"case": case, "point": point.as_list(), "residual": residual, "pass": residual < tolerance}
    return json.dumps(record, sort_keys=True)
