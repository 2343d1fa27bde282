"""Generator descriptor: {"left": [2, 3], "right": [2]}."""

from __future__ import annotations

from rest_framework import serializers

from .builders import biregular_poly
from .models import BiregularPoly


class GeneratorDescriptorSerializer(serializers.Serializer):
    """Indices of the Fueter variables in x (left) and y (right)."""

    left = serializers.ListField(child=serializers.IntegerField(), default=list)
    right = serializers.ListField(child=serializers.IntegerField(), default=list)

    def build(self, m: int) -> BiregularPoly:
        """Construct the polynomial; index errors surface as PreconditionError."""

        data = self.validated_data
        return biregular_poly(data["left"], data["right"], m)

    @staticmethod
    def describe(left, right) -> dict:
        return {"left": list(left), "right": list(right)}


def generator_from_json(data, m: int) -> BiregularPoly:
    serializer = GeneratorDescriptorSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.build(m)
