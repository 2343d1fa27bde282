"""JSON form of axial functions and quadruples.

    {"terms": [{"a": 2, "b": 0, "c": 0, "d": 0, "coef": "1"}, ...]}

A quadruple is the four functions under "u1", "v1", "u2", "v2" plus a
"parity_ok" flag that is written but ignored on input.
"""

from __future__ import annotations

from rest_framework import serializers

from multivectors.serializers import RationalField

from .models import AxialFunction, HolomorphicQuadruple


class AxialTermSerializer(serializers.Serializer):
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    c = serializers.IntegerField()
    d = serializers.IntegerField()
    coef = RationalField()


class AxialFunctionSerializer(serializers.Serializer):
    terms = AxialTermSerializer(many=True)

    def validate_terms(self, terms):
        seen = set()
        for position, term in enumerate(terms):
            exponents = (term["a"], term["b"], term["c"], term["d"])
            if exponents in seen:
                raise serializers.ValidationError(f"term {position}: duplicate exponents {exponents}")
            seen.add(exponents)
        return terms

    def to_internal_value(self, data) -> AxialFunction:
        attrs = super().to_internal_value(data)
        return AxialFunction({(t["a"], t["b"], t["c"], t["d"]): t["coef"] for t in attrs["terms"]})

    def to_representation(self, instance: AxialFunction):
        return {
            "terms": [
                {"a": a, "b": b, "c": c, "d": d, "coef": str(coefficient)}
                for (a, b, c, d), coefficient in instance.sorted_terms()
            ]
        }


class QuadrupleSerializer(serializers.Serializer):
    u1 = AxialFunctionSerializer()
    v1 = AxialFunctionSerializer()
    u2 = AxialFunctionSerializer()
    v2 = AxialFunctionSerializer()
    parity_ok = serializers.BooleanField(read_only=True)

    def create(self, validated_data) -> HolomorphicQuadruple:
        """Build the quadruple; Cauchy-Riemann failures raise CauchyRiemannError."""

        return HolomorphicQuadruple(
            validated_data["u1"], validated_data["v1"], validated_data["u2"], validated_data["v2"]
        )


def axial_to_json(f: AxialFunction) -> dict:
    return AxialFunctionSerializer(f).data


def axial_from_json(data) -> AxialFunction:
    serializer = AxialFunctionSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data


def quadruple_to_json(q: HolomorphicQuadruple) -> dict:
    return QuadrupleSerializer(q).data


def quadruple_from_json(data) -> HolomorphicQuadruple:
    serializer = QuadrupleSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()
