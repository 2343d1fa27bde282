"""JSON interchange format of Clifford polynomials.

    {"m": 3, "vars": ["x0", ..., "y3"],
     "terms": [{"exps": [...], "coef": {"e12": "3/2"}}, ...]}

Terms are listed in descending graded-lexicographic order of ``exps``.
"""

from __future__ import annotations

from rest_framework import serializers

from multivectors.models import AlgebraContext, Multivector
from multivectors.serializers import RationalField, multivector_to_json

from .models import CliffPoly, variable_names


class TermSerializer(serializers.Serializer):
    exps = serializers.ListField(child=serializers.IntegerField(min_value=0))
    coef = serializers.DictField(child=RationalField())


class PolynomialSerializer(serializers.Serializer):
    """Reads and writes :class:`CliffPoly` documents."""

    m = serializers.IntegerField(min_value=1)
    vars = serializers.ListField(child=serializers.CharField(), required=False)
    terms = TermSerializer(many=True)

    def validate(self, attrs):
        try:
            algebra = AlgebraContext(attrs["m"])
        except ValueError as exc:
            raise serializers.ValidationError({"m": str(exc)}) from exc
        names = variable_names(algebra)
        if "vars" in attrs and attrs["vars"] != names:
            raise serializers.ValidationError({"vars": f"expected {names}"})
        width = len(names)
        parsed = {}
        for position, term in enumerate(attrs["terms"]):
            exponents = tuple(term["exps"])
            if len(exponents) != width:
                raise serializers.ValidationError(
                    {"terms": f"term {position}: exps must hold {width} integers"}
                )
            if exponents in parsed:
                raise serializers.ValidationError({"terms": f"term {position}: duplicate exponent vector"})
            try:
                masks = {algebra.parse_blade_key(key): value for key, value in term["coef"].items()}
            except ValueError as exc:
                raise serializers.ValidationError({"terms": f"term {position}: {exc}"}) from exc
            parsed[exponents] = Multivector(algebra, masks)
        attrs["algebra"] = algebra
        attrs["parsed_terms"] = parsed
        return attrs

    def create(self, validated_data) -> CliffPoly:
        return CliffPoly(validated_data["algebra"], validated_data["parsed_terms"])

    def to_representation(self, instance: CliffPoly):
        return {
            "m": instance.context.m,
            "vars": variable_names(instance.context),
            "terms": [
                {"exps": list(exponents), "coef": multivector_to_json(coefficient)}
                for exponents, coefficient in instance.sorted_terms()
            ],
        }


def polynomial_to_json(poly: CliffPoly) -> dict:
    return PolynomialSerializer(poly).data


def polynomial_from_json(data) -> CliffPoly:
    """Parse a polynomial document; raises ``serializers.ValidationError``."""

    serializer = PolynomialSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()
