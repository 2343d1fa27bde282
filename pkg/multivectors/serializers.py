"""JSON text form of multivectors: {"1": "-1", "e13": "3/2"}."""

from __future__ import annotations

from fractions import Fraction

from rest_framework import serializers

from .models import AlgebraContext, Multivector


class RationalField(serializers.Field):
    """A rational written as a decimal-free "p/q" (or integer) string."""

    default_error_messages = {
        "invalid": "Expected a rational string such as \"3/2\", got {value!r}.",
    }

    def to_representation(self, value: Fraction) -> str:
        return str(value)

    def to_internal_value(self, data) -> Fraction:
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            self.fail("invalid", value=data)
        if isinstance(data, str) and ("." in data or "e" in data.lower()):
            self.fail("invalid", value=data)
        try:
            return Fraction(data)
        except (ValueError, ZeroDivisionError):
            self.fail("invalid", value=data)


class MultivectorField(serializers.Field):
    """Blade-keyed map of rational strings.

    The algebra is taken from ``context["algebra"]`` of the root serializer.
    """

    default_error_messages = {
        "not_a_dict": "Expected an object mapping blade keys to rationals.",
        "bad_key": "{message}",
    }

    def __init__(self, **kwargs) -> None:
        self.rational = RationalField()
        super().__init__(**kwargs)

    def _algebra(self) -> AlgebraContext:
        algebra = self.context.get("algebra")
        if algebra is None:
            raise serializers.ValidationError("algebra context is required to read multivectors")
        return algebra

    def to_representation(self, value: Multivector) -> dict[str, str]:
        return {value.context.blade_key(mask): str(coefficient) for mask, coefficient in value.sorted_items()}

    def to_internal_value(self, data) -> Multivector:
        if not isinstance(data, dict):
            self.fail("not_a_dict")
        algebra = self._algebra()
        terms = {}
        for key, raw in data.items():
            try:
                mask = algebra.parse_blade_key(key)
            except ValueError as exc:
                self.fail("bad_key", message=str(exc))
            terms[mask] = self.rational.to_internal_value(raw)
        return Multivector(algebra, terms)


def multivector_to_json(value: Multivector) -> dict[str, str]:
    return MultivectorField().to_representation(value)


def multivector_from_json(data, algebra: AlgebraContext) -> Multivector:
    field = MultivectorField()
    field.bind("value", serializers.Serializer(context={"algebra": algebra}))
    return field.to_internal_value(data)
