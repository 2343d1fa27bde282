"""Job, grid and result documents of the Fueter pipeline.

Job::

    {"m": 3, "k": 1, "l": 0,
     "quad": {"separable": {"n": 4, "p": 2}},
     "P": {"left": [2], "right": []}}

``quad`` may instead carry an explicit quadruple under "quadruple". A grid
replaces the scalars by lists: {"m": [3, 5], "k": [0, 1], ..., "P": {...}}.
"""

from __future__ import annotations

from rest_framework import serializers

from axial.serializers import QuadrupleSerializer
from fueterlab.exceptions import PreconditionError
from generators.builders import biregular_poly
from generators.serializers import GeneratorDescriptorSerializer
from polynomials.serializers import polynomial_to_json

from .models import FueterJob, FueterResult
from .pipeline import GridSpec, separable_job


class SeparableSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0)
    p = serializers.IntegerField(min_value=0)


class QuadSourceSerializer(serializers.Serializer):
    separable = SeparableSerializer(required=False)
    quadruple = QuadrupleSerializer(required=False)

    def validate(self, attrs):
        if len(attrs) != 1:
            raise serializers.ValidationError('give exactly one of "separable" or "quadruple"')
        return attrs


class JobSerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(min_value=0, required=False)
    l = serializers.IntegerField(min_value=0, required=False)
    quad = QuadSourceSerializer()
    P = GeneratorDescriptorSerializer(required=False)

    def create(self, validated_data) -> FueterJob:
        """Build the job; mathematical problems raise PreconditionError."""

        m = validated_data["m"]
        descriptor = validated_data.get("P", {"left": [], "right": []})
        left, right = descriptor["left"], descriptor["right"]
        for name, indices in (("k", left), ("l", right)):
            if name in validated_data and validated_data[name] != len(indices):
                raise PreconditionError(
                    f"{name}={validated_data[name]} does not match the {len(indices)} generator indices {indices}"
                )
        source = validated_data["quad"]
        if "separable" in source:
            n, p = source["separable"]["n"], source["separable"]["p"]
            return separable_job(m, n, p, left, right)
        quadruple = QuadrupleSerializer().create(source["quadruple"])
        return FueterJob(m=m, q=quadruple, P=biregular_poly(left, right, m))


class GridSerializer(serializers.Serializer):
    m = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=False)
    k = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False)
    l = serializers.ListField(child=serializers.IntegerField(min_value=0), required=False)
    n = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)
    p = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)
    P = GeneratorDescriptorSerializer(required=False)

    def create(self, validated_data) -> GridSpec:
        descriptor = validated_data.get("P")
        left = tuple(descriptor["left"]) if descriptor else None
        right = tuple(descriptor["right"]) if descriptor else None
        ks = validated_data.get("k") or [len(left) if left is not None else 0]
        ls = validated_data.get("l") or [len(right) if right is not None else 0]
        return GridSpec(
            ms=tuple(validated_data["m"]),
            ks=tuple(ks),
            ls=tuple(ls),
            ns=tuple(validated_data["n"]),
            ps=tuple(validated_data["p"]),
            left=left,
            right=right,
        )


def is_grid_document(data) -> bool:
    return isinstance(data, dict) and isinstance(data.get("m"), list)


def job_from_json(data) -> FueterJob:
    serializer = JobSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def grid_from_json(data) -> GridSpec:
    serializer = GridSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def result_to_json(result: FueterResult) -> dict:
    m, k, l, n, p = result.job.key
    document = {"m": m, "k": k, "l": l}
    if n is not None:
        document.update(n=n, p=p)
    document.update(
        direct=polynomial_to_json(result.direct),
        closed_form=polynomial_to_json(result.closed_form),
        constant=result.constant,
        routes_agree=result.routes_agree,
        biregular=result.biregular,
    )
    return document

