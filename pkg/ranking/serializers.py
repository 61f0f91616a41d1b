import math

from rest_framework import serializers

from .core import PointSetError, build_point_set
from .hybrid import DInterpretation, SwitchPolicy
from .sorters import ALGORITHM_CHOICES


class SwitchPolicySerializer(serializers.Serializer):
    """Switch heuristic parameters; omitted fields fall back to settings."""
    enabled = serializers.BooleanField(required=False)
    c_left = serializers.FloatField(required=False)
    c_right = serializers.FloatField(required=False)
    exponent = serializers.FloatField(required=False)
    offset = serializers.FloatField(required=False)
    d_interpretation = serializers.ChoiceField(
        choices=[(choice.value, choice.name.lower()) for choice in DInterpretation],
        required=False,
    )

    def validate_exponent(self, value):
        if not 0 < value <= 2:
            raise serializers.ValidationError("Exponent must lie in (0, 2].")
        return value

    def validate(self, attrs):
        """Reject NaN and infinite coefficients."""
        errors = {
            name: "Value must be finite."
            for name in ('c_left', 'c_right', 'exponent', 'offset')
            if name in attrs and not math.isfinite(attrs[name])
        }
        if errors:
            raise serializers.ValidationError(errors)
        return attrs

    def create(self, validated_data):
        return SwitchPolicy.from_settings(**validated_data)


class SortRequestSerializer(serializers.Serializer):
    points = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()),
        min_length=1,
    )
    algorithm = serializers.ChoiceField(choices=ALGORITHM_CHOICES, default='hybrid')
    policy = SwitchPolicySerializer(required=False)

    def validate(self, attrs):
        """Build the point set so ragged or non-finite input is reported as a 400."""
        try:
            attrs['point_set'] = build_point_set(attrs['points'])
        except PointSetError as exc:
            raise serializers.ValidationError({'points': str(exc)})
        attrs['switch_policy'] = SwitchPolicy.from_settings(**attrs.get('policy', {}))
        return attrs


class SortResultSerializer(serializers.Serializer):
    algorithm = serializers.CharField()
    ranks = serializers.ListField(child=serializers.IntegerField(min_value=0))
    levels = serializers.IntegerField(min_value=0)
    checksum = serializers.CharField()


class SwitchIntervalQuerySerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=2)
    n_objectives = serializers.IntegerField(min_value=2, required=False)

    def validate(self, attrs):
        attrs.setdefault('n_objectives', attrs['m'])
        if attrs['n_objectives'] < attrs['m']:
            raise serializers.ValidationError(
                {'n_objectives': "Cannot be smaller than the subproblem objective count."}
            )
        return attrs
