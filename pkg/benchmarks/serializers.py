from rest_framework import serializers

from .models import BenchmarkRun, TimingResult


class TimingResultSerializer(serializers.ModelSerializer):
    class Meta:
        model = TimingResult
        fields = [
            'id', 'run', 'n_points', 'n_objectives', 'n_levels',
            'trial', 'algorithm', 'time_ns', 'checksum'
        ]
        read_only_fields = fields


class BenchmarkRunSerializer(serializers.ModelSerializer):
    algorithms = serializers.ListField(source='algorithm_list', child=serializers.CharField(), read_only=True)
    timing_count = serializers.IntegerField(source='timings.count', read_only=True)

    class Meta:
        model = BenchmarkRun
        fields = [
            'id', 'created_at', 'trials', 'base_seed', 'algorithms',
            'switch_enabled', 'c_left', 'c_right', 'exponent', 'offset',
            'd_interpretation', 'note', 'timing_count'
        ]


class RatioSummarySerializer(serializers.Serializer):
    """Time of one algorithm relative to the divide-and-conquer average of its cell."""
    n_points = serializers.IntegerField()
    n_objectives = serializers.IntegerField()
    n_levels = serializers.IntegerField()
    algorithm = serializers.CharField()
    ratio_avg = serializers.FloatField()
    ratio_min = serializers.FloatField()
    ratio_max = serializers.FloatField()
