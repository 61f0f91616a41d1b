from django_filters import FilterSet, rest_framework
from django_filters.rest_framework import DjangoFilterBackend
from drf_yasg.utils import swagger_auto_schema
from drf_yasg import openapi
from rest_framework import filters, status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response

from .harness import MissingCellError, summarize_ratios
from .models import BenchmarkRun, TimingResult
from .serializers import BenchmarkRunSerializer, RatioSummarySerializer, TimingResultSerializer


class TimingResultFilter(FilterSet):
    """Filter timings by run, grid coordinates and algorithm."""
    run = rest_framework.NumberFilter(field_name='run__id')
    n_points = rest_framework.NumberFilter()
    n_points_min = rest_framework.NumberFilter(field_name='n_points', lookup_expr='gte')
    n_points_max = rest_framework.NumberFilter(field_name='n_points', lookup_expr='lte')
    n_objectives = rest_framework.NumberFilter()
    n_levels = rest_framework.NumberFilter()
    algorithm = rest_framework.CharFilter(field_name='algorithm', lookup_expr='iexact')

    class Meta:
        model = TimingResult
        fields = ['run', 'n_points', 'n_points_min', 'n_points_max', 'n_objectives', 'n_levels', 'algorithm']


class TimingResultViewSet(viewsets.ReadOnlyModelViewSet):
    """
    Timings of stored benchmark runs.

    list:
    Return timing rows, filterable by run, N, M, L and algorithm.

    retrieve:
    Return a single timing row.
    """
    queryset = TimingResult.objects.select_related('run')
    serializer_class = TimingResultSerializer
    filter_backends = [DjangoFilterBackend, filters.OrderingFilter]
    filterset_class = TimingResultFilter
    ordering_fields = ['time_ns', 'n_points', 'n_objectives', 'n_levels', 'trial']
    ordering = ['n_points', 'n_objectives', 'n_levels', 'trial', 'algorithm']


class BenchmarkRunViewSet(viewsets.ReadOnlyModelViewSet):
    """
    Stored benchmark runs.

    list:
    Return all runs, newest first.

    retrieve:
    Return one run with its switch policy.
    """
    queryset = BenchmarkRun.objects.all()
    serializer_class = BenchmarkRunSerializer
    filter_backends = [filters.OrderingFilter]
    ordering_fields = ['created_at', 'trials']
    ordering = ['-created_at']

    @swagger_auto_schema(
        method='get',
        responses={
            200: RatioSummarySerializer(many=True),
            400: openapi.Response(description='Some cell has no divide-and-conquer timings'),
            404: openapi.Response(description='Run not found'),
        },
        operation_description='Per (N, M, L) cell, avg/min/max of each algorithm time divided by the '
                              'average divide-and-conquer time of that cell.',
    )
    @action(detail=True, methods=['get'])
    def summary(self, request, pk=None):
        """
        Ratio summary of the run's timings.
        """
        run = self.get_object()
        try:
            summaries = summarize_ratios(run.timing_rows())
        except MissingCellError as exc:
            return Response(
                {'error': exc.args[0]},
                status=status.HTTP_400_BAD_REQUEST
            )
        serializer = RatioSummarySerializer(summaries, many=True)
        return Response(serializer.data)
