import logging

from drf_yasg import openapi
from drf_yasg.utils import swagger_auto_schema
from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .hybrid import SwitchPolicy, switch_interval
from .oracle import count_levels
from .serializers import SortRequestSerializer, SortResultSerializer, SwitchIntervalQuerySerializer
from .sorters import get_sorter

logger = logging.getLogger(__name__)


@swagger_auto_schema(
    method='post',
    request_body=SortRequestSerializer,
    responses={
        200: SortResultSerializer,
        400: openapi.Response(description='Bad request - empty, ragged or non-finite points, or invalid policy'),
    },
    operation_description='Assign a non-domination rank to every posted point (all objectives minimized). '
                          'Equal points receive equal ranks.',
)
@api_view(['POST'])
@permission_classes([AllowAny])
def sort_points(request):
    """
    Rank a set of points with the requested algorithm.
    """
    serializer = SortRequestSerializer(data=request.data)
    serializer.is_valid(raise_exception=True)
    data = serializer.validated_data

    algorithm = data['algorithm']
    sorter = get_sorter(algorithm, data['switch_policy'])
    ranks = sorter(data['point_set'])
    logger.debug("Sorted %d points with %s", len(ranks), algorithm)

    result = SortResultSerializer({
        'algorithm': algorithm,
        'ranks': list(ranks),
        'levels': count_levels(ranks),
        'checksum': ranks.checksum(),
    })
    return Response(result.data, status=status.HTTP_200_OK)


@swagger_auto_schema(
    method='get',
    query_serializer=SwitchIntervalQuerySerializer,
    responses={
        200: openapi.Response(
            description='Switch interval under the configured policy',
            schema=openapi.Schema(
                type=openapi.TYPE_OBJECT,
                properties={
                    'm': openapi.Schema(type=openapi.TYPE_INTEGER),
                    'n_objectives': openapi.Schema(type=openapi.TYPE_INTEGER),
                    'n_min': openapi.Schema(type=openapi.TYPE_NUMBER),
                    'n_max': openapi.Schema(type=openapi.TYPE_NUMBER),
                    'enabled': openapi.Schema(type=openapi.TYPE_BOOLEAN),
                }
            )
        ),
        400: openapi.Response(description='Bad request - m missing or below 2'),
    },
    operation_description='Subproblem sizes for which the hybrid hands work to Best Order Sort.',
)
@api_view(['GET'])
@permission_classes([AllowAny])
def switch_interval_view(request):
    serializer = SwitchIntervalQuerySerializer(data=request.query_params)
    serializer.is_valid(raise_exception=True)
    m = serializer.validated_data['m']
    n_objectives = serializer.validated_data['n_objectives']

    policy = SwitchPolicy.from_settings()
    n_min, n_max = switch_interval(m, policy, n_objectives)
    return Response({
        'm': m,
        'n_objectives': n_objectives,
        'n_min': n_min if policy.enabled else None,
        'n_max': n_max if policy.enabled else None,
        'enabled': policy.enabled,
    })
