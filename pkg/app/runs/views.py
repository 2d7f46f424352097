"""
Views for the stored run APIs.
"""

from core.bench import summarise
from core.models import SolveRun

from drf_spectacular.utils import (
    extend_schema_view,
    extend_schema,
    OpenApiParameter,
    OpenApiTypes
)

from rest_framework import viewsets
from rest_framework.decorators import action
from rest_framework.response import Response

from runs.serializers import (
    RunSummarySerializer,
    SolveRunDetailSerializer,
    SolveRunSerializer,
)


FILTER_PARAMETERS = [
    OpenApiParameter(
        'method',
        OpenApiTypes.STR,
        description='pure or hybrid'
    ),
    OpenApiParameter(
        'order',
        OpenApiTypes.STR,
        description='Comma separated list of orders to filter'
    ),
    OpenApiParameter(
        'status',
        OpenApiTypes.STR,
        description='sat, unsat or timeout'
    ),
]


@extend_schema_view(
    list=extend_schema(parameters=FILTER_PARAMETERS),
    summary=extend_schema(
        parameters=FILTER_PARAMETERS,
        responses=RunSummarySerializer(many=True),
    ),
)
class SolveRunViewSet(viewsets.ReadOnlyModelViewSet):
    """List, retrieve and summarise stored runs."""

    queryset = SolveRun.objects.all()
    serializer_class = SolveRunDetailSerializer

    def _params_to_ints(self, qs):
        """Convert a list of strings to integers."""
        return [int(str_id) for str_id in qs.split(',')]

    def get_queryset(self):
        method = self.request.query_params.get('method')
        orders = self.request.query_params.get('order')
        status = self.request.query_params.get('status')
        queryset = self.queryset
        if method:
            queryset = queryset.filter(method=method)
        if orders:
            queryset = queryset.filter(order__in=self._params_to_ints(orders))
        if status:
            queryset = queryset.filter(status=status)
        return queryset.order_by('-id')

    def get_serializer_class(self):
        if self.action == 'list':
            return SolveRunSerializer
        if self.action == 'summary':
            return RunSummarySerializer
        return self.serializer_class

    @action(methods=['GET'], detail=False)
    def summary(self, request):
        """Lower median, min and max times per method and order."""
        runs = self.get_queryset().order_by('method', 'order', 'pair_type')
        serializer = self.get_serializer(summarise(runs), many=True)
        return Response(serializer.data)
