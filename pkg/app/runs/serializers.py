"""
Serializers for the stored run APIs.
"""

from core.models import SolveRun

from rest_framework import serializers


class SolveRunSerializer(serializers.ModelSerializer):
    """Serializer for run listings."""

    class Meta:
        model = SolveRun
        fields = [
            'id', 'created', 'method', 'order', 'pair_type', 'cardinality',
            'seed', 'status', 'total_s', 'sat_s', 'ep1_s', 'ep2_s',
            'ep_calls', 'conflicts', 'restarts', 'blocked_squares',
        ]
        read_only_fields = fields


class SolveRunDetailSerializer(SolveRunSerializer):
    """Serializer for a single run, with its square and mate."""

    class Meta(SolveRunSerializer.Meta):
        fields = SolveRunSerializer.Meta.fields + ['square', 'mate']
        read_only_fields = fields


class RunSummarySerializer(serializers.Serializer):
    """One summary row per method, order and pair type."""

    method = serializers.CharField()
    order = serializers.IntegerField()
    pair_type = serializers.CharField(allow_blank=True)
    runs = serializers.IntegerField()
    solved = serializers.IntegerField()
    median_s = serializers.CharField()
    min_s = serializers.CharField()
    max_s = serializers.CharField()
    median_ep_calls = serializers.IntegerField()
