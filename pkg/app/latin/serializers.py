"""
Serializers for the square checking APIs.
"""
from rest_framework import serializers

from latin.myrvold import MyrvoldError, colour
from latin.squares import Cell, LatinError, validate_square


class SquareField(serializers.ListField):
    """A grid of symbols, validated into a LatinSquare."""

    child = serializers.ListField(child=serializers.IntegerField())

    def to_internal_value(self, data):
        grid = super().to_internal_value(data)
        try:
            return validate_square(grid)
        except LatinError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return [list(row) for row in value.rows]


class SquareCheckSerializer(serializers.Serializer):
    """Input for the verify endpoint."""

    square = SquareField()
    mate = SquareField(required=False)
    trp = SquareField(required=False)
    # Dark cells as [row, col] pairs; only meaningful at order 10
    dark = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(min_value=0),
            min_length=2,
            max_length=2,
        ),
        required=False,
    )

    def validate(self, attrs):
        order = attrs['square'].order
        for name in ('mate', 'trp'):
            if name in attrs and attrs[name].order != order:
                raise serializers.ValidationError(
                    {name: f'Order must match the square ({order})'}
                )
        if 'dark' in attrs:
            try:
                attrs['colouring'] = colour(
                    attrs['square'], [Cell(*pair) for pair in attrs['dark']]
                )
            except MyrvoldError as exc:
                raise serializers.ValidationError({'dark': str(exc)})
        return attrs


class TransversalQuerySerializer(serializers.Serializer):
    """Input for the transversal listing endpoint."""

    square = SquareField()
    limit = serializers.IntegerField(min_value=1, required=False)
