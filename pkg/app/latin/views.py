"""
Views for the square checking APIs.
"""
from drf_spectacular.utils import extend_schema

from rest_framework import generics, status
from rest_framework.response import Response

from eulerparker.stages import enumerate_transversals
from latin.myrvold import classify_transversal, InconsistentType
from latin.serializers import (
    SquareCheckSerializer,
    TransversalQuerySerializer,
)
from latin.squares import are_orthogonal, decompose_trp, verify_trp


class VerifySquareView(generics.GenericAPIView):
    """Check a square and, when given, its mate, TRP partner and colouring."""
    serializer_class = SquareCheckSerializer

    @extend_schema(responses={200: dict})
    def post(self, request):
        serializer = self.get_serializer(data=request.data)
        # Malformed grids are rejected by the serializer with a 400
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        square = data['square']

        checks = {'square': True}
        if 'mate' in data:
            checks['orthogonal'] = are_orthogonal(square, data['mate'])
        if 'trp' in data:
            checks['trp'] = verify_trp(square, data['trp'])
        if 'colouring' in data:
            checks['colouring'] = True
            if checks.get('trp'):
                types = []
                try:
                    for t in decompose_trp(square, data['trp']):
                        types.append(
                            classify_transversal(t, data['colouring']).tag
                        )
                except InconsistentType:
                    types = None
                checks['types'] = types
        return Response(checks, status=status.HTTP_200_OK)


class TransversalListView(generics.GenericAPIView):
    """Enumerate the transversals of a square."""
    serializer_class = TransversalQuerySerializer

    @extend_schema(responses={200: dict})
    def post(self, request):
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        square = serializer.validated_data['square']
        limit = serializer.validated_data.get('limit')

        found = enumerate_transversals(square)
        listing = [
            [[c.row, c.col] for c in t] for t in found
        ]
        if limit is not None:
            listing = listing[:limit]
        return Response(
            {'count': len(found), 'transversals': listing},
            status=status.HTTP_200_OK,
        )
