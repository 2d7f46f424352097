"""
Serializers validating command line flags before any work starts.
"""
from rest_framework import serializers

from encoder.cardinality import Cardinality
from encoder.squares import Mode
from latin.myrvold import (
    load_profile,
    MYRVOLD_ORDER,
    MyrvoldError,
    resolve_pair_type,
)


METHODS = ('pure', 'hybrid')
CARDINALITIES = [c.value for c in Cardinality]


class InstanceSpecSerializer(serializers.Serializer):
    """Order, cardinality encoding and Myrvold pair type of an instance.

    A pair type comes either from a preset name (--pair-type) or from one
    or two profile files (--profile); one file applies to both squares.
    Validated data gains 'profiles' (None for unrestricted instances) and
    'pair_label'. Unreadable profile files raise OSError.
    """

    order = serializers.IntegerField(min_value=1)
    card = serializers.ChoiceField(choices=CARDINALITIES, default='pairwise')
    pair_type = serializers.CharField(required=False, allow_null=True)
    profile = serializers.ListField(
        child=serializers.CharField(),
        required=False,
        allow_null=True,
        min_length=1,
        max_length=2,
    )

    def _orders(self, attrs):
        return [attrs['order']]

    def validate(self, attrs):
        pair_type = attrs.get('pair_type')
        paths = attrs.get('profile')
        if pair_type and paths:
            raise serializers.ValidationError(
                'Give either a pair type or profile files, not both'
            )
        attrs['profiles'] = None
        attrs['pair_label'] = ''
        try:
            if pair_type:
                attrs['profiles'] = resolve_pair_type(pair_type)
                attrs['pair_label'] = pair_type.strip().upper()
            elif paths:
                loaded = [load_profile(path) for path in paths]
                if len(loaded) == 1:
                    loaded.append(loaded[0])
                attrs['profiles'] = tuple(loaded)
                attrs['pair_label'] = '+'.join(paths)
        except MyrvoldError as exc:
            raise serializers.ValidationError({'pair_type': str(exc)})
        if attrs['profiles'] is not None and any(
            n != MYRVOLD_ORDER for n in self._orders(attrs)
        ):
            raise serializers.ValidationError(
                {'order': f'Pair types need order {MYRVOLD_ORDER}'}
            )
        return attrs


class EncodeSpecSerializer(InstanceSpecSerializer):
    """Flags of the encode command."""

    mode = serializers.ChoiceField(
        choices=[m.value for m in Mode], default=Mode.SINGLE.value
    )
    first_row = serializers.BooleanField(default=False)
    fix_mate_first_row = serializers.BooleanField(default=False)
    out = serializers.CharField()

    def validate(self, attrs):
        attrs = super().validate(attrs)
        myrvold = attrs['mode'] == Mode.MYRVOLD.value
        if myrvold and attrs['profiles'] is None:
            raise serializers.ValidationError(
                {'mode': 'The myrvold mode needs a pair type or profile'}
            )
        if not myrvold and attrs['profiles'] is not None:
            raise serializers.ValidationError(
                {'pair_type': 'Pair types only apply to the myrvold mode'}
            )
        return attrs


class RunSpecSerializer(InstanceSpecSerializer):
    """Flags of the solve command."""

    mode = serializers.ChoiceField(choices=METHODS)
    seed = serializers.IntegerField(min_value=0, default=0)
    timeout = serializers.FloatField(
        min_value=0, required=False, allow_null=True
    )
    ep_throttle = serializers.IntegerField(
        min_value=0, required=False, allow_null=True
    )
    ep_node_budget = serializers.IntegerField(
        min_value=1, required=False, allow_null=True
    )
    out = serializers.CharField(required=False, allow_null=True)
    record = serializers.BooleanField(default=False)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs['mode'] == 'pure':
            for name in ('ep_throttle', 'ep_node_budget'):
                if attrs.get(name) is not None:
                    raise serializers.ValidationError(
                        {name: 'Only hybrid runs call Euler-Parker'}
                    )
        return attrs


class BenchSpecSerializer(InstanceSpecSerializer):
    """Flags of the bench command: the matrix orders x methods x seeds."""

    order = None
    orders = serializers.ListField(
        child=serializers.IntegerField(min_value=1), min_length=1
    )
    methods = serializers.ListField(
        child=serializers.ChoiceField(choices=METHODS), min_length=1
    )
    seeds = serializers.ListField(
        child=serializers.IntegerField(min_value=0), min_length=1
    )
    timeout = serializers.FloatField(
        min_value=0, required=False, allow_null=True
    )
    ep_throttle = serializers.IntegerField(
        min_value=0, required=False, allow_null=True
    )
    jobs = serializers.IntegerField(min_value=1, default=1)
    out = serializers.CharField()
    record = serializers.BooleanField(default=False)

    def _orders(self, attrs):
        return attrs['orders']
