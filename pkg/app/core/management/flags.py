"""
Shared flag handling and exit codes of the search commands.
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from rest_framework import serializers


# Exit codes; 0 means the command ran and decided its question
VERIFY_FAILED = 1
USAGE = 2
IO_FAILED = 3


def flatten_errors(detail, prefix=''):
    """'field: message' strings from a ValidationError detail."""
    if isinstance(detail, dict):
        lines = []
        for key, value in detail.items():
            name = '' if key == 'non_field_errors' else f'{key}: '
            lines.extend(flatten_errors(value, prefix + name))
        return lines
    if isinstance(detail, list):
        return [
            line for item in detail for line in flatten_errors(item, prefix)
        ]
    return [f'{prefix}{detail}']


def add_pair_type_arguments(parser):
    parser.add_argument(
        '--pair-type', help='Myrvold preset such as XX or RX'
    )
    parser.add_argument(
        '--profile', nargs='+', metavar='FILE',
        help='Profile file for both squares, or one each for P and Q',
    )


class SpecCommand(BaseCommand):
    """Command whose flags are checked by a serializer before any work."""

    spec_serializer = None

    def validate_spec(self, **data):
        data = {
            key: value for key, value in data.items() if value is not None
        }
        serializer = self.spec_serializer(data=data)
        try:
            serializer.is_valid(raise_exception=True)
        except serializers.ValidationError as exc:
            raise CommandError(
                '; '.join(flatten_errors(exc.detail)), returncode=USAGE
            )
        except OSError as exc:
            raise CommandError(str(exc), returncode=IO_FAILED)
        return serializer.validated_data

    def search_default(self, name):
        return settings.MOLS_SEARCH.get(name)
