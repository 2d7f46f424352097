"""
Django command counting and listing the transversals of a square.
"""
from django.core.management.base import BaseCommand, CommandError

from core.management.flags import IO_FAILED, USAGE, VERIFY_FAILED
from eulerparker.stages import enumerate_transversals
from latin.formats import read_square
from latin.squares import LatinError


class Command(BaseCommand):
    help = 'Count the transversals of a square, optionally listing them.'

    def add_arguments(self, parser):
        parser.add_argument('square', help='Square file')
        parser.add_argument('--list', action='store_true',
                            help="Print each transversal's cells")
        parser.add_argument('--limit', type=int,
                            help='List at most this many')

    def handle(self, *args, **options):
        limit = options.get('limit')
        if limit is not None and limit < 0:
            raise CommandError('--limit must be >= 0', returncode=USAGE)
        try:
            square = read_square(options['square'])
        except OSError as exc:
            raise CommandError(str(exc), returncode=IO_FAILED)
        except LatinError as exc:
            raise CommandError(f'square: {exc}', returncode=VERIFY_FAILED)

        found = enumerate_transversals(square)
        if options['list']:
            listing = list(found)
            if limit is not None:
                listing = listing[:limit]
            for t in listing:
                self.stdout.write(' '.join(f'{c.row},{c.col}' for c in t))
        self.stdout.write(self.style.SUCCESS(
            f'{len(found)} transversals'
        ))
