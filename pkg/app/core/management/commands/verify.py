"""
Django command re-checking square, mate, TRP and colouring files.
"""
from django.core.management.base import BaseCommand, CommandError

from core.management.flags import (
    add_pair_type_arguments,
    IO_FAILED,
    USAGE,
    VERIFY_FAILED,
)
from latin.formats import read_dark_cells, read_decomposition, read_square
from latin.myrvold import (
    check_family,
    colour,
    load_profile,
    MyrvoldError,
    resolve_pair_type,
)
from latin.squares import (
    are_orthogonal,
    decompose_trp,
    LatinError,
    mate_from_transversals,
    verify_trp,
)


class VerificationFailed(Exception):
    def __init__(self, check, reason):
        self.check, self.reason = check, reason
        super().__init__(f'{check}: {reason}')


class Command(BaseCommand):
    help = 'Verify a square and any mate, TRP partner or colouring given.'

    def add_arguments(self, parser):
        parser.add_argument('square', help='Square file')
        parser.add_argument('--mate', help='Square claimed orthogonal')
        parser.add_argument('--trp', help='Transversal representation')
        parser.add_argument('--dark', help='Dark cell sidecar')
        parser.add_argument('--decomposition',
                            help='Transversal listing of the square')
        add_pair_type_arguments(parser)

    def _read(self, check, reader, path):
        try:
            return reader(path)
        except OSError as exc:
            raise CommandError(str(exc), returncode=IO_FAILED)
        except LatinError as exc:
            raise VerificationFailed(check, exc)

    def _profile(self, options):
        try:
            if options.get('pair_type'):
                return resolve_pair_type(options['pair_type'])[0]
            if options.get('profile'):
                return load_profile(options['profile'][0])
        except OSError as exc:
            raise CommandError(str(exc), returncode=IO_FAILED)
        except MyrvoldError as exc:
            raise CommandError(str(exc), returncode=USAGE)
        return None

    def _passed(self, check):
        self.stdout.write(self.style.SUCCESS(f'{check}: ok'))

    def handle(self, *args, **options):
        profile = self._profile(options)
        try:
            self.run_checks(options, profile)
        except VerificationFailed as exc:
            self.stdout.write(self.style.ERROR(str(exc)))
            raise CommandError(str(exc), returncode=VERIFY_FAILED)

    def run_checks(self, options, profile):
        square = self._read('square', read_square, options['square'])
        self._passed('square')

        if options.get('mate'):
            mate = self._read('mate', read_square, options['mate'])
            try:
                orthogonal = are_orthogonal(square, mate)
            except LatinError as exc:
                raise VerificationFailed('orthogonality', exc)
            if not orthogonal:
                raise VerificationFailed(
                    'orthogonality', 'some symbol pair repeats'
                )
            self._passed('orthogonality')

        family = None
        if options.get('trp'):
            partner = self._read('trp', read_square, options['trp'])
            try:
                represents = verify_trp(square, partner)
            except LatinError as exc:
                raise VerificationFailed('trp', exc)
            if not represents:
                raise VerificationFailed(
                    'trp', 'a row does not represent a transversal'
                )
            family = decompose_trp(square, partner)
            self._passed('trp')

        if options.get('decomposition'):
            order, listed = self._read(
                'decomposition', read_decomposition, options['decomposition']
            )
            try:
                if order != square.order:
                    raise LatinError(f'listing has order {order}')
                mate_from_transversals(square, listed)
            except LatinError as exc:
                raise VerificationFailed('decomposition', exc)
            family = listed
            self._passed('decomposition')

        if options.get('dark'):
            dark = self._read('colouring', read_dark_cells, options['dark'])
            try:
                if profile is None:
                    colouring = colour(square, dark)
                else:
                    colouring = colour(
                        square, dark, profile.dark_quota_per_column
                    )
            except MyrvoldError as exc:
                raise VerificationFailed('colouring', exc)
            self._passed('colouring')
            if profile is not None and family is not None:
                problems = check_family(colouring, profile, family)
                if problems:
                    raise VerificationFailed('profile', problems[0])
                self._passed('profile')
