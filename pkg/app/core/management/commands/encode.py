"""
Django command writing a DIMACS instance and its variable map.
"""
from django.core.management.base import CommandError

from core.management.flags import (
    add_pair_type_arguments,
    IO_FAILED,
    SpecCommand,
    USAGE,
)
from core.serializers import EncodeSpecSerializer
from encoder.dimacs import write_dimacs, write_varmap
from encoder.instances import encode
from encoder.squares import EncodeConfig, Mode


class Command(SpecCommand):
    help = 'Encode a Latin square, pair or Myrvold instance as DIMACS.'
    spec_serializer = EncodeSpecSerializer

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, required=True)
        parser.add_argument('--mode', default='single',
                            help='single, pair or myrvold')
        parser.add_argument('--card', default='pairwise',
                            help='pairwise or totalizer')
        parser.add_argument('--first-row', action='store_true',
                            help="Fix P's first row to 0..n-1")
        parser.add_argument('--fix-mate-first-row', action='store_true',
                            help="Fix R's first row to 0..n-1")
        parser.add_argument('--out', required=True,
                            help='DIMACS path; the map goes to OUT.map')
        add_pair_type_arguments(parser)

    def handle(self, *args, **options):
        spec = self.validate_spec(
            order=options['order'],
            mode=options['mode'],
            card=options['card'],
            first_row=options['first_row'],
            fix_mate_first_row=options['fix_mate_first_row'],
            pair_type=options.get('pair_type'),
            profile=options.get('profile'),
            out=options['out'],
        )
        n = spec['order']
        try:
            cfg = EncodeConfig(
                order=n,
                mode=Mode(spec['mode']),
                cardinality=spec['card'],
                first_row=tuple(range(n)) if spec['first_row'] else None,
                fix_mate_first_row=spec['fix_mate_first_row'],
                profiles=spec['profiles'],
            )
        except ValueError as exc:
            raise CommandError(str(exc), returncode=USAGE)
        instance = encode(cfg)

        out = spec['out']
        try:
            write_dimacs(out, instance.cnf)
            write_varmap(f'{out}.map', instance.varmap)
        except OSError as exc:
            raise CommandError(str(exc), returncode=IO_FAILED)

        self.stdout.write(self.style.SUCCESS(
            f'Wrote {instance.cnf.num_vars} variables and '
            f'{len(instance.cnf)} clauses to {out}'
        ))
