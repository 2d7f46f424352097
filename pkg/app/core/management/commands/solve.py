"""
Django command running one pure or hybrid search.
"""
from django.core.management.base import CommandError

from core.management.flags import (
    add_pair_type_arguments,
    IO_FAILED,
    SpecCommand,
    VERIFY_FAILED,
)
from core.runner import execute, RunError, RunTask, save_run, write_outputs
from core.serializers import RunSpecSerializer
from hybrid.config import HybridError


class Command(SpecCommand):
    help = 'Search for an orthogonal pair, with or without Euler-Parker.'
    spec_serializer = RunSpecSerializer

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, required=True)
        parser.add_argument('--mode', required=True, help='pure or hybrid')
        parser.add_argument('--card', default='pairwise',
                            help='pairwise or totalizer')
        parser.add_argument('--seed', type=int, default=0,
                            help='Shuffle seed; 0 keeps the input order')
        parser.add_argument('--timeout', type=float,
                            help='Wall clock limit in seconds')
        parser.add_argument('--ep-throttle', type=int,
                            help='Native conflicts between EP calls')
        parser.add_argument('--ep-node-budget', type=int,
                            help='Exact cover nodes per EP call')
        parser.add_argument('--out', help='Directory for result files')
        parser.add_argument('--record', action='store_true',
                            help='Store the run in the database')
        add_pair_type_arguments(parser)

    def handle(self, *args, **options):
        timeout = options.get('timeout')
        if timeout is None:
            timeout = self.search_default('DEFAULT_TIMEOUT')
        spec = self.validate_spec(
            order=options['order'],
            mode=options['mode'],
            card=options['card'],
            seed=options['seed'],
            timeout=timeout,
            ep_throttle=options.get('ep_throttle'),
            ep_node_budget=options.get('ep_node_budget'),
            pair_type=options.get('pair_type'),
            profile=options.get('profile'),
            out=options.get('out'),
            record=options['record'],
        )
        task = RunTask.from_spec(spec)
        try:
            outcome = execute(task)
        except (RunError, HybridError) as exc:
            raise CommandError(str(exc), returncode=VERIFY_FAILED)

        if spec.get('out'):
            try:
                write_outputs(outcome, spec['out'])
            except OSError as exc:
                raise CommandError(str(exc), returncode=IO_FAILED)
        if spec['record']:
            save_run(outcome)

        message = f'{task.method} {task.label}: {outcome.status}'
        if outcome.status == 'timeout':
            self.stdout.write(self.style.WARNING(message))
        else:
            self.stdout.write(self.style.SUCCESS(message))
        self.stdout.write(outcome.stats_line)
        if outcome.square is not None:
            self.stdout.write(f'square:\n{outcome.square}')
            self.stdout.write(f'mate:\n{outcome.mate}')
