"""
Django command running the seeded pure/hybrid benchmark matrix.
"""
import csv

from django.core.management.base import CommandError

from core.bench import (
    expand_matrix,
    run_tasks,
    summarise,
    SUMMARY_FIELDS,
    write_host_info,
)
from core.management.flags import (
    add_pair_type_arguments,
    IO_FAILED,
    SpecCommand,
    VERIFY_FAILED,
)
from core.runner import RECORD_FIELDS, RunError, save_run
from core.serializers import BenchSpecSerializer
from hybrid.config import HybridError


class Command(SpecCommand):
    help = 'Run orders x methods x seeds and write a CSV with a summary.'
    spec_serializer = BenchSpecSerializer

    def add_arguments(self, parser):
        parser.add_argument('--orders', nargs='+', type=int, required=True)
        parser.add_argument('--methods', nargs='+',
                            default=['pure', 'hybrid'])
        parser.add_argument('--seeds', nargs='+', type=int,
                            default=list(range(1, 16)))
        parser.add_argument('--card', default='pairwise')
        parser.add_argument('--timeout', type=float,
                            help='Wall clock limit per run in seconds')
        parser.add_argument('--ep-throttle', type=int)
        parser.add_argument('--jobs', type=int,
                            help='Worker processes')
        parser.add_argument('--out', required=True, help='CSV path')
        parser.add_argument('--record', action='store_true',
                            help='Store every run in the database')
        add_pair_type_arguments(parser)

    def handle(self, *args, **options):
        timeout = options.get('timeout')
        if timeout is None:
            timeout = self.search_default('DEFAULT_TIMEOUT')
        jobs = options.get('jobs') or self.search_default('BENCH_JOBS')
        spec = self.validate_spec(
            orders=options['orders'],
            methods=options['methods'],
            seeds=options['seeds'],
            card=options['card'],
            timeout=timeout,
            ep_throttle=options.get('ep_throttle'),
            jobs=jobs,
            pair_type=options.get('pair_type'),
            profile=options.get('profile'),
            out=options['out'],
            record=options['record'],
        )
        tasks = expand_matrix(spec)
        out = spec['out']
        self.stdout.write(
            f'{len(tasks)} runs on {spec["jobs"]} worker(s) into {out}'
        )

        try:
            write_host_info(f'{out}.host.json', spec['jobs'])
            with open(out, 'w', newline='', encoding='utf-8') as f:
                outcomes = self._run(f, tasks, spec)
        except OSError as exc:
            raise CommandError(str(exc), returncode=IO_FAILED)
        except (RunError, HybridError) as exc:
            raise CommandError(str(exc), returncode=VERIFY_FAILED)
        except KeyboardInterrupt:
            self.stderr.write(f'Interrupted; rows so far are kept in {out}')
            raise

        solved = sum(1 for o in outcomes if o.solved)
        self.stdout.write(self.style.SUCCESS(
            f'{solved} of {len(outcomes)} runs decided'
        ))

    def _run(self, f, tasks, spec):
        writer = csv.DictWriter(f, RECORD_FIELDS, lineterminator='\n')
        writer.writeheader()
        f.flush()
        outcomes = []
        for outcome in run_tasks(tasks, spec['jobs']):
            writer.writerow(outcome.record())
            f.flush()
            if spec['record']:
                save_run(outcome)
            outcomes.append(outcome)

        f.write('\n')
        summary = csv.DictWriter(f, SUMMARY_FIELDS, lineterminator='\n')
        summary.writeheader()
        summary.writerows(summarise(outcomes))
        return outcomes
