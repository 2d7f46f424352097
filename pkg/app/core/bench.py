"""
Seeded benchmark matrix: task expansion, parallel runs, CSV summary.
"""
import json
import math
import multiprocessing
import os
import platform
import statistics
import sys
from datetime import datetime, timezone

import django

from core.runner import execute, RunTask, TIMEOUT


SUMMARY_FIELDS = (
    'method', 'order', 'pair_type', 'runs', 'solved', 'median_s', 'min_s',
    'max_s', 'median_ep_calls',
)


def expand_matrix(spec):
    """One task per order, method and seed, in that nesting order."""
    return [
        RunTask.from_spec(spec, method=method, order=order, seed=seed)
        for order in spec['orders']
        for method in spec['methods']
        for seed in spec['seeds']
    ]


def run_tasks(tasks, jobs=1):
    """Outcomes in task order, each yielded as soon as it is known.

    Workers are separate processes; closing the generator terminates
    any still running.
    """
    if jobs == 1:
        for task in tasks:
            yield execute(task)
        return
    with multiprocessing.Pool(processes=jobs,
                              initializer=django.setup) as pool:
        yield from pool.imap(execute, tasks)


def lower_median(values):
    return statistics.median_low(values)


def format_seconds(value):
    if math.isinf(value):
        return TIMEOUT
    return f'{value:.4f}'


def summarise(runs):
    """Per (method, order, pair type) rows of SUMMARY_FIELDS.

    runs are RunOutcomes or stored SolveRuns; both carry the grouping
    fields, status, total_s and ep_calls.

    Timed out runs count as infinitely slow, so a statistic landing on
    one prints as 'timeout'.
    """
    groups = {}
    for run in runs:
        key = (run.method, run.order, run.pair_type)
        groups.setdefault(key, []).append(run)

    rows = []
    for (method, order, pair_type), group in groups.items():
        times = [
            o.total_s if o.status != TIMEOUT else math.inf for o in group
        ]
        rows.append({
            'method': method,
            'order': order,
            'pair_type': pair_type,
            'runs': len(group),
            'solved': sum(1 for o in group if o.status != TIMEOUT),
            'median_s': format_seconds(lower_median(times)),
            'min_s': format_seconds(min(times)),
            'max_s': format_seconds(max(times)),
            'median_ep_calls': lower_median([o.ep_calls for o in group]),
        })
    return rows


def host_info(jobs):
    return {
        'recorded': datetime.now(timezone.utc).isoformat(),
        'platform': platform.platform(),
        'machine': platform.machine(),
        'processor': platform.processor(),
        'python': sys.version.split()[0],
        'django': django.get_version(),
        'cpu_count': os.cpu_count(),
        'jobs': jobs,
    }


def write_host_info(path, jobs):
    with open(path, 'w') as f:
        json.dump(host_info(jobs), f, indent=2)
        f.write('\n')
