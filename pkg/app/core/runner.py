"""
Single pure or hybrid searches, shared by the solve and bench commands.

Pure runs hand a channeled pair instance to the CDCL engine alone, with
the first rows of the square and of its mate fixed. Hybrid runs search
single squares with the first row fixed and let Euler-Parker supply the
mate. Myrvold runs fix no rows: the white symbols 0..3 are not
interchangeable with the rest.
"""
import logging
import os
from dataclasses import dataclass

from core.models import SolveRun
from encoder.instances import encode
from encoder.squares import EncodeConfig, Mode
from eulerparker.stages import BudgetExhausted
from hybrid.config import HybridConfig
from hybrid.driver import HybridStatus, run_hybrid
from latin.formats import (
    format_dark_cells,
    format_decomposition,
    format_square,
)
from latin.myrvold import check_family, colour
from latin.squares import are_orthogonal, decompose_trp
from satengine.options import SolverOptions
from satengine.solver import Limits, Solver, STATS_FIELDS, Status


logger = logging.getLogger(__name__)

PURE, HYBRID = 'pure', 'hybrid'
SAT, UNSAT, TIMEOUT = 'sat', 'unsat', 'timeout'

# CSV columns of one bench row, in order
RECORD_FIELDS = (
    'instance', 'order', 'pair_type', 'seed', 'method', 'status',
    'total_s', 'sat_s', 'ep1_s', 'ep2_s', 'ep_calls', 'blocked_squares',
    'conflicts', 'restarts',
)


class RunError(ValueError):
    """A search returned a result that does not check out."""


@dataclass(frozen=True)
class RunTask:
    method: str
    order: int
    seed: int = 0
    cardinality: str = 'pairwise'
    timeout: float = None
    # (profile of P, profile of Q) for Myrvold runs
    profiles: tuple = None
    pair_type: str = ''
    ep_throttle: int = None
    ep_node_budget: int = None

    @property
    def myrvold(self):
        return self.profiles is not None

    @property
    def label(self):
        if self.pair_type:
            return f'n{self.order}-{self.pair_type}'
        return f'n{self.order}'

    @classmethod
    def from_spec(cls, data, **overrides):
        """Task from validated serializer data."""
        values = dict(
            method=data.get('mode'),
            order=data.get('order'),
            seed=data.get('seed', 0),
            cardinality=data.get('card', 'pairwise'),
            timeout=data.get('timeout'),
            profiles=data.get('profiles'),
            pair_type=data.get('pair_label', ''),
            ep_throttle=data.get('ep_throttle'),
            ep_node_budget=data.get('ep_node_budget'),
        )
        values.update(overrides)
        return cls(**values)


@dataclass
class RunOutcome:
    task: RunTask
    status: str
    total_s: float = 0.0
    sat_s: float = 0.0
    ep1_s: float = 0.0
    ep2_s: float = 0.0
    ep_calls: int = 0
    conflicts: int = 0
    restarts: int = 0
    blocked_squares: int = 0
    square: object = None
    mate: object = None
    transversals: tuple = ()
    representation: object = None
    colouring: object = None
    stats_line: str = ''

    @property
    def solved(self):
        return self.status != TIMEOUT

    @property
    def method(self):
        return self.task.method

    @property
    def order(self):
        return self.task.order

    @property
    def pair_type(self):
        return self.task.pair_type

    def record(self):
        """Row of RECORD_FIELDS values."""
        task = self.task
        return {
            'instance': task.label,
            'order': task.order,
            'pair_type': task.pair_type,
            'seed': task.seed,
            'method': task.method,
            'status': self.status,
            'total_s': f'{self.total_s:.4f}',
            'sat_s': f'{self.sat_s:.4f}',
            'ep1_s': f'{self.ep1_s:.4f}',
            'ep2_s': f'{self.ep2_s:.4f}',
            'ep_calls': self.ep_calls,
            'blocked_squares': self.blocked_squares,
            'conflicts': self.conflicts,
            'restarts': self.restarts,
        }


def encode_config(task):
    n = task.order
    if task.myrvold:
        return EncodeConfig(
            order=n,
            mode=Mode.MYRVOLD,
            cardinality=task.cardinality,
            profiles=task.profiles,
            trp_witness=task.method == PURE,
        )
    if task.method == PURE:
        return EncodeConfig(
            order=n,
            mode=Mode.PAIR,
            cardinality=task.cardinality,
            first_row=tuple(range(n)),
            fix_mate_first_row=True,
        )
    return EncodeConfig(
        order=n, cardinality=task.cardinality, first_row=tuple(range(n))
    )


def build_instance(task):
    return encode(encode_config(task))


def _limits(task):
    if task.timeout is None:
        return None
    return Limits(seconds=task.timeout)


def format_stats(task, status, total_s, sat_s, ep1_s=0.0, ep2_s=0.0,
                 ep_calls=0, blocked_squares=0, **extra):
    """The key=value line written to stats.txt."""
    pairs = dict(
        seed=task.seed,
        mode=task.method,
        pair_type=task.pair_type or '-',
        status=status,
        total_time=f'{total_s:.3f}',
        sat_time=f'{sat_s:.3f}',
        ep_stage1_time=f'{ep1_s:.3f}',
        ep_stage2_time=f'{ep2_s:.3f}',
        ep_calls=ep_calls,
        blocked_squares=blocked_squares,
    )
    pairs.update(extra)
    return ' '.join(f'{key}={value}' for key, value in pairs.items())


def _check_profile(colouring, profile, family, square_id):
    problems = check_family(colouring, profile, family)
    if problems:
        raise RunError(
            f'Decomposition of {square_id} breaks its profile: '
            + '; '.join(problems)
        )


def _decode_pure(outcome, model, varmap, task):
    p = varmap.decode_square(model, 'P')
    r = varmap.decode_square(model, 'R')
    q = varmap.decode_square(model, 'Q')
    if not are_orthogonal(p, r):
        raise RunError('Decoded mate is not orthogonal to its square')
    outcome.square, outcome.mate, outcome.representation = p, r, q
    outcome.transversals = decompose_trp(p, q)
    if task.myrvold:
        quota_p = task.profiles[0].dark_quota_per_column
        quota_q = task.profiles[1].dark_quota_per_column
        outcome.colouring = colour(p, varmap.decode_dark(model, 'P'), quota_p)
        q_colouring = colour(q, varmap.decode_dark(model, 'Q'), quota_q)
        _check_profile(
            outcome.colouring, task.profiles[0], outcome.transversals, 'P'
        )
        _check_profile(
            q_colouring, task.profiles[1], decompose_trp(q, p), 'Q'
        )


def run_pure(task, instance, options):
    solver = Solver.from_cnf(instance.cnf, options)
    result = solver.solve(limits=_limits(task))
    if result.status is Status.SAT:
        status = SAT
    elif result.status is Status.UNSAT:
        status = UNSAT
    else:
        status = TIMEOUT
    outcome = RunOutcome(
        task,
        status,
        total_s=result.seconds,
        sat_s=result.seconds,
        conflicts=result.stats.conflicts,
        restarts=result.stats.restarts,
        stats_line=format_stats(
            task, status, result.seconds, result.seconds,
            **{name: getattr(result.stats, name) for name in STATS_FIELDS},
        ),
    )
    if result.is_sat:
        _decode_pure(outcome, result.model, instance.varmap, task)
    return outcome


def run_hybrid_task(task, instance, options):
    overrides = {}
    if task.ep_throttle is not None:
        overrides['ep_conflict_throttle'] = task.ep_throttle
    if task.ep_node_budget is not None:
        overrides['ep_node_budget'] = task.ep_node_budget
    cfg = HybridConfig.for_instance(instance, **overrides)
    try:
        result = run_hybrid(
            instance.cnf, instance.varmap, cfg, _limits(task), options
        )
    except BudgetExhausted as exc:
        logger.warning('%s seed %d: %s', task.label, task.seed, exc)
        return RunOutcome(
            task, TIMEOUT, stats_line=format_stats(task, TIMEOUT, 0.0, 0.0)
        )

    stats = result.stats
    status = {
        HybridStatus.FOUND: SAT,
        HybridStatus.UNSAT: UNSAT,
        HybridStatus.TIMEOUT: TIMEOUT,
    }[result.status]
    return RunOutcome(
        task,
        status,
        total_s=stats.total_time,
        sat_s=stats.sat_time,
        ep1_s=stats.ep_stage1_time,
        ep2_s=stats.ep_stage2_time,
        ep_calls=stats.ep_calls,
        conflicts=stats.solver.conflicts,
        restarts=stats.solver.restarts,
        blocked_squares=stats.blocked_squares,
        square=result.square,
        mate=result.mate,
        transversals=result.transversals,
        representation=result.representation,
        colouring=result.colouring,
        stats_line=format_stats(
            task, status, stats.total_time, stats.sat_time,
            stats.ep_stage1_time, stats.ep_stage2_time,
            ep_calls=stats.ep_calls,
            blocked_squares=stats.blocked_squares,
            reblocked_squares=stats.reblocked_squares,
            conflicts=stats.solver.conflicts,
            learned=stats.solver.learned,
        ),
    )


def execute(task):
    """Encode and run one task. The seed is the engine's shuffle seed."""
    logger.info('%s %s seed %d: start', task.method, task.label, task.seed)
    instance = build_instance(task)
    options = SolverOptions.from_settings(shuffle_seed=task.seed)
    if task.method == HYBRID:
        outcome = run_hybrid_task(task, instance, options)
    else:
        outcome = run_pure(task, instance, options)
    logger.info(
        '%s %s seed %d: %s in %.3fs', task.method, task.label, task.seed,
        outcome.status, outcome.total_s,
    )
    return outcome


def write_outputs(outcome, directory):
    """Square, mate, TRP partner, decomposition, colouring and stats files.

    Returns the paths written. Only stats.txt is written without a mate.
    """
    os.makedirs(directory, exist_ok=True)
    files = {'stats.txt': outcome.stats_line + '\n'}
    if outcome.square is not None:
        files['square.txt'] = format_square(outcome.square)
        files['mate.txt'] = format_square(outcome.mate)
        files['trp.txt'] = format_square(outcome.representation)
        files['transversals.txt'] = format_decomposition(
            outcome.square.order, outcome.transversals
        )
        if outcome.colouring is not None:
            files['colouring.txt'] = format_dark_cells(outcome.colouring)
    written = []
    for name, text in files.items():
        path = os.path.join(directory, name)
        with open(path, 'w') as f:
            f.write(text)
        written.append(path)
    return written


def save_run(outcome):
    task = outcome.task
    return SolveRun.objects.create(
        method=task.method,
        order=task.order,
        pair_type=task.pair_type,
        cardinality=task.cardinality,
        seed=task.seed,
        status=outcome.status,
        total_s=outcome.total_s,
        sat_s=outcome.sat_s,
        ep1_s=outcome.ep1_s,
        ep2_s=outcome.ep2_s,
        ep_calls=outcome.ep_calls,
        conflicts=outcome.conflicts,
        restarts=outcome.restarts,
        blocked_squares=outcome.blocked_squares,
        square=format_square(outcome.square) if outcome.square else '',
        mate=format_square(outcome.mate) if outcome.mate else '',
    )
