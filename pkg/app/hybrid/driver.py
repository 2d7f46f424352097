"""
Hybrid runs: the CDCL engine with Euler-Parker attached.
"""
import enum
import logging
import time
from dataclasses import dataclass, field

from hybrid.config import HybridConfig, HybridError
from hybrid.propagator import HybridPropagator
from latin.myrvold import check_family
from latin.squares import (
    are_orthogonal,
    decompose_trp,
    representation_square,
)
from satengine.solver import Solver, Status


logger = logging.getLogger(__name__)


class HybridStatus(enum.Enum):
    FOUND = 'found'
    UNSAT = 'unsat'
    TIMEOUT = 'timeout'


@dataclass
class HybridStats:
    ep_calls: int = 0
    ep_stage1_time: float = 0.0
    ep_stage2_time: float = 0.0
    sat_time: float = 0.0
    total_time: float = 0.0
    blocked_squares: int = 0
    reblocked_squares: int = 0
    solver: object = None


@dataclass(frozen=True)
class HybridResult:
    status: HybridStatus
    stats: HybridStats
    square: object = None
    mate: object = None
    transversals: tuple = ()
    # Square whose row r lists the found square's symbols along
    # transversal r
    representation: object = None
    colouring: object = None
    # Watched square the mate was built for
    square_id: str = 'P'
    calls: tuple = field(default=(), repr=False)

    @property
    def found(self):
        return self.status is HybridStatus.FOUND


def _from_propagator(found):
    outcome = found.outcome
    return dict(
        square=found.square,
        mate=outcome.mate,
        transversals=outcome.transversals,
        representation=representation_square(
            found.square, outcome.transversals
        ),
        colouring=found.colouring,
        square_id=found.square_id,
    )


def _from_model(model, varmap):
    """Decode a pair model: P, its mate R and the representation Q."""
    p = varmap.decode_square(model, 'P')
    q = varmap.decode_square(model, 'Q')
    return dict(
        square=p,
        mate=varmap.decode_square(model, 'R'),
        transversals=decompose_trp(p, q),
        representation=q,
    )


def _verify(found, cfg):
    square, mate = found['square'], found['mate']
    if not are_orthogonal(square, mate):
        raise HybridError('Found mate is not orthogonal to its square')
    if found.get('colouring') is not None:
        problems = check_family(
            found['colouring'],
            cfg.profile_for(found.get('square_id', 'P')),
            found['transversals'],
        )
        if problems:
            raise HybridError(f'Found decomposition: {problems[0]}')


def run_hybrid(cnf, varmap, cfg, limits=None, options=None):
    """Solve cnf with Euler-Parker watching cfg.watched.

    Exceptions from the engine and from Euler-Parker (including an
    exhausted node budget) propagate.
    """
    started = time.perf_counter()
    solver = Solver.from_cnf(cnf, options)
    propagator = HybridPropagator(
        varmap, cfg, lambda: solver.stats.learned
    )
    solver.attach_propagator(propagator)
    logger.info(
        'hybrid run: order %d, watching %s, throttle %d',
        varmap.order, ''.join(cfg.watched), cfg.ep_conflict_throttle,
    )
    result = solver.solve(limits=limits)
    searched = propagator.calls[:]
    if result.status is Status.UNSAT and propagator.deferred:
        propagator.check_deferred()

    calls = tuple(propagator.calls)
    stats = HybridStats(
        ep_calls=len(calls),
        ep_stage1_time=sum(c.stage1_time for c in calls),
        ep_stage2_time=sum(c.stage2_time for c in calls),
        blocked_squares=propagator.blocked,
        reblocked_squares=propagator.memo.repeats,
        solver=result.stats,
    )
    stats.sat_time = max(0.0, result.seconds - sum(
        c.stage1_time + c.stage2_time for c in searched
    ))

    found = None
    if propagator.found is not None:
        found = _from_propagator(propagator.found)
    elif result.is_sat:
        if not cfg.cnf_certifies:
            raise HybridError('Model accepted without a mate')
        found = _from_model(result.model, varmap)

    if found is not None:
        _verify(found, cfg)
        status = HybridStatus.FOUND
    elif result.status is Status.UNSAT:
        status = HybridStatus.UNSAT
        found = {}
    elif result.status in (Status.TIMEOUT, Status.BUDGET):
        status = HybridStatus.TIMEOUT
        found = {}
    else:
        raise HybridError(f'Unexpected solver status {result.status.value}')

    stats.total_time = time.perf_counter() - started
    logger.info(
        'hybrid run finished: %s after %d EP calls, %d blocked',
        status.value, stats.ep_calls, stats.blocked_squares,
    )
    return HybridResult(status=status, stats=stats, calls=calls, **found)


def run_instance(instance, cfg=None, limits=None, options=None):
    """run_hybrid on an encoded instance, configured from settings."""
    cfg = cfg or HybridConfig.for_instance(instance)
    return run_hybrid(instance.cnf, instance.varmap, cfg, limits, options)
