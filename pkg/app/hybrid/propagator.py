"""
The Euler-Parker propagator.

Completed squares are handed to Euler-Parker. A square without a mate
is excluded by a blocking clause; a square with a mate ends the search.

Calls are throttled by the conflict clauses the solver derives: analysis
of a native conflict, or of a blocking clause that arrived falsified.
A square completed while the throttle is closed is blocked at once and
queued; Euler-Parker sees it at the next fixpoint the throttle allows,
or after the search if the search ran out first.
"""
import enum
import logging
from collections import deque
from dataclasses import dataclass

from eulerparker.myrvold import find_mates_myrvold
from eulerparker.stages import euler_parker
from hybrid.watch import (
    blocking_clause,
    BlockedMemo,
    extract_colouring,
    extract_square,
    SquareWatch,
)
from satengine.propagator import ExternalClause, ExternalPropagator


logger = logging.getLogger(__name__)


class Trigger(enum.Enum):
    # Square complete at a propagation fixpoint
    FIXPOINT = 'fixpoint'
    # Full assignment offered to the solution check
    MODEL = 'model'
    # Queued square, checked at a later fixpoint
    DEFERRED = 'deferred'
    # Queued square, checked once the search had ended
    FINAL = 'final'


@dataclass(frozen=True)
class EpCallRecord:
    square: str
    trigger: Trigger
    # Solver-derived conflict clauses so far
    learned: int
    status: str
    stage1_time: float
    stage2_time: float
    transversal_count: int
    blocking_literals: int = 0
    repeat: bool = False


@dataclass(frozen=True)
class Snapshot:
    """A completed watched square, as Euler-Parker receives it."""
    square_id: str
    square: object
    colouring: object = None

    @property
    def dark(self):
        if self.colouring is None:
            return ()
        return self.colouring.dark


@dataclass(frozen=True)
class Found:
    square_id: str
    square: object
    outcome: object
    colouring: object = None


class HybridPropagator(ExternalPropagator):

    def __init__(self, varmap, cfg, learned):
        """learned() reads how many conflict clauses the solver derived."""
        self.varmap = varmap
        self.cfg = cfg
        self._learned = learned
        self.watches = [SquareWatch(varmap, s) for s in cfg.watched]
        self.observed = frozenset(
            v for watch in self.watches for v in watch.variables
        )
        self.memo = BlockedMemo(cfg.blocked_memo_size)
        self.calls = []
        self.deferred = deque()
        self.found = None
        self.blocked = 0
        self._pending = None
        self._last_call = None

    # -- notifications ----------------------------------------------------

    def on_new_level(self):
        for watch in self.watches:
            watch.on_new_level()

    def on_assign(self, lit):
        for watch in self.watches:
            watch.on_assign(lit)

    def on_backtrack(self, new_level):
        for watch in self.watches:
            watch.on_backtrack(new_level)

    # -- triggers ---------------------------------------------------------

    def _throttle_allows(self):
        if self._last_call is None:
            return True
        spent = self._learned() - self._last_call
        return spent >= self.cfg.ep_conflict_throttle

    def has_external_clause(self):
        # Clause from the last check, not fetched yet
        if self._pending is not None:
            return True
        if self.found is not None or not self._throttle_allows():
            return False
        # Oldest queued square first; it is already blocked
        if self.deferred:
            self._consult(self.deferred.popleft(), Trigger.DEFERRED)
            return False
        for watch in self.watches:
            if not watch.complete or watch.checked:
                continue
            clause = self._check(watch, Trigger.FIXPOINT)
            if clause is not None:
                self._pending = clause
                return True
            return False
        return False

    def fetch_external_clause(self):
        clause, self._pending = self._pending, None
        return ExternalClause(clause)

    def on_solution_check(self, model):
        if self.found is not None or self.cfg.cnf_certifies:
            return None
        # P before Q when both are still unchecked
        watch = next(
            (w for w in self.watches if not w.checked), self.watches[0]
        )
        if not self._throttle_allows():
            return ExternalClause(self._defer(watch, model))
        clause = self._check(watch, Trigger.MODEL, model)
        if clause is None:
            return None
        return ExternalClause(clause)

    def should_terminate(self):
        return self.found is not None

    def check_deferred(self):
        """Euler-Parker on the squares still queued when the search ended.

        Stops at the first mate.
        """
        while self.deferred and self.found is None:
            self._consult(self.deferred.popleft(), Trigger.FINAL)
        return self.found

    # -- Euler-Parker -----------------------------------------------------

    def _snapshot(self, watch, model=None):
        square = extract_square(watch, model)
        colouring = None
        if self.cfg.myrvold:
            profile = self.cfg.profile_for(watch.square)
            colouring = extract_colouring(
                watch, square, profile.dark_quota_per_column, model
            )
        watch.checked = True
        return Snapshot(watch.square, square, colouring)

    def _blocking(self, snap, watch, model=None):
        clause = blocking_clause(
            snap.square, self.varmap, snap.square_id, snap.dark
        )
        if model is None:
            assert all(watch.holds(-lit) for lit in clause)
        else:
            assert all(model[-lit] for lit in clause)
        return clause

    def _check(self, watch, trigger, model=None):
        """Euler-Parker on a complete watched square.

        Returns the blocking clause when the square has no mate, None
        when a mate was found.
        """
        snap = self._snapshot(watch, model)
        if self._consult(snap, trigger):
            return None
        return self._blocking(snap, watch, model)

    def _defer(self, watch, model):
        snap = self._snapshot(watch, model)
        clause = self._blocking(snap, watch, model)
        self.deferred.append(snap)
        logger.debug(
            'throttle closed: %s queued, %d waiting',
            snap.square_id, len(self.deferred),
        )
        return clause

    def _consult(self, snap, trigger):
        """Run Euler-Parker on snap and record the call; True on a mate."""
        budget = self.cfg.ep_budget()
        if snap.colouring is not None:
            outcome = find_mates_myrvold(
                snap.square, snap.colouring,
                self.cfg.profile_for(snap.square_id),
                budget=budget, strict=False,
            )
        else:
            outcome = euler_parker(snap.square, budget=budget)
        # The throttle counts from here, whatever the verdict
        learned = self._learned()
        self._last_call = learned

        literals = 0
        repeat = False
        if outcome.has_mate:
            self.found = Found(
                snap.square_id, snap.square, outcome, snap.colouring
            )
        else:
            assert outcome.stats.exhaustive, 'blocking needs a full stage 2'
            # Same size as blocking_clause()
            literals = (snap.square.order - 1) ** 2 + len(snap.dark)
            repeat = self.memo.add((
                snap.square_id, snap.square.digest(),
                tuple(sorted(snap.dark)),
            ))
            self.blocked += 1

        record = EpCallRecord(
            square=snap.square_id,
            trigger=trigger,
            learned=learned,
            status=outcome.status.value,
            stage1_time=outcome.stats.stage1_time,
            stage2_time=outcome.stats.stage2_time,
            transversal_count=outcome.stats.transversal_count,
            blocking_literals=literals,
            repeat=repeat,
        )
        self.calls.append(record)
        logger.debug(
            'EP call %d on %s (%s, %d learned): %s, %d transversals',
            len(self.calls), snap.square_id, trigger.value, learned,
            record.status, record.transversal_count,
        )
        return outcome.has_mate
