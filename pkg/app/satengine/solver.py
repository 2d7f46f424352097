"""
A conflict-driven clause-learning SAT solver.

Two watched literals per clause, first-UIP learning with local
minimisation, exponential variable activities in a lazy heap, phase
saving, Luby restarts and LBD-guided reduction of learned and
forgettable external clauses. An optional ExternalPropagator is driven
at propagation fixpoints.

Literals are signed ints over variables 1..num_vars. Models are tuples
of bools indexed by variable, with index 0 unused.
"""
import dataclasses
import enum
import heapq
import logging
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field

from satengine.options import (
    BadLiteral,
    ModelCheckFailed,
    PropagatorClauseOutOfRange,
    SatEngineError,
    SolverOptions,
)
from satengine.propagator import ExternalClause


logger = logging.getLogger(__name__)

TRUE, FALSE, UNASSIGNED = 1, -1, 0
RESCALE_LIMIT = 1e100


class Status(enum.Enum):
    SAT = 'sat'
    UNSAT = 'unsat'
    TIMEOUT = 'timeout'
    BUDGET = 'budget'
    TERMINATED = 'terminated'


@dataclass(frozen=True)
class Limits:
    conflicts: int = None
    seconds: float = None


@dataclass
class SolverStats:
    # Conflicts found by propagation; these drive restarts and reduction
    conflicts: int = 0
    # External clauses that were already falsified when installed
    external_conflicts: int = 0
    decisions: int = 0
    restarts: int = 0
    propagations: int = 0
    external_clauses_added: int = 0
    reductions: int = 0
    # Conflict clauses derived by analysis, whatever raised the conflict
    learned: int = 0
    peak_learned: int = 0
    decision_log: list = field(default_factory=list)

    def snapshot(self):
        return dataclasses.replace(
            self, decision_log=list(self.decision_log)
        )


STATS_FIELDS = (
    'conflicts', 'external_conflicts', 'decisions', 'restarts',
    'propagations', 'external_clauses_added', 'reductions', 'learned',
    'peak_learned',
)


@dataclass(frozen=True)
class SolveResult:
    status: Status
    stats: SolverStats
    model: tuple = None
    under_assumptions: bool = False
    seconds: float = 0.0

    @property
    def is_sat(self):
        return self.status is Status.SAT

    def true_vars(self):
        return [v for v in range(1, len(self.model)) if self.model[v]]

    def stats_line(self):
        pairs = [('status', self.status.value),
                 ('seconds', f'{self.seconds:.3f}')]
        pairs.extend((name, getattr(self.stats, name))
                     for name in STATS_FIELDS)
        return ' '.join(f'{key}={value}' for key, value in pairs)


def luby(index):
    """The index-th term (from 0) of 1, 1, 2, 1, 1, 2, 4, ..."""
    size, seq = 1, 0
    while size < index + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != index:
        size = (size - 1) >> 1
        seq -= 1
        index %= size
    return 2 ** seq


class Clause:
    __slots__ = ('lits', 'learnt', 'external', 'forgettable', 'lbd',
                 'activity', 'deleted')

    def __init__(self, lits, learnt=False, external=False,
                 forgettable=False, lbd=0):
        self.lits = lits
        self.learnt = learnt
        self.external = external
        self.forgettable = forgettable
        self.lbd = lbd
        self.activity = 0.0
        self.deleted = False

    def __repr__(self):
        return f'Clause({self.lits})'


class Solver:

    def __init__(self, num_vars=0, options=None):
        self.options = options or SolverOptions()
        self.num_vars = 0
        self.stats = SolverStats()
        # Per variable, indexed from 1
        self._assigns = [UNASSIGNED]
        self._level = [0]
        self._reason = [None]
        self._polarity = [False]
        self._activity = [0.0]
        # (-activity, var); stale entries are skipped when popped
        self._heap = []
        self._watches = defaultdict(list)
        # Assigned literals in order, split into levels by _trail_lim
        self._trail = []
        self._trail_lim = []
        # Next trail position to propagate
        self._qhead = 0
        # Clauses as given, for model checks
        self._problem = []
        self._external_units = []
        self._learnts = []
        self._ok = True
        self._var_inc = 1.0
        self._cla_inc = 1.0
        self._restarts_done = 0
        self._next_restart = self.options.restart_base
        self._reductions_done = 0
        self._next_reduce = self.options.reduce_base
        self._propagator = None
        self._observed = None
        # Trail prefix already passed to the propagator
        self._notified = 0
        for _ in range(num_vars):
            self.add_var()
        self._seed_scores()

    @classmethod
    def from_cnf(cls, cnf, options=None):
        solver = cls(cnf.num_vars, options)
        for clause in cnf.clauses:
            solver.add_clause(clause)
        return solver

    # -- setup ------------------------------------------------------------

    def add_var(self):
        self.num_vars += 1
        self._assigns.append(UNASSIGNED)
        self._level.append(0)
        self._reason.append(None)
        self._polarity.append(False)
        self._activity.append(0.0)
        heapq.heappush(self._heap, (0.0, self.num_vars))
        return self.num_vars

    def set_option(self, name, value):
        self.options = self.options.replace(name, value)
        if name == 'shuffle_seed':
            self._seed_scores()
        elif name == 'restart_base':
            self._next_restart = self.stats.conflicts + value * luby(
                self._restarts_done
            )
        elif name in ('reduce_base', 'reduce_increment'):
            self._next_reduce = self.stats.conflicts + (
                self.options.reduce_base
                + self.options.reduce_increment * self._reductions_done
            )

    def _seed_scores(self):
        seed = self.options.shuffle_seed
        # Seeded random activities shuffle the first decisions
        if seed:
            rng = random.Random(seed)
            for v in range(1, self.num_vars + 1):
                self._activity[v] = rng.random()
        else:
            for v in range(1, self.num_vars + 1):
                self._activity[v] = 0.0
        self._rebuild_heap()

    def attach_propagator(self, propagator):
        self._propagator = propagator
        observed = propagator.observed
        self._observed = None if observed is None else frozenset(observed)
        self._notified = 0

    def _check_lit(self, lit):
        if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
            raise BadLiteral(lit, self.num_vars)

    def add_clause(self, lits):
        """Add a problem clause; the solver backtracks to level 0 first."""
        for lit in lits:
            self._check_lit(lit)
        clause = _normalise(lits)
        if clause is None:
            return
        self._problem.append(clause)
        if not self._ok:
            return
        self._cancel_until(0)
        value = self._value
        if any(value(lit) == TRUE for lit in clause):
            return
        # Literals false at level 0 are dropped
        live = [lit for lit in clause if value(lit) == UNASSIGNED]
        if not live:
            self._ok = False
        elif len(live) == 1:
            self._enqueue(live[0], None)
        else:
            self._attach(Clause(live))

    # -- assignment -------------------------------------------------------

    def _value(self, lit):
        value = self._assigns[lit if lit > 0 else -lit]
        return value if lit > 0 else -value

    def _decision_level(self):
        return len(self._trail_lim)

    def _enqueue(self, lit, reason):
        v = lit if lit > 0 else -lit
        self._assigns[v] = TRUE if lit > 0 else FALSE
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(lit)

    def _new_level(self):
        self._trail_lim.append(len(self._trail))
        if self._propagator is not None:
            self._propagator.on_new_level()

    def _cancel_until(self, level):
        if self._decision_level() <= level:
            return
        start = self._trail_lim[level]
        # Unassign, keep the phase and put the variable back on the heap
        for lit in reversed(self._trail[start:]):
            v = lit if lit > 0 else -lit
            self._assigns[v] = UNASSIGNED
            self._reason[v] = None
            self._polarity[v] = lit > 0
            heapq.heappush(self._heap, (-self._activity[v], v))
        del self._trail[start:]
        del self._trail_lim[level:]
        self._qhead = len(self._trail)
        self._notified = min(self._notified, len(self._trail))
        if self._propagator is not None:
            self._propagator.on_backtrack(level)

    def _attach(self, clause):
        self._watches[clause.lits[0]].append(clause)
        self._watches[clause.lits[1]].append(clause)

    # -- propagation ------------------------------------------------------

    def _propagate(self):
        """Run unit propagation; returns a conflicting clause or None."""
        trail = self._trail
        watches = self._watches
        value = self._value
        while self._qhead < len(trail):
            false_lit = -trail[self._qhead]
            self._qhead += 1
            self.stats.propagations += 1
            watching = watches[false_lit]
            kept = []
            conflict = None
            for index, clause in enumerate(watching):
                if clause.deleted:
                    continue
                lits = clause.lits
                # Keep the falsified watch in position 1
                if lits[0] == false_lit:
                    lits[0], lits[1] = lits[1], false_lit
                first = lits[0]
                if value(first) == TRUE:
                    kept.append(clause)
                    continue
                # Look for a new literal to watch
                for m in range(2, len(lits)):
                    if value(lits[m]) != FALSE:
                        lits[1], lits[m] = lits[m], false_lit
                        watches[lits[1]].append(clause)
                        break
                # None found: the clause is unit or conflicting
                else:
                    kept.append(clause)
                    if value(first) == FALSE:
                        conflict = clause
                        kept.extend(
                            c for c in watching[index + 1:] if not c.deleted
                        )
                        break
                    self._enqueue(first, clause)
            watches[false_lit] = kept
            if conflict is not None:
                self._qhead = len(trail)
                return conflict
        return None

    def _check_watches(self):
        value = self._value
        for lits in self._watched_clauses():
            ends = (value(lits[0]), value(lits[1]))
            if FALSE in ends and TRUE not in ends:
                raise SatEngineError(f'Watch invariant broken on {lits}')

    def _watched_clauses(self):
        seen = set()
        for clauses in self._watches.values():
            for clause in clauses:
                if not clause.deleted and id(clause) not in seen:
                    seen.add(id(clause))
                    yield clause.lits

    # -- conflicts --------------------------------------------------------

    def _analyze(self, conflict):
        """First-UIP clause; returns (lits, backtrack level, lbd)."""
        level = self._level
        reason = self._reason
        trail = self._trail
        current = self._decision_level()
        seen = set()
        learnt = [None]
        pending = 0
        p = None
        index = len(trail) - 1
        clause = conflict
        while True:
            if clause.learnt or clause.external:
                self._bump_clause(clause)
            for q in clause.lits:
                if q == p:
                    continue
                v = q if q > 0 else -q
                if v in seen or level[v] == 0:
                    continue
                seen.add(v)
                self._bump_var(v)
                if level[v] >= current:
                    pending += 1
                else:
                    learnt.append(q)
            # Walk back to the next marked literal on the trail
            while abs(trail[index]) not in seen:
                index -= 1
            p = trail[index]
            index -= 1
            pending -= 1
            if pending == 0:
                break
            clause = reason[abs(p)]
        learnt[0] = -p

        # Drop literals implied by the rest of the clause
        kept = [learnt[0]]
        for q in learnt[1:]:
            why = reason[abs(q)]
            if why is None or any(
                abs(x) not in seen and level[abs(x)] > 0
                for x in why.lits if x != -q
            ):
                kept.append(q)
        learnt = kept

        if len(learnt) == 1:
            return learnt, 0, 1
        # Second watch goes to the highest remaining level
        top = max(range(1, len(learnt)), key=lambda i: level[abs(learnt[i])])
        learnt[1], learnt[top] = learnt[top], learnt[1]
        lbd = len({level[abs(q)] for q in learnt})
        return learnt, level[abs(learnt[1])], lbd

    def _learn(self, conflict):
        """Analyze, backtrack and assert; False when the formula is UNSAT."""
        if self._decision_level() == 0:
            self._ok = False
            return False
        learnt, back_to, lbd = self._analyze(conflict)
        self._cancel_until(back_to)
        if len(learnt) == 1:
            self._enqueue(learnt[0], None)
        else:
            clause = Clause(learnt, learnt=True, lbd=lbd)
            self._attach(clause)
            self._learnts.append(clause)
            self._bump_clause(clause)
            self._enqueue(learnt[0], clause)
        self.stats.learned += 1
        self.stats.peak_learned = max(
            self.stats.peak_learned, len(self._learnts)
        )
        self._decay()
        return True

    def _install_external(self, external):
        """Add a propagator clause; False when the formula is UNSAT."""
        if not isinstance(external, ExternalClause):
            external = ExternalClause(tuple(external))
        for lit in external.lits:
            if not isinstance(lit, int) or lit == 0 \
                    or abs(lit) > self.num_vars:
                raise PropagatorClauseOutOfRange(external.lits,
                                                 self.num_vars)
        self.stats.external_clauses_added += 1
        lits = _normalise(external.lits)
        if lits is None:
            return True
        if not lits:
            self._ok = False
            return False

        value = self._value
        level = self._level
        # Units go to level 0 and stay for the rest of the run
        if len(lits) == 1:
            self._external_units.append(lits[0])
            self._cancel_until(0)
            if value(lits[0]) == FALSE:
                self._ok = False
                return False
            if value(lits[0]) == UNASSIGNED:
                self._enqueue(lits[0], None)
            return True

        # Non-false literals first, then false ones by decreasing level
        lits.sort(key=lambda q: (
            value(q) == FALSE, -level[abs(q)] if value(q) == FALSE else 0
        ))
        assigned_levels = {level[abs(q)] for q in lits
                           if value(q) != UNASSIGNED}
        clause = Clause(
            lits,
            external=True,
            forgettable=(external.forgettable and
                         self.options.external_retention == 'forgettable'),
            lbd=len(assigned_levels) or len(lits),
        )
        self._attach(clause)
        self._learnts.append(clause)
        self.stats.peak_learned = max(
            self.stats.peak_learned, len(self._learnts)
        )

        first, second = value(lits[0]), value(lits[1])
        # Falsified on arrival: treat it as a conflict and learn from it
        if first == FALSE:
            self.stats.external_conflicts += 1
            top = level[abs(lits[0])]
            if top == 0:
                self._ok = False
                return False
            self._cancel_until(top)
            return self._learn(clause)
        # Unit under the trail: assert the remaining literal
        if second == FALSE and (
            first == UNASSIGNED
            or level[abs(lits[0])] > level[abs(lits[1])]
        ):
            self._cancel_until(level[abs(lits[1])])
            self._enqueue(lits[0], clause)
        return True

    # -- heuristics -------------------------------------------------------

    def _bump_var(self, v):
        self._activity[v] += self._var_inc
        if self._activity[v] > RESCALE_LIMIT:
            for u in range(1, self.num_vars + 1):
                self._activity[u] *= 1 / RESCALE_LIMIT
            self._var_inc *= 1 / RESCALE_LIMIT
            self._rebuild_heap()
        else:
            heapq.heappush(self._heap, (-self._activity[v], v))

    def _bump_clause(self, clause):
        clause.activity += self._cla_inc
        if clause.activity > RESCALE_LIMIT:
            for c in self._learnts:
                c.activity *= 1 / RESCALE_LIMIT
            self._cla_inc *= 1 / RESCALE_LIMIT

    def _decay(self):
        self._var_inc /= self.options.var_decay
        self._cla_inc /= 0.999

    def _rebuild_heap(self):
        self._heap = [
            (-self._activity[v], v) for v in range(1, self.num_vars + 1)
            if self._assigns[v] == UNASSIGNED
        ]
        heapq.heapify(self._heap)

    def _pick_branch(self):
        if len(self._heap) > 4 * self.num_vars + 1024:
            self._rebuild_heap()
        heap = self._heap
        while heap:
            score, v = heapq.heappop(heap)
            if self._assigns[v] == UNASSIGNED and -score == self._activity[v]:
                return v if self._polarity[v] else -v
        return None

    def _restart(self):
        self.stats.restarts += 1
        self._restarts_done += 1
        self._next_restart = self.stats.conflicts + (
            self.options.restart_base * luby(self._restarts_done)
        )
        logger.debug('restart %d at %d conflicts',
                     self.stats.restarts, self.stats.conflicts)
        self._cancel_until(0)

    def _locked(self, clause):
        return self._reason[abs(clause.lits[0])] is clause

    def _reduce(self):
        keep_lbd = self.options.keep_lbd
        candidates = [
            c for c in self._learnts
            if (c.learnt or c.forgettable) and len(c.lits) > 2
            and c.lbd > keep_lbd and not self._locked(c)
        ]
        # Worst half by LBD then activity goes
        candidates.sort(key=lambda c: (c.lbd, -c.activity))
        for clause in candidates[len(candidates) // 2:]:
            clause.deleted = True
        before = len(self._learnts)
        self._learnts = [c for c in self._learnts if not c.deleted]
        self.stats.reductions += 1
        self._reductions_done += 1
        self._next_reduce = self.stats.conflicts + (
            self.options.reduce_base
            + self.options.reduce_increment * self._reductions_done
        )
        logger.debug('reduction %d: %d -> %d clauses',
                     self.stats.reductions, before, len(self._learnts))

    # -- propagator plumbing ----------------------------------------------

    def _notify_assignments(self):
        trail = self._trail
        observed = self._observed
        propagator = self._propagator
        for lit in trail[self._notified:]:
            if observed is None or abs(lit) in observed:
                propagator.on_assign(lit)
        self._notified = len(trail)

    def _model(self):
        return (False,) + tuple(
            self._assigns[v] == TRUE for v in range(1, self.num_vars + 1)
        )

    def _verify(self, model):
        held = [c.lits for c in self._learnts
                if c.external and not c.deleted]
        held.extend((lit,) for lit in self._external_units)
        for clause in self._problem + held:
            if not any(model[abs(lit)] == (lit > 0) for lit in clause):
                raise ModelCheckFailed(f'Model falsifies {tuple(clause)}')

    # -- search -----------------------------------------------------------

    def solve(self, assumptions=(), limits=None):
        limits = limits or Limits()
        assumptions = list(assumptions)
        for lit in assumptions:
            self._check_lit(lit)
        started = time.perf_counter()
        deadline = (started + limits.seconds
                    if limits.seconds is not None else None)
        self.stats.decision_log = []
        self._cancel_until(0)
        status, model, under = self._search(assumptions, limits, deadline)
        result = SolveResult(
            status=status,
            stats=self.stats.snapshot(),
            model=model,
            under_assumptions=under,
            seconds=time.perf_counter() - started,
        )
        logger.debug('solve finished: %s', result.stats_line())
        return result

    def _search(self, assumptions, limits, deadline):
        if not self._ok:
            return Status.UNSAT, None, False
        stats = self.stats
        options = self.options
        propagator = self._propagator
        conflicts_at_start = stats.conflicts + stats.external_conflicts
        while True:
            conflict = self._propagate()
            if conflict is not None:
                stats.conflicts += 1
                if not self._learn(conflict):
                    return Status.UNSAT, None, False
                if stats.conflicts >= self._next_reduce:
                    self._reduce()
                if stats.conflicts >= self._next_restart:
                    self._restart()
                continue

            if options.check_watches:
                self._check_watches()
            # Propagation fixpoint: let the propagator look at it
            if propagator is not None:
                self._notify_assignments()
                if propagator.should_terminate():
                    return Status.TERMINATED, None, False
                if propagator.has_external_clause():
                    external = propagator.fetch_external_clause()
                    if external is not None:
                        if not self._install_external(external):
                            return Status.UNSAT, None, False
                        continue

            # Limits are only checked at fixpoints
            spent = stats.conflicts + stats.external_conflicts
            if limits.conflicts is not None and \
                    spent - conflicts_at_start >= limits.conflicts:
                return Status.BUDGET, None, False
            if deadline is not None and time.perf_counter() > deadline:
                return Status.TIMEOUT, None, False

            # Assumptions are decided first, one level each
            decision = None
            while self._decision_level() < len(assumptions):
                lit = assumptions[self._decision_level()]
                if self._value(lit) == TRUE:
                    self._new_level()
                elif self._value(lit) == FALSE:
                    return Status.UNSAT, None, True
                else:
                    decision = lit
                    break
            if decision is None:
                decision = self._pick_branch()
            # Nothing left to decide: a full model
            if decision is None:
                model = self._model()
                if propagator is not None:
                    verdict = propagator.on_solution_check(model)
                    if verdict is not None:
                        if not self._install_external(verdict):
                            return Status.UNSAT, None, False
                        continue
                if options.verify_models:
                    self._verify(model)
                return Status.SAT, model, False

            stats.decisions += 1
            if len(stats.decision_log) < options.decision_log_limit:
                stats.decision_log.append(decision)
            self._new_level()
            self._enqueue(decision, None)


def _normalise(lits):
    """Deduplicated list, or None for a tautology."""
    clause = []
    seen = set()
    for lit in lits:
        if -lit in seen:
            return None
        if lit not in seen:
            seen.add(lit)
            clause.append(lit)
    return clause
