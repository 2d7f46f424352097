"""
Two-stage Euler-Parker mate search.

Stage 1 lists every transversal of a square as the solutions of a
3n x n^2 exact cover system (one variable per cell; one equation per
row, column and symbol). Stage 2 picks n pairwise disjoint transversals
as a solution of an n^2-equation system with one variable per
transversal, plus any extra cardinality equations.
"""
import enum
import logging
import time
from dataclasses import dataclass, field

from exactcover.dlx import solve_all
from exactcover.system import build_system, SolveControl
from latin.squares import Cell, mate_from_transversals, Transversal


logger = logging.getLogger(__name__)


class BudgetExhausted(Exception):
    """An exact cover stage hit its node budget before finishing."""

    def __init__(self, stage, nodes):
        self.stage, self.nodes = stage, nodes
        super().__init__(f'Stage {stage} ran out of nodes after {nodes}')


class Status(enum.Enum):
    NO_MATE_FEW_TRANSVERSALS = 'no-mate-few-transversals'
    NO_MATE_NO_DISJOINT_FAMILY = 'no-mate-no-disjoint-family'
    MATE = 'mate'


@dataclass(frozen=True)
class TransversalSet:
    order: int
    transversals: tuple
    nodes: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.transversals)

    def __iter__(self):
        return iter(self.transversals)

    def __getitem__(self, index):
        return self.transversals[index]

    def subset(self, indices):
        return TransversalSet(
            self.order, tuple(self.transversals[i] for i in indices)
        )


@dataclass(frozen=True)
class CardinalityEquation:
    """sum of x_t over members == required; members index the set."""
    members: tuple
    required: int
    label: str = ''


@dataclass(frozen=True)
class Stage2Constraints:
    profile: object = None
    colouring: object = None
    # Per-transversal frozensets of class labels; stage 2 runs per label
    omega_labels: tuple = None
    equations: tuple = ()


@dataclass
class EpStats:
    stage1_time: float = 0.0
    stage2_time: float = 0.0
    transversal_count: int = 0
    stage1_nodes: int = 0
    stage2_nodes: int = 0
    # Stage 2 finished its search or was skipped as infeasible
    exhaustive: bool = False


@dataclass(frozen=True)
class EpOutcome:
    status: Status
    stats: EpStats
    mate: object = None
    transversals: tuple = ()

    @property
    def has_mate(self):
        return self.status is Status.MATE


def stage_one_system(square):
    n = square.order
    builder = build_system(3 * n, n * n)
    for cell in square.cells():
        col = cell.row * n + cell.col
        builder.add_entry(cell.row, col)
        builder.add_entry(n + cell.col, col)
        builder.add_entry(2 * n + square[cell], col)
    return builder.freeze()


def enumerate_transversals(square, budget=None):
    """Every transversal of the square, in the solver's emission order."""
    n = square.order
    found = []

    def emit(solution):
        found.append(Transversal(n, tuple(
            Cell(*divmod(col, n)) for col in solution.selected
        )))

    control = SolveControl(node_budget=budget.node_budget if budget else None)
    stats = solve_all(stage_one_system(square), control, emit)
    if stats.exhausted:
        raise BudgetExhausted(1, stats.nodes)
    return TransversalSet(n, tuple(found), nodes=stats.nodes)


def _stage_two_system(ts, equations):
    n = ts.order
    builder = build_system(n * n + len(equations), len(ts))
    for k, t in enumerate(ts):
        for cell in t:
            builder.add_entry(cell.row * n + cell.col, k)
    for e, equation in enumerate(equations):
        row = n * n + e
        for k in equation.members:
            builder.add_entry(row, k)
        builder.set_rhs(row, equation.required)
    return builder.freeze()


def _prepare(ts, equations):
    """Drop members of zero-count equations and reindex the rest.

    Returns (kept indices, reindexed equations), or None when some
    equation demands more members than it has.
    """
    banned = set()
    for equation in equations:
        if equation.required == 0:
            banned.update(equation.members)
    kept = [k for k in range(len(ts)) if k not in banned]
    index = {k: i for i, k in enumerate(kept)}
    prepared = []
    for equation in equations:
        if equation.required == 0:
            continue
        members = tuple(index[k] for k in equation.members if k in index)
        if len(members) < equation.required:
            return None
        prepared.append(
            CardinalityEquation(members, equation.required, equation.label)
        )
    return kept, tuple(prepared)


def _classes(ts, extra):
    """(label, indices) for each class stage 2 runs on."""
    if extra is None or extra.omega_labels is None:
        return [('all', list(range(len(ts))))]
    labels = sorted({lab for labs in extra.omega_labels for lab in labs})
    return [
        (label, [k for k, labs in enumerate(extra.omega_labels)
                 if label in labs])
        for label in labels
    ]


def _restrict(equations, indices):
    position = {k: i for i, k in enumerate(indices)}
    return tuple(
        CardinalityEquation(
            tuple(position[k] for k in eq.members if k in position),
            eq.required,
            eq.label,
        )
        for eq in equations
    )


def _disjoint_families(square, ts, extra, budget, stats, first_only):
    """Yield disjoint families; fills the stage 2 fields of stats."""
    n = square.order
    equations = extra.equations if extra else ()
    stats.exhaustive = False
    for label, indices in _classes(ts, extra):
        subset = ts.subset(indices)
        prepared = _prepare(subset, _restrict(equations, indices))
        if prepared is None:
            logger.debug('class %s: an equation cannot be met', label)
            continue
        kept, class_equations = prepared
        if len(kept) < n:
            continue
        candidates = subset.subset(kept)
        system = _stage_two_system(candidates, class_equations)
        found = []
        control = SolveControl(
            max_solutions=1 if first_only else None,
            node_budget=budget.node_budget if budget else None,
        )
        started = time.perf_counter()
        result = solve_all(system, control, found.append)
        stats.stage2_time += time.perf_counter() - started
        stats.stage2_nodes += result.nodes
        if result.exhausted:
            raise BudgetExhausted(2, stats.stage2_nodes)
        for solution in found:
            yield tuple(candidates[k] for k in solution.selected)
        if first_only and found:
            return
    stats.exhaustive = True


def find_disjoint_family(square, ts, extra=None, budget=None, stats=None):
    """Stage 2: the first n disjoint transversals, mapped to a mate."""
    n = square.order
    stats = stats or EpStats()
    stats.transversal_count = len(ts)
    if len(ts) < n:
        stats.exhaustive = True
        return EpOutcome(Status.NO_MATE_FEW_TRANSVERSALS, stats)

    for family in _disjoint_families(square, ts, extra, budget, stats,
                                     first_only=True):
        mate = mate_from_transversals(square, family)
        return EpOutcome(Status.MATE, stats, mate, family)
    return EpOutcome(Status.NO_MATE_NO_DISJOINT_FAMILY, stats)


def euler_parker(square, extra=None, budget=None):
    """Both stages on one square."""
    stats = EpStats()
    started = time.perf_counter()
    ts = enumerate_transversals(square, budget)
    stats.stage1_time = time.perf_counter() - started
    stats.stage1_nodes = ts.nodes
    outcome = find_disjoint_family(square, ts, extra, budget, stats)
    logger.debug(
        'euler-parker order %d: %d transversals, %s (%.3fs + %.3fs)',
        square.order, len(ts), outcome.status.value,
        stats.stage1_time, stats.stage2_time,
    )
    return outcome


def all_disjoint_families(square, ts, extra=None, budget=None):
    """Every decomposition of the square drawn from ts."""
    if len(ts) < square.order:
        return []
    return list(_disjoint_families(
        square, ts, extra, budget, EpStats(), first_only=False
    ))


def find_all_mates(square, budget=None):
    """All orthogonal mates, one per decomposition (transversal order)."""
    ts = enumerate_transversals(square, budget)
    return [
        mate_from_transversals(square, family)
        for family in all_disjoint_families(square, ts, budget=budget)
    ]
