"""
Dancing-links search over A x = b, 0 <= x <= u.

Each row keeps a doubly linked list of its admissible columns. A column
is admissible while it is below its bound, every row it touches still
has positive residual demand, and no earlier sibling branch has closed
it. Branching picks the open row with the fewest admissible columns
(lowest index on ties) and tries its columns in ascending order: raise
the column by one and recurse, then close it at its current value for
the remaining siblings. Every solution is reached exactly once.
"""
import itertools
import logging

from exactcover.system import Solution, SolveControl, SolveStats


logger = logging.getLogger(__name__)


class _Stop(Exception):
    pass


class DancingLinks:
    """Search state for one solve over a frozen system."""

    def __init__(self, system):
        self.system = system
        m, n = system.num_rows, system.num_cols
        self.bounds = system.bounds
        self.supports = system.supports
        self.x = [0] * n
        self.residual = list(system.rhs)
        self.open_rows = m
        self.hidden = [False] * n
        self.free_cols = tuple(c for c in range(n) if not system.supports[c])

        # Node i < m is the header of row i; entries follow in row order
        self.left = list(range(m))
        self.right = list(range(m))
        self.node_row = list(range(m))
        self.node_col = [-1] * m
        self.col_nodes = [[] for _ in range(n)]
        self.count = [0] * m
        self.capacity = [0] * m
        for row, cols in enumerate(system.row_members()):
            for col in cols:
                node = len(self.left)
                last = self.left[row]
                self.left.append(last)
                self.right.append(row)
                self.right[last] = node
                self.left[row] = node
                self.node_row.append(row)
                self.node_col.append(col)
                self.col_nodes[col].append(node)
                self.count[row] += 1
                self.capacity[row] += self.bounds[col]
        self.trail = []

    def _hide(self, col):
        self.hidden[col] = True
        slack = self.bounds[col] - self.x[col]
        left, right = self.left, self.right
        for node in self.col_nodes[col]:
            right[left[node]] = right[node]
            left[right[node]] = left[node]
            row = self.node_row[node]
            self.count[row] -= 1
            self.capacity[row] -= slack

    def _unhide(self, col):
        slack = self.bounds[col] - self.x[col]
        left, right = self.left, self.right
        for node in reversed(self.col_nodes[col]):
            right[left[node]] = node
            left[right[node]] = node
            row = self.node_row[node]
            self.count[row] += 1
            self.capacity[row] += slack
        self.hidden[col] = False

    def _row_columns(self, row):
        cols = []
        node = self.right[row]
        while node != row:
            cols.append(self.node_col[node])
            node = self.right[node]
        return cols

    def _raise(self, col):
        """x[col] += 1; returns the trail mark for _lower()."""
        self.x[col] += 1
        for row in self.supports[col]:
            self.residual[row] -= 1
            self.capacity[row] -= 1
            if self.residual[row] == 0:
                self.open_rows -= 1
        mark = len(self.trail)
        for row in self.supports[col]:
            if self.residual[row] == 0:
                for other in self._row_columns(row):
                    self._hide(other)
                    self.trail.append(other)
        if self.x[col] == self.bounds[col] and not self.hidden[col]:
            self._hide(col)
            self.trail.append(col)
        return mark

    def _lower(self, col, mark):
        while len(self.trail) > mark:
            self._unhide(self.trail.pop())
        for row in self.supports[col]:
            if self.residual[row] == 0:
                self.open_rows += 1
            self.residual[row] += 1
            self.capacity[row] += 1
        self.x[col] -= 1

    def _choose_row(self):
        """Open row with fewest admissible columns, or -1 on a dead end."""
        best = -1
        for row, residual in enumerate(self.residual):
            if residual == 0:
                continue
            if self.capacity[row] < residual:
                return -1
            if best < 0 or self.count[row] < self.count[best]:
                best = row
        return best

    def run(self, control, emit, stats, verify=False):
        self.control = control
        self.emit = emit
        self.stats = stats
        self.verify = verify
        try:
            self._search()
        except _Stop:
            return
        stats.complete = True

    def _emit_all(self):
        ranges = [range(self.bounds[c] + 1) for c in self.free_cols]
        for values in itertools.product(*ranges):
            x = list(self.x)
            for col, value in zip(self.free_cols, values):
                x[col] = value
            solution = Solution(tuple(x))
            if self.verify:
                assert self.system.is_solution(solution.x), solution
            self.stats.solutions += 1
            keep_going = self.emit(solution)
            cap = self.control.max_solutions
            if keep_going is False or (cap and self.stats.solutions >= cap):
                raise _Stop()

    def _search(self):
        self.stats.nodes += 1
        budget = self.control.node_budget
        if budget is not None and self.stats.nodes > budget:
            self.stats.exhausted = True
            raise _Stop()

        if self.open_rows == 0:
            self._emit_all()
            return

        row = self._choose_row()
        if row < 0:
            return
        closed = []
        for col in self._row_columns(row):
            mark = self._raise(col)
            self._search()
            self._lower(col, mark)
            self._hide(col)
            closed.append(col)
            if self.capacity[row] < self.residual[row]:
                break
        for col in reversed(closed):
            self._unhide(col)


def solve_all(system, control=None, emit=None, verify=False):
    """Stream every solution to emit; returns SolveStats.

    emit may return False to stop. Budget exhaustion is reported in the
    stats, never raised.
    """
    control = control or SolveControl()
    emit = emit or (lambda solution: None)
    stats = SolveStats()
    DancingLinks(system).run(control, emit, stats, verify=verify)
    logger.debug(
        'exact cover %dx%d: %d solutions, %d nodes, complete=%s',
        system.num_rows, system.num_cols, stats.solutions, stats.nodes,
        stats.complete,
    )
    return stats


def solve_first(system, control=None, verify=False):
    """First solution found, or None."""
    budget = control.node_budget if control else None
    found = []
    solve_all(
        system,
        SolveControl(max_solutions=1, node_budget=budget),
        found.append,
        verify=verify,
    )
    return found[0] if found else None
