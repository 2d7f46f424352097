"""
0-1 linear Diophantine systems A x = b with 0 <= x <= u.
"""
from dataclasses import dataclass


class ExactCoverError(ValueError):
    """Base error for building or solving systems."""


class IndexOutOfRange(ExactCoverError):
    def __init__(self, kind, index, size):
        self.kind, self.index, self.size = kind, index, size
        super().__init__(f'{kind} index {index} outside 0..{size - 1}')


class DuplicateEntry(ExactCoverError):
    def __init__(self, row, col):
        self.row, self.col = row, col
        super().__init__(f'Entry ({row},{col}) added twice')


class InvalidSystem(ExactCoverError):
    """A right-hand side, bound or cap is not a positive integer."""


@dataclass(frozen=True)
class DiophantineSystem:
    """A frozen system; columns are stored as sorted row supports."""
    num_rows: int
    num_cols: int
    supports: tuple
    rhs: tuple
    bounds: tuple

    def row_members(self):
        """Columns of each row in ascending order."""
        members = [[] for _ in range(self.num_rows)]
        for col, support in enumerate(self.supports):
            for row in support:
                members[row].append(col)
        return tuple(tuple(cols) for cols in members)

    def is_solution(self, x):
        """Independent check of A x = b and the bounds."""
        if len(x) != self.num_cols:
            return False
        if any(not 0 <= v <= u for v, u in zip(x, self.bounds)):
            return False
        totals = [0] * self.num_rows
        for col, value in enumerate(x):
            for row in self.supports[col]:
                totals[row] += value
        return tuple(totals) == self.rhs


class SystemBuilder:
    """Mutable builder returned by build_system(); rhs and bounds default
    to 1, which is plain exact cover."""

    def __init__(self, rows, cols):
        if rows < 0 or cols < 0:
            raise InvalidSystem('Dimensions must be nonnegative')
        self.num_rows = rows
        self.num_cols = cols
        self._supports = [set() for _ in range(cols)]
        self._rhs = [1] * rows
        self._bounds = [1] * cols

    def _check_row(self, row):
        if not 0 <= row < self.num_rows:
            raise IndexOutOfRange('Row', row, self.num_rows)

    def _check_col(self, col):
        if not 0 <= col < self.num_cols:
            raise IndexOutOfRange('Column', col, self.num_cols)

    def add_entry(self, row, col):
        self._check_row(row)
        self._check_col(col)
        if row in self._supports[col]:
            raise DuplicateEntry(row, col)
        self._supports[col].add(row)
        return self

    def set_rhs(self, row, value):
        self._check_row(row)
        if value < 1:
            raise InvalidSystem(f'Right-hand side of row {row} must be >= 1')
        self._rhs[row] = value
        return self

    def set_bound(self, col, value):
        self._check_col(col)
        if value < 1:
            raise InvalidSystem(f'Bound of column {col} must be >= 1')
        self._bounds[col] = value
        return self

    def freeze(self):
        return DiophantineSystem(
            num_rows=self.num_rows,
            num_cols=self.num_cols,
            supports=tuple(tuple(sorted(s)) for s in self._supports),
            rhs=tuple(self._rhs),
            bounds=tuple(self._bounds),
        )


def build_system(rows, cols):
    return SystemBuilder(rows, cols)


@dataclass(frozen=True)
class Solution:
    x: tuple

    @property
    def selected(self):
        """Columns taking a nonzero value."""
        return tuple(c for c, v in enumerate(self.x) if v)


@dataclass(frozen=True)
class SolveControl:
    max_solutions: int = None
    node_budget: int = None

    def __post_init__(self):
        for name in ('max_solutions', 'node_budget'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise InvalidSystem(f'{name} must be positive')


@dataclass
class SolveStats:
    solutions: int = 0
    nodes: int = 0
    # The node budget ran out before the search finished
    exhausted: bool = False
    # Every branch was explored
    complete: bool = False
