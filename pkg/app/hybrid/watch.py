"""
Completion tracking, square extraction and blocking clauses.
"""
from collections import OrderedDict

from encoder.cnf import DecodeError
from hybrid.config import DecodeInconsistency
from latin.myrvold import colour, MyrvoldError
from latin.squares import Cell, LatinError, validate_square


class SquareWatch:
    """Assigned-true symbols of one square, undone level by level.

    The square is complete when every cell holds a true symbol variable
    and, in Myrvold instances, every dark indicator of the square is
    assigned.
    """

    def __init__(self, varmap, square):
        self.varmap = varmap
        self.square = square
        self.order = varmap.order
        n = self.order
        self._cell_of = {
            varmap.var(square, i, j, k): (Cell(i, j), k)
            for i in range(n) for j in range(n) for k in range(n)
        }
        self._dark_of = {var: cell for cell, var in varmap.dark_cells(square)}
        self.symbols = {}
        self.dark = {}
        self._levels = [[]]
        # Euler-Parker already saw the square as it stands
        self.checked = False

    @property
    def variables(self):
        return set(self._cell_of) | set(self._dark_of)

    @property
    def assigned_true(self):
        return len(self.symbols)

    @property
    def complete(self):
        return (len(self.symbols) == self.order ** 2
                and len(self.dark) == len(self._dark_of))

    def on_new_level(self):
        self._levels.append([])

    def on_assign(self, lit):
        var = abs(lit)
        if var in self._cell_of:
            if lit < 0:
                return
            cell, symbol = self._cell_of[var]
            held = self.symbols.get(cell)
            if held is not None:
                raise DecodeInconsistency(
                    f'{self.square}{cell} holds {held} and {symbol}'
                )
            self.symbols[cell] = symbol
            self._levels[-1].append((self.symbols, cell))
        elif var in self._dark_of:
            cell = self._dark_of[var]
            self.dark[cell] = lit > 0
            self._levels[-1].append((self.dark, cell))

    def on_backtrack(self, new_level):
        for level in self._levels[new_level + 1:]:
            for table, cell in level:
                del table[cell]
        del self._levels[new_level + 1:]
        if not self.complete:
            self.checked = False

    def holds(self, var):
        """Whether var is assigned true in the tracked state."""
        if var in self._cell_of:
            cell, symbol = self._cell_of[var]
            return self.symbols.get(cell) == symbol
        return self.dark.get(self._dark_of.get(var), False)

    def dark_cells(self):
        return frozenset(cell for cell, on in self.dark.items() if on)


def extract_square(watch, model=None):
    """The watched square, from the tracked trail or from a full model."""
    try:
        if model is not None:
            return watch.varmap.decode_square(model, watch.square)
        n = watch.order
        if watch.assigned_true != n * n:
            raise DecodeInconsistency(
                f'{watch.square} has {watch.assigned_true} of {n * n} cells'
            )
        grid = [
            [watch.symbols[Cell(i, j)] for j in range(n)] for i in range(n)
        ]
        return validate_square(grid)
    except (DecodeError, LatinError) as exc:
        raise DecodeInconsistency(str(exc)) from exc


def extract_colouring(watch, square, quota, model=None):
    if model is not None:
        dark = watch.varmap.decode_dark(model, watch.square)
    else:
        dark = watch.dark_cells()
    try:
        return colour(square, dark, quota)
    except MyrvoldError as exc:
        raise DecodeInconsistency(str(exc)) from exc


def blocking_clause(square, varmap, square_id, dark_cells=()):
    """Negated true literals of the upper-left (n-1) x (n-1) block.

    The last row and column follow from the rest, so the clause excludes
    exactly this square. Dark cells add their negated indicators.
    """
    n = square.order
    lits = [
        -varmap.var(square_id, i, j, square[i, j])
        for i in range(n - 1) for j in range(n - 1)
    ]
    lits.extend(
        -varmap.dark[(square_id, cell.row, cell.col)]
        for cell in sorted(dark_cells)
    )
    return tuple(lits)


class BlockedMemo:
    """Least recently used set of blocked square keys."""

    def __init__(self, maxsize):
        self.maxsize = maxsize
        self._keys = OrderedDict()
        self.repeats = 0

    def __len__(self):
        return len(self._keys)

    def __contains__(self, key):
        return key in self._keys

    def add(self, key):
        """Remember key; returns whether it was already present."""
        if key in self._keys:
            self._keys.move_to_end(key)
            self.repeats += 1
            return True
        self._keys[key] = None
        if len(self._keys) > self.maxsize:
            self._keys.popitem(last=False)
        return False
