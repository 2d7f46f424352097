"""
Latin squares, transversals, orthogonality and representation pairs.
"""
import hashlib
import itertools
from dataclasses import dataclass


MAX_ORDER = 32


class LatinError(ValueError):
    """Base error for malformed squares and transversal families."""


class BadShape(LatinError):
    """Grid is not square or its order is out of range."""


class BadSymbol(LatinError):
    """A cell holds something other than a symbol in 0..n-1."""

    def __init__(self, row, col, symbol):
        self.row, self.col, self.symbol = row, col, symbol
        super().__init__(
            f'Cell ({row},{col}) holds {symbol!r}, not a symbol in range'
        )


class DuplicateInRow(LatinError):
    def __init__(self, row, symbol):
        self.row, self.symbol = row, symbol
        super().__init__(f'Symbol {symbol} repeats in row {row}')


class DuplicateInCol(LatinError):
    def __init__(self, col, symbol):
        self.col, self.symbol = col, symbol
        super().__init__(f'Symbol {symbol} repeats in column {col}')


class OrderMismatch(LatinError):
    def __init__(self, left, right):
        self.left, self.right = left, right
        super().__init__(f'Orders differ: {left} != {right}')


class NotATransversal(LatinError):
    """Cells do not pick one cell per row, column and symbol."""


class NotDisjoint(LatinError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f'Cell {cell} belongs to more than one transversal')


class NotCovering(LatinError):
    def __init__(self, missing):
        self.missing = missing
        super().__init__(f'{missing} cells are not covered by the family')


@dataclass(frozen=True, order=True)
class Cell:
    """A (row, col) position; bounds are checked against an order at use."""
    row: int
    col: int

    def in_bounds(self, order):
        return 0 <= self.row < order and 0 <= self.col < order

    def __str__(self):
        return f'({self.row},{self.col})'


@dataclass(frozen=True)
class Transversal:
    """n cells with pairwise distinct rows and columns, sorted by row."""
    order: int
    cells: tuple

    @classmethod
    def of(cls, order, cells):
        cells = tuple(sorted(
            c if isinstance(c, Cell) else Cell(*c) for c in cells
        ))
        if len(cells) != order:
            raise NotATransversal(
                f'Expected {order} cells, got {len(cells)}'
            )
        if any(not c.in_bounds(order) for c in cells):
            raise NotATransversal('Cell outside the square')
        if len({c.row for c in cells}) != order:
            raise NotATransversal('Two cells share a row')
        if len({c.col for c in cells}) != order:
            raise NotATransversal('Two cells share a column')
        return cls(order, cells)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def col_of_row(self, row):
        return self.cells[row].col

    def cell_in_col(self, col):
        for cell in self.cells:
            if cell.col == col:
                return cell
        raise KeyError(col)


class LatinSquare:
    """An immutable n x n Latin square over symbols 0..n-1."""

    __slots__ = ('_rows',)

    def __init__(self, rows):
        # Callers go through validate_square() or LatinSquare.unchecked()
        object.__setattr__(self, '_rows', rows)

    def __setattr__(self, name, value):
        raise AttributeError('LatinSquare is immutable')

    def __reduce__(self):
        return (LatinSquare, (self._rows,))

    @classmethod
    def unchecked(cls, grid):
        """Wrap a grid without validation (test fixtures)."""
        return cls(tuple(tuple(int(s) for s in row) for row in grid))

    @classmethod
    def cyclic(cls, order):
        return cls(tuple(
            tuple((i + j) % order for j in range(order))
            for i in range(order)
        ))

    @property
    def order(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, index):
        if isinstance(index, Cell):
            return self._rows[index.row][index.col]
        if isinstance(index, tuple):
            i, j = index
            return self._rows[i][j]
        return self._rows[index]

    def cells(self):
        n = self.order
        return (Cell(i, j) for i in range(n) for j in range(n))

    def cells_of(self, symbol):
        return tuple(c for c in self.cells() if self[c] == symbol)

    def digest(self):
        """Stable digest used as a memo key for blocked squares."""
        data = bytes(s for row in self._rows for s in row)
        return hashlib.blake2b(data, digest_size=16).hexdigest()

    def __eq__(self, other):
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f'LatinSquare(order={self.order}, rows={self._rows!r})'

    def __str__(self):
        return '\n'.join(' '.join(str(s) for s in row) for row in self._rows)


def validate_square(grid):
    """Validate a grid and return it as a LatinSquare.

    Rows are scanned top to bottom before columns left to right, so the
    error names the first violated row, else the first violated column.
    """
    rows = [list(row) for row in grid]
    n = len(rows)
    if not 1 <= n <= MAX_ORDER:
        raise BadShape(f'Order {n} outside 1..{MAX_ORDER}')
    if any(len(row) != n for row in rows):
        raise BadShape('Grid is not square')

    for i, row in enumerate(rows):
        for j, symbol in enumerate(row):
            if isinstance(symbol, bool) or not isinstance(symbol, int) \
                    or not 0 <= symbol < n:
                raise BadSymbol(i, j, symbol)

    for i, row in enumerate(rows):
        seen = set()
        for symbol in row:
            if symbol in seen:
                raise DuplicateInRow(i, symbol)
            seen.add(symbol)

    for j in range(n):
        seen = set()
        for i in range(n):
            symbol = rows[i][j]
            if symbol in seen:
                raise DuplicateInCol(j, symbol)
            seen.add(symbol)

    return LatinSquare(tuple(tuple(row) for row in rows))


def is_transversal(square, cells):
    """True iff rows, columns and symbols at the cells are permutations."""
    n = square.order
    cells = [c if isinstance(c, Cell) else Cell(*c) for c in cells]
    if len(cells) != n or any(not c.in_bounds(n) for c in cells):
        return False
    full = set(range(n))
    return (
        {c.row for c in cells} == full
        and {c.col for c in cells} == full
        and {square[c] for c in cells} == full
    )


def _check_orders(a, b):
    if a.order != b.order:
        raise OrderMismatch(a.order, b.order)


def are_orthogonal(a, b):
    """True iff the n^2 overlay pairs of a and b are pairwise distinct."""
    _check_orders(a, b)
    pairs = {(a[c], b[c]) for c in a.cells()}
    return len(pairs) == a.order ** 2


def mate_from_transversals(square, transversals):
    """Build R with R[i][j] = k iff (i, j) lies on transversal k."""
    n = square.order
    transversals = list(transversals)
    if len(transversals) < n:
        raise NotCovering(n * (n - len(transversals)))
    grid = [[None] * n for _ in range(n)]
    for k, t in enumerate(transversals):
        cells = tuple(t)
        if not is_transversal(square, cells):
            raise NotATransversal(f'Family member {k} is not a transversal')
        for cell in cells:
            if grid[cell.row][cell.col] is not None:
                raise NotDisjoint(cell)
            grid[cell.row][cell.col] = k
    missing = sum(1 for row in grid for s in row if s is None)
    if missing:
        raise NotCovering(missing)
    return LatinSquare(tuple(tuple(row) for row in grid))


def _column_positions(p):
    # pos[j][symbol] = row of symbol in column j of p
    n = p.order
    pos = [[0] * n for _ in range(n)]
    for i, row in enumerate(p.rows):
        for j, symbol in enumerate(row):
            pos[j][symbol] = i
    return pos


def trp_row_cells(p, q, r):
    """Cells of p spelled by row r of q, one per column."""
    _check_orders(p, q)
    pos = _column_positions(p)
    return tuple(Cell(pos[j][q[r][j]], j) for j in range(p.order))


def verify_trp(p, q):
    """True iff every row of q represents a transversal of p."""
    _check_orders(p, q)
    n = p.order
    pos = _column_positions(p)
    covered = set()
    for r in range(n):
        cells = [Cell(pos[j][q[r][j]], j) for j in range(n)]
        if len({c.row for c in cells}) != n:
            return False
        covered.update(cells)
    # Coverage follows from q being Latin
    assert len(covered) == n * n
    return True


def decompose_trp(p, q):
    """The n transversals of p represented by the rows of q."""
    if not verify_trp(p, q):
        raise NotATransversal('Rows of q do not represent transversals of p')
    return tuple(
        Transversal.of(p.order, trp_row_cells(p, q, r))
        for r in range(p.order)
    )


def representation_square(p, transversals):
    """Square q whose row r lists p's symbols along transversal r."""
    n = p.order
    grid = []
    for t in transversals:
        grid.append(tuple(p[t.cell_in_col(j)] for j in range(n)))
    return validate_square(grid)


def all_latin_squares(order):
    """Every Latin square of the given order (brute force, order <= 5)."""
    n = order
    grid = [[None] * n for _ in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]

    def fill(pos):
        if pos == n * n:
            yield LatinSquare(tuple(tuple(row) for row in grid))
            return
        i, j = divmod(pos, n)
        for s in range(n):
            if s in row_used[i] or s in col_used[j]:
                continue
            grid[i][j] = s
            row_used[i].add(s)
            col_used[j].add(s)
            yield from fill(pos + 1)
            row_used[i].discard(s)
            col_used[j].discard(s)
        grid[i][j] = None

    yield from fill(0)


def random_latin_square(order, rng):
    """A random Latin square by randomised backtracking (not uniform)."""
    n = order
    grid = [[None] * n for _ in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]

    def fill(pos):
        if pos == n * n:
            return True
        i, j = divmod(pos, n)
        symbols = [s for s in range(n)
                   if s not in row_used[i] and s not in col_used[j]]
        rng.shuffle(symbols)
        for s in symbols:
            grid[i][j] = s
            row_used[i].add(s)
            col_used[j].add(s)
            if fill(pos + 1):
                return True
            row_used[i].discard(s)
            col_used[j].discard(s)
        grid[i][j] = None
        return False

    fill(0)
    return LatinSquare(tuple(tuple(row) for row in grid))


def brute_force_transversals(square):
    """All transversals by trying every column permutation (test oracle)."""
    n = square.order
    found = []
    for perm in itertools.permutations(range(n)):
        if len({square[i][perm[i]] for i in range(n)}) == n:
            found.append(Transversal.of(
                n, [Cell(i, perm[i]) for i in range(n)]
            ))
    return found
