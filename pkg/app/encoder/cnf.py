"""
Clauses, formulas and the variable layout of Latin square instances.
"""
from latin.squares import Cell, validate_square


class EncodingError(ValueError):
    """Base error for CNF construction."""


class BadClause(EncodingError):
    def __init__(self, lits, reason):
        self.lits = tuple(lits)
        super().__init__(f'Bad clause {self.lits}: {reason}')


class DecodeError(EncodingError):
    """A model does not describe a square."""


class Cnf:
    """Clause list over variables 1..num_vars, kept in insertion order."""

    def __init__(self, num_vars=0, metadata=None):
        self.num_vars = num_vars
        self.clauses = []
        self.metadata = dict(metadata or {})

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def new_var(self):
        self.num_vars += 1
        return self.num_vars

    def new_vars(self, count):
        first = self.num_vars + 1
        self.num_vars += count
        return list(range(first, first + count))

    def add_clause(self, lits):
        """Append a normalised copy of lits.

        Repeated literals are merged; a clause holding x and -x is
        always true and is skipped. Returns whether a clause was added.
        """
        clause = []
        seen = set()
        for lit in lits:
            lit = int(lit)
            if lit == 0 or abs(lit) > self.num_vars:
                raise BadClause(lits, f'literal {lit} out of range')
            if -lit in seen:
                return False
            if lit not in seen:
                seen.add(lit)
                clause.append(lit)
        if not clause:
            raise BadClause(lits, 'empty clause')
        self.clauses.append(tuple(clause))
        return True

    def extend(self, clauses):
        for clause in clauses:
            self.add_clause(clause)
        return self

    def satisfied_by(self, model):
        """model[v] is the value of variable v (index 0 unused)."""
        return all(
            any(model[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


SQUARE_IDS = ('P', 'R', 'Q')


class VariableMap:
    """Numbering of the square variables S_{i,j,k}.

    Declared squares occupy consecutive blocks of n^3 variables in the
    order P, R, Q; auxiliaries are allocated above the last block.
    Myrvold indicators are registered by name as they are created.
    """

    def __init__(self, order, squares=('P',)):
        unknown = set(squares) - set(SQUARE_IDS)
        if unknown:
            raise EncodingError(f'Unknown square ids {sorted(unknown)}')
        self.order = order
        self.squares = tuple(s for s in SQUARE_IDS if s in squares)
        block = order ** 3
        self.offsets = {s: b * block for b, s in enumerate(self.squares)}
        self.num_square_vars = block * len(self.squares)
        self.dark = {}
        self.white = {}

    def var(self, square, i, j, k):
        n = self.order
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise EncodingError(f'Index {(i, j, k)} outside order {n}')
        try:
            offset = self.offsets[square]
        except KeyError:
            raise EncodingError(f'Square {square} not declared') from None
        return offset + i * n * n + j * n + k + 1

    def decode_var(self, var):
        """(square, i, j, k) for a square variable, None for auxiliaries."""
        if not 1 <= var <= self.num_square_vars:
            return None
        n = self.order
        block, rest = divmod(var - 1, n ** 3)
        i, rest = divmod(rest, n * n)
        j, k = divmod(rest, n)
        return self.squares[block], i, j, k

    def square_vars(self, square):
        first = self.offsets[square] + 1
        return range(first, first + self.order ** 3)

    def cell_vars(self, square, i, j):
        return [self.var(square, i, j, k) for k in range(self.order)]

    def new_cnf(self, **metadata):
        metadata.setdefault('order', self.order)
        metadata.setdefault('squares', ''.join(self.squares))
        return Cnf(self.num_square_vars, metadata)

    def sidecar_lines(self):
        n = self.order
        for square in self.squares:
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        yield (f'{square} {i} {j} {k} '
                               f'{self.var(square, i, j, k)}')
        for kind, table in (('dark', self.dark), ('white', self.white)):
            for (square, i, j), var in sorted(table.items()):
                yield f'{kind} {square} {i} {j} {var}'

    def decode_square(self, model, square):
        """The square S read from a model; each cell needs one symbol."""
        n = self.order
        grid = []
        for i in range(n):
            row = []
            for j in range(n):
                symbols = [
                    k for k in range(n) if model[self.var(square, i, j, k)]
                ]
                if len(symbols) != 1:
                    raise DecodeError(
                        f'{square}[{i}][{j}] has symbols {symbols}'
                    )
                row.append(symbols[0])
            grid.append(row)
        return validate_square(grid)

    def decode_dark(self, model, square):
        return frozenset(
            cell for cell, var in self.dark_cells(square) if model[var]
        )

    def dark_cells(self, square):
        return [
            (Cell(i, j), var)
            for (s, i, j), var in sorted(self.dark.items()) if s == square
        ]
