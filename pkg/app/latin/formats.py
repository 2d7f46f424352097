"""
Text formats for squares, colouring sidecars and transversal listings.
"""
from latin.squares import (
    Cell,
    LatinError,
    Transversal,
    validate_square,
)


class FormatError(LatinError):
    """Malformed square, colouring or decomposition text."""


def _content_lines(text):
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith('#'):
            yield line


def _read_header(lines):
    try:
        header = next(lines)
    except StopIteration:
        raise FormatError('Empty input') from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != 'order' or not parts[1].isdigit():
        raise FormatError(f'Expected "order n" header, got {header!r}')
    return int(parts[1])


def parse_square(text):
    """Read 'order n' then n rows of whitespace separated symbols."""
    lines = _content_lines(text)
    n = _read_header(lines)
    grid = []
    for line in lines:
        try:
            grid.append([int(tok) for tok in line.split()])
        except ValueError:
            raise FormatError(f'Non-integer symbol in row {line!r}') from None
    if len(grid) != n:
        raise FormatError(f'Header says order {n}, found {len(grid)} rows')
    return validate_square(grid)


def format_square(square):
    return f'order {square.order}\n{square}\n'


def read_square(path):
    with open(path) as f:
        return parse_square(f.read())


def write_square(path, square):
    with open(path, 'w') as f:
        f.write(format_square(square))


def parse_dark_cells(text):
    """Read one 'row col' pair per line."""
    cells = []
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f'Expected "row col", got {line!r}')
        try:
            cells.append(Cell(int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f'Expected integers, got {line!r}') from None
    return cells


def format_dark_cells(colouring):
    return ''.join(f'{c.row} {c.col}\n' for c in sorted(colouring.dark))


def read_dark_cells(path):
    with open(path) as f:
        return parse_dark_cells(f.read())


def parse_decomposition(text):
    """Read 'order n' then one line of 'row,col' pairs per transversal."""
    lines = _content_lines(text)
    n = _read_header(lines)
    family = []
    for line in lines:
        cells = []
        for tok in line.split():
            row, sep, col = tok.partition(',')
            if not sep or not row.isdigit() or not col.isdigit():
                raise FormatError(f'Expected "row,col", got {tok!r}')
            cells.append(Cell(int(row), int(col)))
        family.append(Transversal.of(n, cells))
    return n, family


def format_decomposition(order, family):
    lines = [f'order {order}']
    for t in family:
        lines.append(' '.join(f'{c.row},{c.col}' for c in t))
    return '\n'.join(lines) + '\n'


def read_decomposition(path):
    with open(path) as f:
        return parse_decomposition(f.read())


def write_decomposition(path, order, family):
    with open(path, 'w') as f:
        f.write(format_decomposition(order, family))
