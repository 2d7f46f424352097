"""
Text format for systems:

    M N
    r c          (one line per nonzero entry)
    rhs b_0 ... b_{M-1}
    bounds u_0 ... u_{N-1}
"""
from exactcover.system import ExactCoverError, build_system


def parse_system(text):
    lines = [
        line.split('#', 1)[0].strip() for line in text.splitlines()
    ]
    lines = [line for line in lines if line]
    if not lines:
        raise ExactCoverError('Empty system text')
    try:
        rows, cols = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise ExactCoverError(
            f'Expected "M N" header, got {lines[0]!r}'
        ) from None

    builder = build_system(rows, cols)
    for line in lines[1:]:
        head, *rest = line.split()
        try:
            if head == 'rhs':
                if len(rest) != rows:
                    raise ExactCoverError(f'rhs needs {rows} values')
                for row, value in enumerate(rest):
                    builder.set_rhs(row, int(value))
            elif head == 'bounds':
                if len(rest) != cols:
                    raise ExactCoverError(f'bounds needs {cols} values')
                for col, value in enumerate(rest):
                    builder.set_bound(col, int(value))
            elif len(rest) == 1:
                builder.add_entry(int(head), int(rest[0]))
            else:
                raise ExactCoverError(f'Unrecognised line {line!r}')
        except ValueError as exc:
            if isinstance(exc, ExactCoverError):
                raise
            raise ExactCoverError(f'Bad number in {line!r}') from exc
    return builder.freeze()


def format_system(system):
    lines = [f'{system.num_rows} {system.num_cols}']
    entries = sorted(
        (row, col)
        for col, support in enumerate(system.supports)
        for row in support
    )
    lines.extend(f'{row} {col}' for row, col in entries)
    lines.append('rhs ' + ' '.join(str(b) for b in system.rhs))
    lines.append('bounds ' + ' '.join(str(u) for u in system.bounds))
    return '\n'.join(lines) + '\n'


def read_system(path):
    with open(path) as f:
        return parse_system(f.read())


def write_system(path, system):
    with open(path, 'w') as f:
        f.write(format_system(system))
