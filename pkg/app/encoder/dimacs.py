"""
DIMACS CNF text and the variable map sidecar.
"""
import io

from encoder.cnf import Cnf, EncodingError


class DimacsError(EncodingError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f'DIMACS line {lineno}: {message}')


def emit_dimacs(cnf, sink):
    """Metadata as comment lines, the header, then one clause per line."""
    for key, value in cnf.metadata.items():
        sink.write(f'c {key} {value}\n')
    sink.write(f'p cnf {cnf.num_vars} {len(cnf)}\n')
    for clause in cnf.clauses:
        sink.write(' '.join(map(str, clause)) + ' 0\n')


def format_dimacs(cnf):
    sink = io.StringIO()
    emit_dimacs(cnf, sink)
    return sink.getvalue()


def parse_dimacs(text):
    """Read DIMACS back; clauses may span lines and end at each 0."""
    cnf = None
    declared = read = 0
    pending = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('%'):
            continue
        if line.startswith('c'):
            if cnf is None:
                parts = line.split(None, 2)
                if len(parts) == 3:
                    pending.append((parts[1], parts[2]))
            continue
        if line.startswith('p'):
            parts = line.split()
            if cnf is not None or len(parts) != 4 or parts[1] != 'cnf':
                raise DimacsError(lineno, f'bad header {line!r}')
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(lineno, 'header counts') from None
            cnf = Cnf(num_vars, dict(pending))
            clause = []
            continue
        if cnf is None:
            raise DimacsError(lineno, 'clause before the header')
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise DimacsError(lineno, f'bad literal in {line!r}') from None
        for lit in lits:
            if lit:
                clause.append(lit)
                continue
            read += 1
            try:
                cnf.add_clause(clause)
            except EncodingError as exc:
                raise DimacsError(lineno, str(exc)) from exc
            clause = []
    if cnf is None:
        raise DimacsError(0, 'no header')
    if clause:
        raise DimacsError(lineno, 'last clause is not terminated')
    if read != declared:
        raise DimacsError(
            lineno, f'header declares {declared} clauses, found {read}'
        )
    return cnf


def read_dimacs(path):
    with open(path) as f:
        return parse_dimacs(f.read())


def write_dimacs(path, cnf):
    with open(path, 'w') as f:
        emit_dimacs(cnf, f)


def write_varmap(path, varmap):
    with open(path, 'w') as f:
        for line in varmap.sidecar_lines():
            f.write(line + '\n')


def parse_varmap(text):
    """{(kind, square, i, j[, k]): variable} from sidecar text."""
    table = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        try:
            if parts[0] in ('dark', 'white'):
                kind, square, i, j, var = parts
                table[(kind, square, int(i), int(j))] = int(var)
            else:
                square, i, j, k, var = parts
                table[(square, int(i), int(j), int(k))] = int(var)
        except ValueError:
            raise DimacsError(lineno, f'bad map line {line!r}') from None
    return table
