"""
Myrvold cardinality layer for order-10 pair instances.

Row k of Q lists P's symbols along P's k-th transversal, so the white
tail count of that transversal is the number of white symbols in the
last four cells of Q's row k. P's decomposition profile is therefore
stated over Q's rows and Q's profile over P's rows. Dark cells are
free indicator variables that may not sit on white cells, two to each
of the first six columns.

With the R witness present the transversals are known cell by cell, so
each row's type also fixes the dark count of its transversal: type p_t
has 2t - 2 dark cells. Without R that half of the type is left to
Euler-Parker.
"""
import logging

from encoder.cardinality import (
    encode_exactly_k,
    encode_exactly_one,
    totalizer,
)
from encoder.squares import (
    encode_latin_square,
    Instance,
    Mode,
    start_instance,
    UnsupportedProfile,
)
from latin.myrvold import (
    DARK_COLUMNS,
    MYRVOLD_ORDER,
    TAIL_COLUMNS,
    TransversalType,
    WHITE_SYMBOLS,
)


logger = logging.getLogger(__name__)


def white_indicator(cnf, varmap, square, i, j):
    """w <-> S_{i,j,0} | ... | S_{i,j,3}."""
    w = cnf.new_var()
    whites = [varmap.var(square, i, j, s) for s in sorted(WHITE_SYMBOLS)]
    cnf.add_clause([-w] + whites)
    for lit in whites:
        cnf.add_clause((-lit, w))
    varmap.white[(square, i, j)] = w
    return w


def encode_dark_cells(cnf, varmap, square, quota):
    n = varmap.order
    for j in DARK_COLUMNS:
        column = []
        for i in range(n):
            d = cnf.new_var()
            varmap.dark[(square, i, j)] = d
            for s in sorted(WHITE_SYMBOLS):
                cnf.add_clause((-d, -varmap.var(square, i, j, s)))
            column.append(d)
        encode_exactly_k(cnf, column, quota[j])


def encode_row_types(cnf, varmap, square, profile, method):
    """Give each row of square one type of profile, profile's count of
    rows per type, and the matching white tail count per row.

    Returns the selectors as one {type: var} dict per row.
    """
    n = varmap.order
    types = profile.required_types
    selectors = {t: [] for t in types}
    by_row = []
    for r in range(n):
        whites = [
            white_indicator(cnf, varmap, square, r, j) for j in TAIL_COLUMNS
        ]
        at_least = totalizer(cnf, whites, len(whites))
        row = []
        for t in types:
            y = cnf.new_var()
            cnf.add_clause((-y, at_least[t - 1]))
            if t < len(at_least):
                cnf.add_clause((-y, -at_least[t]))
            selectors[t].append(y)
            row.append(y)
        encode_exactly_one(cnf, row, method)
        by_row.append(dict(zip(types, row)))
    for t in types:
        encode_exactly_k(cnf, selectors[t], profile.count(t))
    return by_row


def transversal_cells(varmap, dark_square, r, j):
    """(R literal, cell) pairs: cell is in column j of transversal r of
    dark_square exactly when the R literal holds.

    P's transversal r is where R holds r. Q's transversal r runs through
    (R_{r,j}, j), the cells P's row r is spelled on.
    """
    n = varmap.order
    if dark_square == 'P':
        return [(varmap.var('R', i, j, r), (i, j)) for i in range(n)]
    return [(varmap.var('R', r, j, k), (k, j)) for k in range(n)]


def transversal_dark_indicator(cnf, varmap, dark_square, r, j):
    """e <-> the column j cell of transversal r is dark."""
    e = cnf.new_var()
    for guard, cell in transversal_cells(varmap, dark_square, r, j):
        d = varmap.dark[(dark_square, *cell)]
        cnf.add_clause((-guard, -d, e))
        cnf.add_clause((-guard, d, -e))
    return e


def encode_dark_types(cnf, varmap, dark_square, row_selectors):
    """Tie each selected type to its transversal's dark count."""
    for r, chosen in enumerate(row_selectors):
        marks = [
            transversal_dark_indicator(cnf, varmap, dark_square, r, j)
            for j in DARK_COLUMNS
        ]
        at_least = totalizer(cnf, marks, len(marks))
        for ttype, y in chosen.items():
            darks = TransversalType(ttype).dark_count
            if darks:
                cnf.add_clause((-y, at_least[darks - 1]))
            if darks < len(at_least):
                cnf.add_clause((-y, -at_least[darks]))


def encode_myrvold(cfg):
    """Latin P and Q with the dark quotas and the two type layers."""
    if cfg.mode is not Mode.MYRVOLD:
        raise UnsupportedProfile(f'Mode {cfg.mode.value} is not myrvold')
    if cfg.order != MYRVOLD_ORDER:
        raise UnsupportedProfile(
            f'Myrvold instances have order {MYRVOLD_ORDER}, not {cfg.order}'
        )
    if cfg.profiles is None or len(cfg.profiles) != 2:
        raise UnsupportedProfile('Myrvold instances need two profiles')
    p_profile, q_profile = cfg.profiles

    cnf, varmap = start_instance(cfg)
    if not cfg.has_mate:
        encode_latin_square(cnf, varmap, 'Q', cfg.cardinality)
    cnf.metadata['profiles'] = '/'.join(
        p.name or ','.join(map(str, p.type_counts)) for p in cfg.profiles
    )

    encode_dark_cells(cnf, varmap, 'P', p_profile.dark_quota_per_column)
    encode_dark_cells(cnf, varmap, 'Q', q_profile.dark_quota_per_column)
    # Q's rows carry P's decomposition and P's rows carry Q's
    p_types = encode_row_types(cnf, varmap, 'Q', p_profile, cfg.cardinality)
    q_types = encode_row_types(cnf, varmap, 'P', q_profile, cfg.cardinality)
    if cfg.has_mate:
        encode_dark_types(cnf, varmap, 'P', p_types)
        encode_dark_types(cnf, varmap, 'Q', q_types)
    logger.debug(
        'encoded myrvold %s: %d vars, %d clauses',
        cnf.metadata['profiles'], cnf.num_vars, len(cnf),
    )
    return Instance(cfg, cnf, varmap)
