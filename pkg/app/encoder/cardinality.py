"""
Cardinality constraints: pairwise exactly-one and totalizer counters.
"""
import enum
import itertools

from encoder.cnf import EncodingError


class Cardinality(enum.Enum):
    PAIRWISE = 'pairwise'
    TOTALIZER = 'totalizer'


def _merge(cnf, left, right, limit):
    """Unary sum of two unary counters, kept to at most limit bits."""
    width = min(len(left) + len(right), limit)
    out = cnf.new_vars(width)
    # a[0] and b[0] stand for "at least 0", which always holds
    a = [None] + left
    b = [None] + right
    for alpha in range(len(a)):
        for beta in range(len(b)):
            sigma = alpha + beta
            if 1 <= sigma <= width:
                clause = [out[sigma - 1]]
                if alpha:
                    clause.append(-a[alpha])
                if beta:
                    clause.append(-b[beta])
                cnf.add_clause(clause)
            if sigma < width:
                clause = [-out[sigma]]
                if alpha + 1 < len(a):
                    clause.append(a[alpha + 1])
                if beta + 1 < len(b):
                    clause.append(b[beta + 1])
                cnf.add_clause(clause)
    return out


def totalizer(cnf, lits, k):
    """Unary counter over lits, truncated at k + 1 outputs.

    Output m (1-based) is true exactly when at least m inputs are true,
    for every m up to min(len(lits), k + 1). The tree is balanced and
    reads the inputs in the order given.
    """
    lits = list(lits)
    if not lits:
        raise EncodingError('Totalizer needs at least one input')
    limit = k + 1
    if len(lits) == 1:
        return lits
    mid = len(lits) // 2
    left = totalizer(cnf, lits[:mid], k)
    right = totalizer(cnf, lits[mid:], k)
    return _merge(cnf, left, right, limit)


def encode_at_least_one(cnf, lits):
    cnf.add_clause(lits)


def encode_at_most_one_pairwise(cnf, lits):
    for a, b in itertools.combinations(lits, 2):
        cnf.add_clause((-a, -b))


def encode_exactly_k(cnf, lits, k, method=Cardinality.TOTALIZER):
    """sum(lits) == k.

    Raises EncodingError when k is negative or larger than the number of
    inputs; such a constraint has no models.
    """
    lits = list(lits)
    method = Cardinality(method)
    if not 0 <= k <= len(lits):
        raise EncodingError(f'Cannot make {k} of {len(lits)} literals true')
    if k == 0:
        for lit in lits:
            cnf.add_clause((-lit,))
        return
    if k == len(lits):
        for lit in lits:
            cnf.add_clause((lit,))
        return
    if k == 1 and method is Cardinality.PAIRWISE:
        encode_exactly_one(cnf, lits, method)
        return
    out = totalizer(cnf, lits, k)
    cnf.add_clause((out[k - 1],))
    cnf.add_clause((-out[k],))


def encode_exactly_one(cnf, lits, method=Cardinality.PAIRWISE):
    """One at-least-one clause plus an at-most-one part.

    Pairwise adds 1 + k(k-1)/2 clauses; totalizer asserts the first
    output bit and denies the second.
    """
    lits = list(lits)
    if not lits:
        raise EncodingError('Exactly-one needs at least one literal')
    method = Cardinality(method)
    encode_at_least_one(cnf, lits)
    if method is Cardinality.PAIRWISE:
        encode_at_most_one_pairwise(cnf, lits)
    elif len(lits) > 1:
        out = totalizer(cnf, lits, 1)
        cnf.add_clause((out[0],))
        cnf.add_clause((-out[1],))
