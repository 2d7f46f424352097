"""
A tiny DPLL used as a reference by the tests.
"""


def _simplify(clauses, lit):
    out = []
    for clause in clauses:
        if lit in clause:
            continue
        reduced = [q for q in clause if q != -lit]
        if not reduced:
            return None
        out.append(reduced)
    return out


def _dpll(clauses, assignment):
    while True:
        unit = next((c[0] for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        assignment[abs(unit)] = unit > 0
        clauses = _simplify(clauses, unit)
        if clauses is None:
            return None
    if not clauses:
        return assignment
    lit = clauses[0][0]
    for choice in (lit, -lit):
        reduced = _simplify(clauses, choice)
        if reduced is None:
            continue
        trial = dict(assignment)
        trial[abs(choice)] = choice > 0
        found = _dpll(reduced, trial)
        if found is not None:
            return found
    return None


def dpll(clauses, num_vars):
    """A model as a tuple indexed by variable, or None when UNSAT."""
    found = _dpll([list(c) for c in clauses], {})
    if found is None:
        return None
    return (False,) + tuple(
        found.get(v, False) for v in range(1, num_vars + 1)
    )


def is_satisfiable(clauses, num_vars, fixed=()):
    return dpll(list(clauses) + [[lit] for lit in fixed], num_vars) \
        is not None


def satisfies(model, clauses):
    return all(
        any(model[abs(lit)] == (lit > 0) for lit in clause)
        for clause in clauses
    )
