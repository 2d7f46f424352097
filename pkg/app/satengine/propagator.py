"""
The external propagator contract.

A propagator watches the search through notifications and talks back
only by returning clauses; it must never call into the solver. The
solver calls it at propagation fixpoints:

    on_new_level()               a decision opened a new level
    on_assign(lit)               an observed variable was assigned
    on_backtrack(new_level)      levels above new_level were undone
    has_external_clause()        is a clause waiting?
    fetch_external_clause()      the waiting ExternalClause
    on_solution_check(model)     None accepts a full assignment, an
                                 ExternalClause rejects it
    should_terminate()           True ends the solve as TERMINATED
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class ExternalClause:
    lits: tuple
    # Forgettable clauses may be deleted by clause database reduction
    forgettable: bool = True


class ExternalPropagator:
    # Variables reported through on_assign; None reports every variable
    observed = None

    def on_assign(self, lit):
        pass

    def on_new_level(self):
        pass

    def on_backtrack(self, new_level):
        pass

    def has_external_clause(self):
        return False

    def fetch_external_clause(self):
        return None

    def on_solution_check(self, model):
        return None

    def should_terminate(self):
        return False
