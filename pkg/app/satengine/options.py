"""
Solver options and engine errors.
"""
import dataclasses
from dataclasses import dataclass

from django.conf import settings


class SatEngineError(ValueError):
    """Base error for the SAT engine."""


class BadLiteral(SatEngineError):
    def __init__(self, lit, num_vars):
        self.lit, self.num_vars = lit, num_vars
        super().__init__(f'Literal {lit} is not over variables 1..{num_vars}')


class UnknownOption(SatEngineError):
    def __init__(self, name):
        self.name = name
        super().__init__(f'Unknown solver option {name!r}')


class PropagatorClauseOutOfRange(SatEngineError):
    def __init__(self, lits, num_vars):
        self.lits, self.num_vars = tuple(lits), num_vars
        super().__init__(
            f'External clause {self.lits} uses variables above {num_vars}'
        )


class ModelCheckFailed(SatEngineError):
    """A model violated a held clause; the engine is broken."""


RETENTION_POLICIES = ('forgettable', 'keep')


@dataclass(frozen=True)
class SolverOptions:
    var_decay: float = 0.95
    restart_base: int = 64
    reduce_base: int = 2000
    reduce_increment: int = 300
    keep_lbd: int = 2
    # 'forgettable' honours each external clause's flag, 'keep' never
    # deletes external clauses
    external_retention: str = 'forgettable'
    # 0 keeps every initial score at zero
    shuffle_seed: int = 0
    decision_log_limit: int = 64
    verify_models: bool = True
    check_watches: bool = False

    def __post_init__(self):
        if not 0 < self.var_decay < 1:
            raise SatEngineError('var_decay must lie in (0, 1)')
        if self.restart_base < 1 or self.reduce_base < 1:
            raise SatEngineError('Restart and reduction bases must be >= 1')
        if self.external_retention not in RETENTION_POLICIES:
            raise SatEngineError(
                f'external_retention must be one of {RETENTION_POLICIES}'
            )

    @classmethod
    def from_settings(cls, **overrides):
        """Options from settings.SAT_ENGINE, then keyword overrides."""
        configured = getattr(settings, 'SAT_ENGINE', {})
        names = {f.name for f in dataclasses.fields(cls)}
        values = {
            key.lower(): value for key, value in configured.items()
            if key.lower() in names
        }
        values.update(overrides)
        return cls(**values)

    def replace(self, name, value):
        if name not in {f.name for f in dataclasses.fields(self)}:
            raise UnknownOption(name)
        return dataclasses.replace(self, **{name: value})
