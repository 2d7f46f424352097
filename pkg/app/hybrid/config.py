"""
Hybrid search configuration and errors.
"""
import dataclasses
from dataclasses import dataclass

from django.conf import settings

from encoder.squares import Mode
from exactcover.system import SolveControl


class HybridError(ValueError):
    """Base error for the hybrid driver."""


class DecodeInconsistency(HybridError):
    """A watched square read back from the search is not a Latin square."""


WATCHABLE = ('P', 'Q')


@dataclass(frozen=True)
class HybridConfig:
    # Conflict clauses the solver must derive between Euler-Parker calls
    ep_conflict_throttle: int = 1
    watched: tuple = ('P',)
    # (profile of P, profile of Q) in Myrvold runs
    profiles: tuple = None
    ep_node_budget: int = None
    blocked_memo_size: int = 2 ** 20
    # Full models of the CNF already hold an orthogonal pair
    cnf_certifies: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'watched', tuple(self.watched))
        if self.ep_conflict_throttle < 0:
            raise HybridError('ep_conflict_throttle must be >= 0')
        if self.blocked_memo_size < 1:
            raise HybridError('blocked_memo_size must be >= 1')
        if self.ep_node_budget is not None and self.ep_node_budget < 1:
            raise HybridError('ep_node_budget must be >= 1')
        if not self.watched or not set(self.watched) <= set(WATCHABLE):
            raise HybridError(
                f'Watched squares must be drawn from {WATCHABLE}'
            )
        if self.profiles is not None and len(self.profiles) != 2:
            raise HybridError('Myrvold runs need a profile for P and Q')

    @property
    def myrvold(self):
        return self.profiles is not None

    def profile_for(self, square):
        return self.profiles[WATCHABLE.index(square)]

    def ep_budget(self):
        if self.ep_node_budget is None:
            return None
        return SolveControl(node_budget=self.ep_node_budget)

    @classmethod
    def from_settings(cls, **overrides):
        """Config from settings.MOLS_SEARCH, then keyword overrides."""
        configured = getattr(settings, 'MOLS_SEARCH', {})
        names = {f.name for f in dataclasses.fields(cls)}
        values = {
            key.lower(): value for key, value in configured.items()
            if key.lower() in names
        }
        values.update(overrides)
        return cls(**values)

    @classmethod
    def for_instance(cls, instance, **overrides):
        """Watch list, profiles and certification of an encoded instance.

        Myrvold models are always handed to Euler-Parker: the CNF counts
        white tail cells but not the dark cells of each transversal.
        """
        cfg = instance.config
        myrvold = cfg.mode is Mode.MYRVOLD
        overrides.setdefault('watched', cfg.watched)
        overrides.setdefault('profiles', cfg.profiles if myrvold else None)
        overrides.setdefault('cnf_certifies', cfg.certifies and not myrvold)
        return cls.from_settings(**overrides)
