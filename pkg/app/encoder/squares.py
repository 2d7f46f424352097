"""
CNF instances for single Latin squares and orthogonal pairs.

A pair instance declares P, R and Q. R is the mate of P; Q is linked to
them by R_{i,j,k} & P_{i,j,l} -> Q_{k,j,l}, so row k of Q spells P's
symbols along the cells where R holds k. Each symbol appearing once in
every row of Q makes those cells transversals, and then (P, Q) is a
transversal representation pair.
"""
import enum
import logging
from dataclasses import dataclass

from encoder.cardinality import Cardinality, encode_exactly_one
from encoder.cnf import EncodingError, VariableMap


logger = logging.getLogger(__name__)


class UnsupportedProfile(EncodingError):
    """The Myrvold layer needs order 10 and a profile for each square."""


class Mode(enum.Enum):
    SINGLE = 'single'
    PAIR = 'pair'
    MYRVOLD = 'myrvold'


@dataclass(frozen=True)
class EncodeConfig:
    order: int
    mode: Mode = Mode.SINGLE
    cardinality: Cardinality = Cardinality.PAIRWISE
    first_row: tuple = None
    fix_mate_first_row: bool = False
    # (profile of P's decomposition, profile of Q's decomposition)
    profiles: tuple = None
    # Myrvold only: also declare R and the channeling clauses
    trp_witness: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'mode', Mode(self.mode))
        object.__setattr__(
            self, 'cardinality', Cardinality(self.cardinality)
        )
        if self.order < 1:
            raise EncodingError(f'Order must be positive, got {self.order}')
        if self.first_row is not None:
            row = tuple(self.first_row)
            if sorted(row) != list(range(self.order)):
                raise EncodingError(
                    f'First row {row} is not a permutation of '
                    f'0..{self.order - 1}'
                )
            object.__setattr__(self, 'first_row', row)
        if self.profiles is not None and self.mode is not Mode.MYRVOLD:
            raise EncodingError('Profiles only apply to the myrvold mode')
        if self.fix_mate_first_row and not self.has_mate:
            raise EncodingError('No mate square to fix in this mode')

    @property
    def has_mate(self):
        return self.mode is Mode.PAIR or (
            self.mode is Mode.MYRVOLD and self.trp_witness
        )

    @property
    def squares(self):
        if self.mode is Mode.SINGLE:
            return ('P',)
        if self.has_mate:
            return ('P', 'R', 'Q')
        return ('P', 'Q')

    @property
    def watched(self):
        return ('P', 'Q') if self.mode is Mode.MYRVOLD else ('P',)

    @property
    def certifies(self):
        """Whether every model already holds an orthogonal pair."""
        return self.has_mate


@dataclass(frozen=True)
class Instance:
    config: EncodeConfig
    cnf: object
    varmap: VariableMap


def encode_latin_square(cnf, varmap, square, method):
    """Exactly one symbol per cell, column per (row, symbol) and row per
    (column, symbol)."""
    n = varmap.order
    var = varmap.var
    for i in range(n):
        for j in range(n):
            encode_exactly_one(
                cnf, [var(square, i, j, k) for k in range(n)], method
            )
    for i in range(n):
        for k in range(n):
            encode_exactly_one(
                cnf, [var(square, i, j, k) for j in range(n)], method
            )
    for j in range(n):
        for k in range(n):
            encode_exactly_one(
                cnf, [var(square, i, j, k) for i in range(n)], method
            )


def fix_row(cnf, varmap, square, row, symbols):
    for j, k in enumerate(symbols):
        cnf.add_clause((varmap.var(square, row, j, k),))


def encode_orthogonality_channeling(cnf, varmap, method):
    """R Latin, the n^4 channeling clauses and Q's row constraints."""
    n = varmap.order
    var = varmap.var
    encode_latin_square(cnf, varmap, 'R', method)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = var('R', i, j, k)
                for s in range(n):
                    cnf.add_clause(
                        (-r, -var('P', i, j, s), var('Q', k, j, s))
                    )
    for k in range(n):
        for s in range(n):
            encode_exactly_one(
                cnf, [var('Q', k, j, s) for j in range(n)], method
            )


def start_instance(cfg):
    varmap = VariableMap(cfg.order, cfg.squares)
    cnf = varmap.new_cnf(mode=cfg.mode.value,
                         cardinality=cfg.cardinality.value)
    encode_latin_square(cnf, varmap, 'P', cfg.cardinality)
    if cfg.first_row is not None:
        fix_row(cnf, varmap, 'P', 0, cfg.first_row)
    if cfg.has_mate:
        encode_orthogonality_channeling(cnf, varmap, cfg.cardinality)
        if cfg.fix_mate_first_row:
            fix_row(cnf, varmap, 'R', 0, range(cfg.order))
    return cnf, varmap


def encode_latin(cfg):
    """Single square or channeled pair instance."""
    if cfg.mode is Mode.MYRVOLD:
        raise EncodingError('Use encode_myrvold for myrvold instances')
    cnf, varmap = start_instance(cfg)
    logger.debug(
        'encoded %s order %d: %d vars, %d clauses',
        cfg.mode.value, cfg.order, cnf.num_vars, len(cnf),
    )
    return Instance(cfg, cnf, varmap)

