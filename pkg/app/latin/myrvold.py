"""
Myrvold's white/light/dark colouring of order-10 squares, transversal
types p1..p4 and the decomposition profiles built from them.
"""
import enum
from dataclasses import dataclass, field

from latin.squares import Cell, LatinError


MYRVOLD_ORDER = 10
WHITE_SYMBOLS = frozenset({0, 1, 2, 3})
DARK_COLUMNS = tuple(range(6))
TAIL_COLUMNS = tuple(range(6, 10))
DEFAULT_DARK_QUOTA = (2,) * len(DARK_COLUMNS)


class MyrvoldError(LatinError):
    """Base error for colourings and profiles."""


class DarkOnWhiteCell(MyrvoldError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f'Dark position {cell} holds a white symbol')


class WrongDarkQuota(MyrvoldError):
    def __init__(self, col, count):
        self.col, self.count = col, count
        super().__init__(f'Column {col} has {count} dark cells')


class InconsistentType(MyrvoldError):
    def __init__(self, white, dark):
        self.white, self.dark = white, dark
        super().__init__(
            f'{white} white tail cells but {dark} dark cells'
        )


class BadProfile(MyrvoldError):
    """Profile counts or quotas violate their invariants."""


class Colour(enum.Enum):
    WHITE = 'white'
    LIGHT = 'light'
    DARK = 'dark'


class TransversalType(enum.IntEnum):
    P1 = 1
    P2 = 2
    P3 = 3
    P4 = 4

    @property
    def tag(self):
        return f'p{self.value}'

    @property
    def dark_count(self):
        return 2 * self.value - 2

    @classmethod
    def from_tag(cls, tag):
        tag = tag.strip().lower()
        if not tag.startswith('p') or tag[1:] not in {'1', '2', '3', '4'}:
            raise BadProfile(f'Unknown transversal type {tag!r}')
        return cls(int(tag[1:]))


@dataclass(frozen=True)
class MyrvoldColouring:
    """Colouring of an order-10 square; build it with colour()."""
    square: object
    dark: frozenset

    def colour_of(self, cell):
        if self.square[cell] in WHITE_SYMBOLS:
            return Colour.WHITE
        if cell in self.dark:
            return Colour.DARK
        return Colour.LIGHT

    def is_white(self, cell):
        return self.square[cell] in WHITE_SYMBOLS

    def is_dark(self, cell):
        return cell in self.dark

    def grid(self):
        n = self.square.order
        return tuple(
            tuple(self.colour_of(Cell(i, j)) for j in range(n))
            for i in range(n)
        )


def colour(square, dark_positions, quota=DEFAULT_DARK_QUOTA):
    """Colour a square of order 10 from its dark cells."""
    if square.order != MYRVOLD_ORDER:
        raise MyrvoldError(
            f'Colourings need order {MYRVOLD_ORDER}, got {square.order}'
        )
    dark = frozenset(
        c if isinstance(c, Cell) else Cell(*c) for c in dark_positions
    )
    for cell in sorted(dark):
        if not cell.in_bounds(square.order):
            raise MyrvoldError(f'Dark position {cell} outside the square')
        if square[cell] in WHITE_SYMBOLS:
            raise DarkOnWhiteCell(cell)

    per_col = [0] * square.order
    for cell in dark:
        per_col[cell.col] += 1
    for col in range(square.order):
        wanted = quota[col] if col < len(quota) else 0
        if per_col[col] != wanted:
            raise WrongDarkQuota(col, per_col[col])
    return MyrvoldColouring(square, dark)


def white_tail_count(transversal, colouring):
    return sum(
        1 for cell in transversal
        if cell.col in TAIL_COLUMNS and colouring.is_white(cell)
    )


def dark_count(transversal, colouring):
    return sum(1 for cell in transversal if colouring.is_dark(cell))


def classify_transversal(transversal, colouring):
    """Type p_i from the white tail count, checked against the dark count."""
    white = white_tail_count(transversal, colouring)
    dark = dark_count(transversal, colouring)
    if white not in (1, 2, 3, 4) or dark != 2 * white - 2:
        raise InconsistentType(white, dark)
    return TransversalType(white)


@dataclass(frozen=True)
class MyrvoldProfile:
    """Required count of each transversal type in a decomposition."""
    type_counts: tuple
    dark_quota_per_column: tuple = DEFAULT_DARK_QUOTA
    omega_class_filter: str = None
    name: str = field(default='', compare=False)

    def __post_init__(self):
        if len(self.type_counts) != 4:
            raise BadProfile('Profiles list counts for p1..p4')
        if any(c < 0 for c in self.type_counts):
            raise BadProfile('Type counts must be nonnegative')
        if sum(self.type_counts) != MYRVOLD_ORDER:
            raise BadProfile(
                f'Type counts sum to {sum(self.type_counts)}, '
                f'not {MYRVOLD_ORDER}'
            )
        if len(self.dark_quota_per_column) != len(DARK_COLUMNS):
            raise BadProfile('Dark quota vector must have length 6')

    @classmethod
    def of(cls, counts, name='', **kwargs):
        """Build from a mapping of TransversalType (or 'p1' tags) to counts."""
        vector = [0, 0, 0, 0]
        for key, count in counts.items():
            if not isinstance(key, TransversalType):
                key = TransversalType.from_tag(str(key))
            vector[key - 1] = int(count)
        return cls(tuple(vector), name=name, **kwargs)

    def count(self, ttype):
        return self.type_counts[TransversalType(ttype) - 1]

    @property
    def required_types(self):
        return tuple(t for t in TransversalType if self.count(t) > 0)

    def counts(self):
        return {t: self.count(t) for t in TransversalType}


PROFILE_PRESETS = {
    'R': MyrvoldProfile.of({'p1': 8, 'p4': 2}, name='R'),
    'X': MyrvoldProfile.of({'p1': 4, 'p2': 6}, name='X'),
}


def resolve_pair_type(name):
    """Profiles for (P, Q) decompositions from a preset name like 'XX'."""
    name = name.strip().upper()
    if name in PROFILE_PRESETS:
        return PROFILE_PRESETS[name], PROFILE_PRESETS[name]
    if len(name) == 2 and all(c in PROFILE_PRESETS for c in name):
        return PROFILE_PRESETS[name[0]], PROFILE_PRESETS[name[1]]
    raise BadProfile(
        f'No preset for pair type {name!r}; '
        'supply the counts in a profile file'
    )


def parse_profile(text, name=''):
    """Read 'p<i> <count>' lines and an optional 'omega <filter>' line."""
    counts = {}
    omega = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BadProfile(f'Line {lineno}: expected two fields')
        key, value = parts
        if key.lower() == 'omega':
            omega = value
            continue
        try:
            counts[TransversalType.from_tag(key)] = int(value)
        except ValueError as exc:
            raise BadProfile(f'Line {lineno}: {exc}') from exc
    return MyrvoldProfile.of(counts, name=name, omega_class_filter=omega)


def load_profile(path):
    with open(path) as f:
        return parse_profile(f.read(), name=str(path))


# Omega filters map a transversal to the labels of the subsquare classes it
# is compatible with; stage 2 runs once per label.
OMEGA_FILTERS = {}


def register_omega_filter(name):
    def decorator(func):
        OMEGA_FILTERS[name] = func
        return func
    return decorator


@register_omega_filter('single')
def single_class(transversal, colouring):
    return frozenset({'all'})


def omega_filter(name):
    try:
        return OMEGA_FILTERS[name or 'single']
    except KeyError:
        raise BadProfile(f'Unknown omega filter {name!r}') from None


def check_family(colouring, profile, family):
    """List the profile equations a decomposition violates (empty if none)."""
    problems = []
    tally = {t: 0 for t in TransversalType}
    for t in family:
        try:
            tally[classify_transversal(t, colouring)] += 1
        except InconsistentType as exc:
            problems.append(str(exc))
    for ttype, count in tally.items():
        if count != profile.count(ttype):
            problems.append(
                f'{count} transversals of type {ttype.tag}, '
                f'expected {profile.count(ttype)}'
            )
    for col in DARK_COLUMNS:
        darks = sum(
            1 for t in family if colouring.is_dark(t.cell_in_col(col))
        )
        if darks != profile.dark_quota_per_column[col]:
            problems.append(f'{darks} dark family cells in column {col}')
    return problems
