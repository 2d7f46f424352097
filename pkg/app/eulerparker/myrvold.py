"""
Stage 2 specialised to Myrvold decomposition profiles.
"""
import logging
import time

from eulerparker.stages import (
    CardinalityEquation,
    enumerate_transversals,
    EpOutcome,
    EpStats,
    find_disjoint_family,
    Stage2Constraints,
    Status,
)
from latin.myrvold import (
    check_family,
    classify_transversal,
    DARK_COLUMNS,
    InconsistentType,
    omega_filter,
)


logger = logging.getLogger(__name__)


def myrvold_constraints(ts, colouring, profile, strict=True):
    """Filter ts to the profile's types and build its equations.

    With strict=False transversals whose white and dark counts break the
    type schema are dropped instead of raising InconsistentType.

    Returns (kept transversal set, Stage2Constraints). Equations are one
    per required type (count of that type) and one per dark column
    (dark entries in that column).
    """
    kept = []
    types = []
    for k, t in enumerate(ts):
        try:
            ttype = classify_transversal(t, colouring)
        except InconsistentType:
            if strict:
                raise
            continue
        if profile.count(ttype) > 0:
            kept.append(k)
            types.append(ttype)
    subset = ts.subset(kept)

    equations = []
    for ttype in profile.required_types:
        members = tuple(i for i, t in enumerate(types) if t is ttype)
        equations.append(CardinalityEquation(
            members, profile.count(ttype), ttype.tag
        ))
    for col in DARK_COLUMNS:
        members = tuple(
            i for i, t in enumerate(subset)
            if colouring.is_dark(t.cell_in_col(col))
        )
        equations.append(CardinalityEquation(
            members, profile.dark_quota_per_column[col], f'dark{col}'
        ))

    classify = omega_filter(profile.omega_class_filter)
    labels = tuple(classify(t, colouring) for t in subset)
    constraints = Stage2Constraints(
        profile=profile,
        colouring=colouring,
        omega_labels=labels,
        equations=tuple(equations),
    )
    return subset, constraints


def find_mates_myrvold(square, colouring, profile, budget=None,
                       strict=True):
    """Both stages, with stage 2 restricted to the profile."""
    stats = EpStats()
    started = time.perf_counter()
    ts = enumerate_transversals(square, budget)
    stats.stage1_time = time.perf_counter() - started
    stats.stage1_nodes = ts.nodes

    stats.transversal_count = len(ts)
    if len(ts) < square.order:
        stats.exhaustive = True
        return EpOutcome(Status.NO_MATE_FEW_TRANSVERSALS, stats)

    subset, constraints = myrvold_constraints(
        ts, colouring, profile, strict=strict
    )
    logger.debug(
        'myrvold stage 1: %d transversals, %d of the profile types',
        len(ts), len(subset),
    )
    if len(subset) < square.order:
        stats.exhaustive = True
        return EpOutcome(Status.NO_MATE_NO_DISJOINT_FAMILY, stats)
    outcome = find_disjoint_family(square, subset, constraints, budget,
                                   stats)
    stats.transversal_count = len(ts)
    if outcome.has_mate:
        problems = check_family(colouring, profile, outcome.transversals)
        assert not problems, problems
    return outcome
