"""Degree-based tree indices, extremal constructions, and verification.

The library computes two degree-based indices over trees, evaluates the
closed-form extremal bounds for families with a fixed number of pendant
vertices, segments, or branching vertices, constructs the extremal
trees, applies the associated degree-shifting moves, and verifies every
bound against exhaustive isomorphism-free enumeration at desk scale.
"""

from .bounds import (
    THEOREM_FAMILY,
    THEOREM_NAMES,
    BalancedCounts,
    BoundValue,
    FamilyConstraint,
    balanced_counts,
    balanced_counts_formula,
    bt_bound_one_big_vertex,
    bt_bound_small_degrees,
    claimed_direction,
    construct_extremal,
    pt_balanced_bound,
    pt_spider_bound,
    st_parity_bound,
    st_star_side_bound,
    star_global_bound,
    theorem_bound,
)
from .enumeration import (
    DEFAULT_MAX_N,
    EnumerationTask,
    family_census,
    family_members,
    free_tree_count_by_prufer,
    free_trees,
    labeled_trees_prufer,
)
from .indices import (
    ABS_TOL,
    REL_TOL,
    WINDOW_LOW_A,
    IndexParams,
    Regime,
    classify_regime,
    r0_general,
    r0_of_degseq,
    sei,
    sei_of_degseq,
    validate_a,
    validate_alpha,
    values_close,
)
from .transforms import (
    TRANSFORM_KINDS,
    TRANSFORMS,
    MoveRecord,
    apply_b1,
    apply_b3,
    apply_b4,
    apply_p1,
    apply_p2,
    apply_s1a,
    apply_s1aa,
    apply_transform,
    claimed_sign,
    predicted_delta,
)
from .trees import (
    DegreeSequence,
    StructuralProfile,
    Tree,
    canonical_code,
    parse_tree,
    realize_caterpillar,
    segment_decomposition,
    squeeze,
    structural_profile,
)
from .verify import (
    BT_BIG,
    BT_SMALL,
    CONFIRMED,
    DEFAULT_A_GRID,
    DEFAULT_ALPHA_GRID,
    PT_BALANCED,
    PT_MIN_SPIDER,
    REFUTED,
    ST_PARITY,
    ST_STAR_SIDE,
    STAR_GLOBAL,
    MonotonicityRow,
    TheoremReport,
    check_monotonicity,
    check_theorem,
    full_report,
    oracle_extremum,
    reports_to_csv,
    reports_to_json,
)

__version__ = "0.1.0"
