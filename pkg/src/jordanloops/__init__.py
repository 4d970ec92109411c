"""Finite commutative Jordan loops: construction, search, and analysis.

A Jordan loop is a commutative loop satisfying the Jordan identity
(x*x)*(y*x) = ((x*x)*y)*x.  This package builds nonassociative examples of
every achievable order, exhaustively enumerates small orders, analyses
powers and normal subloop structure, and reads and writes a plain-text
table format.
"""

from .constructions import (
    AmalgamSpec,
    PartitionedQuasigroup,
    adjoin_identity_with_bijection,
    antidiagonal_idempotent,
    construct,
    even_jordan,
    exp2_to_idempotent,
    fermat_jordan,
    fermat_subloop_members,
    guaranteed_jordan_conditions,
    hyper_extend,
    idempotent_to_exp2,
    jordan_tower,
    loop_amalgam,
    odd_jordan,
    quasigroup_amalgam,
    replace_subquasigroups,
    union_of_groups,
)
from .powers import (
    DEFAULT_EXPONENT_CAP,
    PowersLoopParams,
    SubsetClosure,
    element_order,
    generated_subloop,
    is_power_associative,
    is_well_defined,
    parenthesization_set,
    power_profile,
    powers_gap_loop,
    powers_gap_params,
    right_power,
)
from .search import (
    PartialTable,
    SearchIncomplete,
    SearchOptions,
    SearchStats,
    classify_up_to_iso,
    enumerate_loops,
    propagate,
)
from .structure import (
    conjugation,
    inner_left,
    inner_right,
    is_normal,
    is_simple,
    left_translation,
    normal_closure,
    right_translation,
)
from .tables import (
    KINDS,
    ORDER_LIMIT,
    PROPERTY_TAGS,
    MagmaTable,
    ValidationError,
    build_magma,
    check,
    cyclic_group,
    direct_product,
    find_counterexample,
    find_isomorphism,
    identity_element,
    left_divide,
    opposite,
    parse_table,
    parse_tables,
    right_divide,
    serialize_table,
    squaring_bijective,
)

__version__ = "1.0.0"

__all__ = [
    "AmalgamSpec",
    "DEFAULT_EXPONENT_CAP",
    "KINDS",
    "MagmaTable",
    "ORDER_LIMIT",
    "PROPERTY_TAGS",
    "PartialTable",
    "PartitionedQuasigroup",
    "PowersLoopParams",
    "SearchIncomplete",
    "SearchOptions",
    "SearchStats",
    "SubsetClosure",
    "ValidationError",
    "adjoin_identity_with_bijection",
    "antidiagonal_idempotent",
    "build_magma",
    "check",
    "classify_up_to_iso",
    "conjugation",
    "construct",
    "cyclic_group",
    "direct_product",
    "element_order",
    "enumerate_loops",
    "even_jordan",
    "exp2_to_idempotent",
    "fermat_jordan",
    "fermat_subloop_members",
    "find_counterexample",
    "find_isomorphism",
    "generated_subloop",
    "guaranteed_jordan_conditions",
    "hyper_extend",
    "identity_element",
    "idempotent_to_exp2",
    "inner_left",
    "inner_right",
    "is_normal",
    "is_power_associative",
    "is_simple",
    "is_well_defined",
    "jordan_tower",
    "left_divide",
    "left_translation",
    "loop_amalgam",
    "normal_closure",
    "odd_jordan",
    "opposite",
    "parenthesization_set",
    "parse_table",
    "parse_tables",
    "power_profile",
    "powers_gap_loop",
    "powers_gap_params",
    "propagate",
    "quasigroup_amalgam",
    "replace_subquasigroups",
    "right_divide",
    "right_power",
    "right_translation",
    "serialize_table",
    "squaring_bijective",
    "union_of_groups",
]
