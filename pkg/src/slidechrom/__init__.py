"""Exact combinatorics of descent-weighted chromatic polynomials on
Dyck graphs, slide and key bases, and positivity searches."""

from .compositions import (
    WeakComposition,
    Window,
    comp_of_subset,
    dominates,
    leq_slide,
    refinements,
    refines,
    slide_set,
    subset_of_comp,
    transpose,
)
from .dyck import (
    DyckGraph,
    PartialDyckPath,
    count_paths,
    dyck_graph,
    enumerate_paths,
    restriction_map,
)
from .posets import (
    LabeledPoset,
    Orientation,
    acyclic_orientations,
    descent_composition,
    descent_composition_by_labels,
    graph_inversions,
    incomparability_poset,
    linear_extensions,
    omega_labeling,
    orientation_from_perm,
    partition_generating_function,
    poset_descents,
    poset_of_orientation,
    restricted_partitions,
    tightened_bounds,
    tightened_bounds_by_labels,
)
from .slides import (
    backstable_slide_truncated,
    expand_in_slides,
    fundamental_limit_index,
    fundamental_qsym,
    is_tail_strong,
    slide_polynomial,
    slide_polynomial_by_chains,
    tail_strong_decomposition,
)
from .chromatic import (
    ChromaticReport,
    chromatic_brute,
    chromatic_via_slides,
    compare_chromatic,
    fundamental_expansion,
    verify_backstable,
    verify_fundamental_expansion,
)
from .keys import (
    NegativeRecord,
    demazure_operator,
    divided_difference,
    expand_in_keys,
    is_key_positive,
    key_expansion_of_chromatic,
    key_polynomial,
    load_negative_fixtures,
    save_negative_fixtures,
    search_negative_records,
)
from .tpoly import TPolynomial

__version__ = "0.1.0"

__all__ = [
    "WeakComposition",
    "Window",
    "comp_of_subset",
    "dominates",
    "refinements",
    "subset_of_comp",
    "leq_slide",
    "refines",
    "slide_set",
    "transpose",
    "DyckGraph",
    "PartialDyckPath",
    "count_paths",
    "dyck_graph",
    "enumerate_paths",
    "restriction_map",
    "LabeledPoset",
    "Orientation",
    "acyclic_orientations",
    "descent_composition",
    "descent_composition_by_labels",
    "graph_inversions",
    "incomparability_poset",
    "linear_extensions",
    "omega_labeling",
    "orientation_from_perm",
    "partition_generating_function",
    "poset_descents",
    "poset_of_orientation",
    "restricted_partitions",
    "tightened_bounds",
    "tightened_bounds_by_labels",
    "backstable_slide_truncated",
    "expand_in_slides",
    "fundamental_limit_index",
    "fundamental_qsym",
    "is_tail_strong",
    "slide_polynomial",
    "slide_polynomial_by_chains",
    "tail_strong_decomposition",
    "ChromaticReport",
    "chromatic_brute",
    "chromatic_via_slides",
    "compare_chromatic",
    "fundamental_expansion",
    "verify_backstable",
    "verify_fundamental_expansion",
    "NegativeRecord",
    "demazure_operator",
    "divided_difference",
    "expand_in_keys",
    "is_key_positive",
    "key_expansion_of_chromatic",
    "key_polynomial",
    "load_negative_fixtures",
    "save_negative_fixtures",
    "search_negative_records",
    "TPolynomial",
]
