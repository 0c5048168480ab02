"""Maximum rectilinear crossing numbers of regular graphs.

Exact closed forms, extremal straight-line drawings, exact rational
crossing counting, the endvertex-type accounting behind the upper bound,
and exhaustive/randomized maximization over labeled regular graphs.
"""

from .analysis import (
    AccountingReport,
    TypeProfile,
    endvertex_type,
    lemma_coverage_check,
    noncrossing_accounting,
    type_profile,
)
from .constructions import (
    ConstructionParams,
    ConvexOrder,
    construction_params,
    convex_points,
    crossings_convex,
    drawing_from_order,
    generalized_star,
    star_like_deletion,
    star_like_even,
)
from .errors import ConstructionError, DegeneracyError, ResourceLimitError
from .formulas import (
    BoundReport,
    best_known,
    c_function,
    exact_complete,
    exact_cycle,
    exact_odd,
    exact_r_n_2_even,
    exact_r_n_nminus2,
    lower_bound_even,
    min_noncrossing_pairs,
    removal_count,
    thrackle_upper,
    upper_bound,
)
from .geometry import (
    CrossingReport,
    GeometricDrawing,
    Point,
    count_crossings_geometric,
    drawing_from_text,
    drawing_to_text,
    load_drawing,
    orientation,
    point,
    save_drawing,
    segments_cross,
    validate_general_position,
)
from .graph import (
    RegularGraph,
    connected_components,
    enumerate_labeled_regular,
    feasible,
    graph_from_text,
    graph_to_text,
    load_graph,
    make_circulant,
    make_complete,
    make_cycle,
    make_graph,
    save_graph,
    shard_prefixes,
)
from .search import (
    SearchResult,
    TableEntry,
    convex_max,
    perturbation_probe,
    reproduce_table,
    sample_drawing,
    sample_regular_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AccountingReport",
    "BoundReport",
    "ConstructionError",
    "ConstructionParams",
    "ConvexOrder",
    "CrossingReport",
    "DegeneracyError",
    "GeometricDrawing",
    "Point",
    "RegularGraph",
    "ResourceLimitError",
    "SearchResult",
    "TableEntry",
    "TypeProfile",
    "best_known",
    "c_function",
    "connected_components",
    "construction_params",
    "convex_max",
    "convex_points",
    "count_crossings_geometric",
    "crossings_convex",
    "drawing_from_order",
    "drawing_from_text",
    "drawing_to_text",
    "endvertex_type",
    "enumerate_labeled_regular",
    "exact_complete",
    "exact_cycle",
    "exact_odd",
    "exact_r_n_2_even",
    "exact_r_n_nminus2",
    "feasible",
    "generalized_star",
    "graph_from_text",
    "graph_to_text",
    "lemma_coverage_check",
    "load_drawing",
    "load_graph",
    "lower_bound_even",
    "make_circulant",
    "make_complete",
    "make_cycle",
    "make_graph",
    "min_noncrossing_pairs",
    "noncrossing_accounting",
    "orientation",
    "perturbation_probe",
    "point",
    "removal_count",
    "reproduce_table",
    "sample_drawing",
    "sample_regular_graph",
    "save_drawing",
    "save_graph",
    "segments_cross",
    "shard_prefixes",
    "star_like_deletion",
    "star_like_even",
    "thrackle_upper",
    "type_profile",
    "upper_bound",
    "validate_general_position",
]
