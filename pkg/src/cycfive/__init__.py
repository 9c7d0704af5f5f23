"""Cyclic edge-connectivity of cubic graphs and completion of cyclic parts of cyclically 5-connected cubic graphs."""
from .completion import (
    CutDecomposition,
    CyclicPart,
    DistanceGraph,
    Extension,
    choose_permutation,
    complete,
    distance_graph,
    extend,
    find_distribution,
    girth_condition,
    make_part,
    remove_path2,
    repair,
    single_vertex_completions,
    single_vertex_obstruction,
)
from .cyccut import (
    CutSearchResult,
    SixPoleClass,
    SixPoleTag,
    classify_six_pole,
    fragments,
    is_cycle_separating,
    min_cycle_separating_cut,
    zeta,
)
from .graph import (
    CubicGraph,
    Edge,
    EdgeCut,
    boundary,
    bridges_and_blocks,
    components,
    cycle_rank,
    distance,
    girth,
    induced,
    parse_graph,
    serialize_graph,
)

__version__ = "0.1.0"

__all__ = [
    "CutDecomposition",
    "CyclicPart",
    "DistanceGraph",
    "Extension",
    "choose_permutation",
    "complete",
    "distance_graph",
    "extend",
    "find_distribution",
    "girth_condition",
    "make_part",
    "remove_path2",
    "repair",
    "single_vertex_completions",
    "single_vertex_obstruction",
    "CutSearchResult",
    "SixPoleClass",
    "SixPoleTag",
    "classify_six_pole",
    "fragments",
    "is_cycle_separating",
    "min_cycle_separating_cut",
    "zeta",
    "CubicGraph",
    "Edge",
    "EdgeCut",
    "boundary",
    "bridges_and_blocks",
    "components",
    "cycle_rank",
    "distance",
    "girth",
    "induced",
    "parse_graph",
    "serialize_graph",
]
