"""Vertex-distinguishing edge colorings of hypercubes, palettes read by dimension."""

from .constructions import (
    color_swapped,
    complement_palette,
    dimension_permuted,
    general_two_coloring,
    h5_base,
    proper_n_coloring,
    proper_table,
)
from .errors import DomainError, FormatError, RangeError
from .hypercube import (
    Coloring,
    EdgeRef,
    all_palettes,
    edge_from_index,
    edge_index,
    make_hypercube,
    neighbors,
    palette,
)
from .search import Budget, SearchOutcome, Status, brute_force_oracle, feasible, min_colors, permutation_csp
from .verify import distinguishes, is_proper

__all__ = [
    "Budget", "Coloring", "DomainError", "EdgeRef", "FormatError", "RangeError",
    "SearchOutcome", "Status", "all_palettes", "brute_force_oracle", "color_swapped",
    "complement_palette", "dimension_permuted", "distinguishes", "edge_from_index",
    "edge_index", "feasible", "general_two_coloring", "h5_base", "is_proper",
    "make_hypercube", "min_colors", "neighbors", "palette", "permutation_csp",
    "proper_n_coloring", "proper_table",
]
