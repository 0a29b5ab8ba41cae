from .plumbing_graph import INF, PlumbingGraph, Vertex, Weight, validate  # noqa
from .shape import (  # noqa
    GraphShape,
    ShapeKind,
    classify_shape,
    index_theorem_ok,
    intersection_matrix,
    is_minimal_gnc,
    nef_on_genus_zero,
    positivity_index,
    string_decomposition,
)
from .moves import (  # noqa
    MoveKind,
    MoveRecord,
    blow_down,
    blow_up_edge,
    blow_up_point,
    full_blow_down,
    replay,
)
