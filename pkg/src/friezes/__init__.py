"""Exact frieze patterns of type Lambda_p, their dissection and strip models,
and rank-two Cartan graphs."""

from .cartan import (
    CartanGraph,
    CartanMatrix2,
    Root,
    check_root_system,
    graph_from_quiddity,
    quiddity_of_graph,
    real_roots,
    reflect,
    roots_from_frieze,
    rotation_order,
    sequences_equivalent,
    simply_connected_up_to,
    standard_graph,
    validate_graph,
)
from .chebyshev import c_polynomial, v_eval, v_polynomial, v_sequence
from .dissection import (
    Dissection,
    all_entries,
    build_dissection,
    entries_from_vertex,
    enumerate_dissections,
    enumerate_p_angulations,
    quiddity,
)
from .errors import (
    ConstructionBug,
    CrossingError,
    InvalidArgument,
    NotAFriezeError,
    NotAnInfiniteFriezeError,
    PositivityError,
    ValidationFailure,
)
from .field import FieldContext, FieldElement, convert, embed_lambda, get_context, minimal_polynomial
from .frieze import FriezePattern, characterize_46, from_quiddity, to_dissection, type_of, verify
from .strip import (
    InfiniteFriezeView,
    PeriodicQuiddity,
    StripAngulation,
    from_strip,
    is_infinite_frieze,
    positivity_check,
    theta_arcs,
    to_strip,
    validate_strip,
    vertex_report,
)

__version__ = "0.1.0"
