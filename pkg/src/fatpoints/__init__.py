"""Schemes of double and reduced points in P^2 with a prescribed Hilbert function."""

from .builder import (
    LabeledScheme,
    all_doubles_criterion,
    asymptotic_table,
    construct,
    cor313_criterion,
    double_bounds,
    k_configuration,
    merge,
    near_star_scheme,
    predicted_double_count,
    s_of_t,
    star_plus_point_scheme,
    star_scheme,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    Arrangement,
    ProjLine,
    ProjPoint,
    incident,
    intersect,
    is_general_position,
    points_on_line_avoiding,
    random_arrangement,
)
from .hfcore import (
    DeltaH,
    HilbertFunction,
    accumulate,
    conjugate,
    degree_split,
    first_difference,
    generic_double_delta,
    parse_delta,
    render_dot_diagram,
    star_delta,
    star_plus_point_delta,
    validate_delta,
)
from .oracle import delta_hf, hilbert_function, ideal_dimension
from .scheme import (
    FatPointScheme,
    ReductionVector,
    colon_by_line,
    gms_hilbert,
    line_intersection_degree,
    reduction_vector,
    scheme_degree,
    totally_reduces,
)

__version__ = "0.1.0"
