"""Exact Lelong numbers, slopes and sharp comparison constants on resolution dual graphs."""

from .chainbound import PathBound, global_chain_constant, path_bound
from .coneopt import SharpConstantResult, enumerate_rays, sample_cone, sharp_constant
from .exactnum import Rat, RatMatrix, det, format_rat, is_negative_definite, parse_rat, solve_linear
from .graph import (
    Divisor,
    ResolutionGraph,
    Vertex,
    Violation,
    ade_graph,
    parse_instance,
    serialize_instance,
    single_vertex_graph,
    validate,
)
from .invariants import (
    InvariantReport,
    in_psef_cone,
    lelong,
    multiplicity,
    ord_sequence,
    quotient_bound,
    report,
    slope,
    theta_degrees,
)
from .kernels import BACKEND

__version__ = "0.1.0"
