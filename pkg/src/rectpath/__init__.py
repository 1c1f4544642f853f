"""Exact first-return maps and center decisions for rectangular Abel-type equations."""

from .bautin import BautinSystem, bautin_system, ideal_probe, quasi_homogeneity_check, variety_membership
from .center import CenterVerdict, certify_center, is_center, reduce_word, theorem2_bound
from .errors import (
    BranchError,
    InternalConsistencyError,
    KindError,
    ParseError,
    RectPathError,
    ResourceError,
)
from .free_algebra import (
    NCSeries,
    StepCoefficients,
    chen_E,
    compositions_of_weight,
    iterated_integral_direct,
    nc_exp,
    nc_log,
    nc_mul,
    shuffle_pairs,
)
from .oracle import FlowResult, convergence_check, segment_flow, word_flow
from .return_map import (
    Letter,
    Word,
    basic_return_map,
    p_factor,
    q_factor,
    return_map,
    route_A,
    route_B,
    route_C,
)
from .rings import GaussQ, Poly
from .series import (
    GeneralSeries,
    MapSeries,
    ps_binom_pow,
    ps_comp_inverse,
    ps_compose,
    ps_eval,
    ps_ring_ops,
)

__version__ = "0.1.0"
