"""Verification toolkit for generalized open/closed set classes, separation
properties, and preservation statements on finite topological spaces."""

from .classes import (
    RALPHA_ANALOGY,
    RALPHA_DEFNS,
    RALPHA_INT_CL,
    ClassificationReport,
    ClassLabel,
    DUAL_LABEL,
    alpha_closure,
    alpha_interior,
    classify,
    family_of,
    is_alpha_closed,
    is_alpha_open,
    is_c_star_closed,
    is_c_star_open,
    is_g_alpha_closed,
    is_g_alpha_open,
    is_g_closed,
    is_g_open,
    is_gsc_star_closed,
    is_gsc_star_open,
    is_regular_closed,
    is_regular_open,
    is_regularly_sc_star_closed,
    is_regularly_sc_star_open,
    is_rg_alpha_closed,
    is_rg_alpha_open,
    is_rgsc_star_closed,
    is_rgsc_star_open,
    is_sc_star_closed,
    is_sc_star_g_closed,
    is_sc_star_g_open,
    is_sc_star_open,
    is_semi_closed,
    is_semi_open,
    satisfies,
    sc_star_closure,
    sc_star_closure_verified,
    sc_star_interior,
    semi_closure,
)
from .core import (
    FiniteSpace,
    GroundMismatch,
    InternalInvariantError,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    PointOutOfRange,
    PointSet,
    SetFamily,
    SizeTooLarge,
    TopologyError,
    UnknownClaim,
    validate_topology,
)
from .documents import (
    ParseError,
    SpaceDocument,
    parse_map,
    parse_space,
    serialize_space,
    subset_from_spec,
)
from .maps import (
    MapProfile,
    SpaceMap,
    Verdict,
    check_closed_image_preservation,
    check_open_image_preservation,
    constant_map,
    identity_map,
    is_almost_sc_star_irresolute,
    is_continuous,
    is_rc_continuous,
    is_sc_star_neighborhood,
    is_surjective,
    is_t_sc_star_closed,
    is_t_sc_star_open,
    profile,
)
from .search import (
    CLAIMS,
    Claim,
    CounterexampleReport,
    SweepOptions,
    SweepResult,
    enumerate_maps,
    enumerate_topologies,
    find_first,
    sweep_claim,
)
from .separation import (
    SandwichWitness,
    SeparationCheck,
    SeparationWitness,
    characterizations_agree,
    is_almost_normal,
    is_almost_sc_star_normal,
    is_normal,
    normality_characterizations,
    rgsc_star_open_characterization,
    sandwich_witness,
    separating_witness,
)

__version__ = "0.1.0"
