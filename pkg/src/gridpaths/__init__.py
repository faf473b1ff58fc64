"""Approximation algorithms, exact oracles and generators for single-bend
grid path intersection graphs (B1-VPG and B1-EPG representations)."""

from .errors import (
    GeneralPositionViolation,
    GenerationExhausted,
    GridPathsError,
    Infeasible,
    LayoutFailure,
    NetFailure,
    NotDominating,
    NotHitting,
    NotOneString,
    ParseError,
    TooFewPaths,
    TooLarge,
    UnknownId,
    WrongMode,
    DegreeTooHigh,
)
from .geometry import (
    GridPath,
    GridPoint,
    IntersectionGraph,
    Mode,
    PathType,
    Representation,
    build_graph,
    classify_type,
    crossing_points,
    epg_adjacent,
    is_one_string,
    split_neighbors,
    vpg_adjacent,
    weak_general_position,
)
from .mis import approx_mis, approx_mis_single_type, compute_xmed, partition_LMR, split_by_type
from .mds_vpg import (
    Axis,
    Cross,
    NetParams,
    Segment,
    SetSystem,
    approx_mds_one_string,
    axis_net,
    bg_hitting_set,
    build_cross,
    build_set_system,
    combined_net,
    crosses_intersect,
    ds_to_hs,
    hs_to_ds,
    verify_hitting,
)
from .mds_epg import (
    check_non_containment,
    detect_vertical_line,
    greedy_line_mds,
    is_double_crossing,
    is_vertical_crossing,
    order_paths,
)
from .reduction import (
    ReductionInstance,
    SimpleGraph,
    gadget_graph,
    map_back,
    reduce_vc_to_mds,
    verify_reduction,
)
from .exact import brute_hs, brute_mds, brute_mis, brute_vc
from .generators import (
    gen_degree3_graph,
    gen_epg_double_crossing,
    gen_epg_vertical_crossing,
    gen_vpg,
)
from .instance_io import Instance, emit_graph, emit_instance, parse_graph, parse_instance

__all__ = [name for name in dir() if not name.startswith("_")]
