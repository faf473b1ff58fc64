"""Greedy dominating sets on B1-EPG representations, plus the validators for
the two restricted families where the greedy carries a ratio guarantee
(factor 2 when every path crosses a fixed horizontal and vertical line,
factor 3 when every path crosses only a vertical line and no vertical part
contains another among vertically edge-sharing pairs)."""
from __future__ import annotations

from typing import Sequence

from .errors import GeneralPositionViolation, WrongMode
from .geometry import (
    GridPath,
    Mode,
    PathType,
    Representation,
    build_graph,
    classify_type,
)


def order_paths(paths: Sequence[GridPath]) -> list[GridPath]:
    """Scan order: ascending corner y, ties broken by ascending corner x.

    Requires pairwise distinct corners, so no full tie is possible.
    """
    corners = [p.corner for p in paths]
    if len(set(corners)) != len(corners):
        raise GeneralPositionViolation("two paths share a corner")
    return sorted(paths, key=lambda p: (p.corner.y, p.corner.x))


def greedy_line_mds(rep: Representation) -> set[str]:
    """Sweep the paths in scan order, keeping each survivor and deleting its
    closed neighborhood (adjacency taken from the original graph).  The
    answer dominates the derived graph on any EPG input in weak general
    position; the ratio guarantees need the line assumptions."""
    if rep.mode is not Mode.EPG:
        raise WrongMode("greedy line MDS applies to EPG representations")
    graph = build_graph(rep)  # raises on a general-position violation
    alive = set(graph.vertices)
    chosen: set[str] = set()
    for p in order_paths(rep.paths):
        if p.id in alive:
            chosen.add(p.id)
            alive -= graph.closed_neighborhood(p.id)
    return chosen


def detect_vertical_line(rep: Representation) -> int | None:
    """Lowest integer x whose vertical line meets every horizontal part, or
    None when the horizontal spans have empty common intersection (an empty
    representation reports None)."""
    if not rep.paths:
        return None
    lo = max(p.h_span[0] for p in rep.paths)
    hi = min(p.h_span[1] for p in rep.paths)
    if lo > hi:
        return None
    return lo


def is_double_crossing(rep: Representation, hline: int, vline: int) -> bool:
    """Every path is LL type, its horizontal part crosses x = vline, its
    vertical part crosses y = hline, and its corner sits in the closed
    lower-left quadrant of the two lines.  Endpoint contact counts as
    crossing.  Vacuously true when empty."""
    for p in rep.paths:
        if classify_type(p) is not PathType.LL:
            return False
        if not p.h_span[0] <= vline <= p.h_span[1]:
            return False
        if not p.v_span[0] <= hline <= p.v_span[1]:
            return False
        if p.corner.x > vline or p.corner.y > hline:
            return False
    return True


def is_vertical_crossing(rep: Representation, vline: int) -> bool:
    """Every path's horizontal part crosses x = vline (endpoint contact counts)."""
    return all(p.h_span[0] <= vline <= p.h_span[1] for p in rep.paths)


def check_non_containment(rep: Representation) -> bool:
    """Among pairs whose vertical parts share a grid edge, neither vertical
    part's point set may contain the other's."""
    paths = rep.paths
    for i, p in enumerate(paths):
        for q in paths[i + 1 :]:
            if p.corner.x != q.corner.x:
                continue
            p_lo, p_hi = p.v_span
            q_lo, q_hi = q.v_span
            if min(p_hi, q_hi) - max(p_lo, q_lo) < 1:
                continue  # no shared edge
            if (q_lo <= p_lo and p_hi <= q_hi) or (p_lo <= q_lo and q_hi <= p_hi):
                return False
    return True
