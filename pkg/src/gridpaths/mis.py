"""Logarithmic-factor approximation for maximum independent set on B1-VPG
representations.

The recursion splits one bend type at the median corner x-coordinate: the
strictly-left and strictly-right groups are solved recursively, the group
meeting the split line is solved exactly (it stays small at desk scale), and
the larger of the two answers wins.  Running it once per bend type and
keeping the best result costs another factor four in the guarantee.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import TooFewPaths, WrongMode
from .exact import brute_mis
from .geometry import (
    GridPath,
    GridPoint,
    Mode,
    PathType,
    Representation,
    build_graph,
    classify_type,
    vpg_adjacent,
)

_BUCKET_ORDER = (PathType.LL, PathType.UL, PathType.UR, PathType.LR)

# Reflection signs that carry each bend type into the LL frame.
_REFLECT = {
    PathType.LL: (1, 1),
    PathType.UL: (1, -1),
    PathType.LR: (-1, 1),
    PathType.UR: (-1, -1),
}


def split_by_type(rep: Representation) -> dict[PathType, list[GridPath]]:
    """Assign every path to exactly one bend-type bucket."""
    if rep.mode is not Mode.VPG:
        raise WrongMode("type split applies to VPG representations")
    buckets: dict[PathType, list[GridPath]] = {t: [] for t in _BUCKET_ORDER}
    for p in rep.paths:
        buckets[classify_type(p)].append(p)
    return buckets


def compute_xmed(paths: Sequence[GridPath]) -> Fraction:
    """Midpoint of the two middle corner x-coordinates, as an exact rational."""
    if len(paths) < 2:
        raise TooFewPaths("median split needs at least two paths")
    xs = sorted(p.corner.x for p in paths)
    k = len(xs) // 2
    return Fraction(xs[k - 1] + xs[k], 2)


def partition_LMR(
    paths: Iterable[GridPath], xmed: Fraction
) -> tuple[list[GridPath], list[GridPath], list[GridPath]]:
    """Partition paths into strictly-left, line-meeting and strictly-right
    groups relative to the vertical line x = xmed.  A single point of contact
    counts as meeting the line."""
    left: list[GridPath] = []
    middle: list[GridPath] = []
    right: list[GridPath] = []
    for p in paths:
        lo, hi = p.x_span
        if hi < xmed:
            left.append(p)
        elif lo > xmed:
            right.append(p)
        else:
            middle.append(p)
    return left, middle, right


def _reflect(path: GridPath, sx: int, sy: int) -> GridPath:
    return GridPath(
        path.id,
        GridPoint(sx * path.corner.x, sy * path.corner.y),
        GridPoint(sx * path.h_tip.x, sy * path.h_tip.y),
        GridPoint(sx * path.v_tip.x, sy * path.v_tip.y),
    )


def _exact_mis(paths: Sequence[GridPath]) -> set[str]:
    if not paths:
        return set()
    g = build_graph(Representation(Mode.VPG, tuple(paths)))
    return brute_mis(g)


def _base_case(paths: Sequence[GridPath]) -> set[str]:
    if len(paths) <= 1:
        return {p.id for p in paths}
    a, b = sorted(paths, key=lambda p: p.id)
    if vpg_adjacent(a, b):
        return {a.id}
    return {a.id, b.id}


def approx_mis_single_type(paths: Sequence[GridPath]) -> set[str]:
    """Divide-and-conquer approximation for paths of a single bend type.

    The answer is independent and at least a 1/max(1, log2 n) fraction of the
    bucket's optimum.  Raises ValueError on mixed-type input; the middle
    group is solved with the exact desk-scale solver, so its cap applies.
    """
    paths = list(paths)
    if not paths:
        return set()
    kinds = {classify_type(p) for p in paths}
    if len(kinds) > 1:
        raise ValueError(f"mixed bend types: {sorted(k.value for k in kinds)}")
    sx, sy = _REFLECT[kinds.pop()]
    frame = [_reflect(p, sx, sy) for p in paths]
    depth_cap = len(frame) + 2

    def solve(group: Sequence[GridPath], depth: int) -> set[str]:
        if depth > depth_cap:
            raise RuntimeError("median recursion failed to shrink")
        if len(group) <= 2:
            return _base_case(group)
        xmed = compute_xmed(group)
        left, middle, right = partition_LMR(group, xmed)
        side = solve(left, depth + 1) | solve(right, depth + 1)
        central = _exact_mis(middle)
        # Equality favors the two-sided answer, for reproducibility.
        return side if len(side) >= len(central) else central

    return solve(frame, 0)


def approx_mis(rep: Representation) -> set[str]:
    """Best single-type answer across the four bend-type buckets.

    Guarantee: at least OPT / (4 * max(1, log2 n)) paths, always independent.
    """
    buckets = split_by_type(rep)
    best: set[str] = set()
    for kind in _BUCKET_ORDER:
        candidate = approx_mis_single_type(buckets[kind])
        if len(candidate) > len(best):
            best = candidate
    return best
