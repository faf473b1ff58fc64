"""Dominating sets on one-string B1-VPG representations via hitting sets.

Every path gets a cross of two supporting segments, slightly offset so
that two crosses intersect exactly when the underlying paths properly cross:
the corner ends stick out a quarter grid unit past the corner and the tip
ends are pulled back three quarters.  Dominating sets translate to hitting
sets over the supporting segments and back, and the hitting set itself is
approximated by weighted epsilon-net sampling inside an iterative-doubling
loop.

All coordinates in this module are quarter units (public grid coordinates
times four), which keeps the quarter offsets exact in integers.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NetFailure, NotDominating, NotHitting, NotOneString, UnknownId
from .geometry import (
    GridPath,
    IntersectionGraph,
    Representation,
    build_graph,
    is_one_string,
)

SCALE = 4  # quarter units per grid unit
_CORNER_OVERHANG = 1  # one quarter past the corner
_TIP_PULLBACK = 3  # three quarters short of the tip


class Axis(Enum):
    H = "H"
    V = "V"


@dataclass(frozen=True)
class Segment:
    """Axis-parallel supporting segment in quarter-unit coordinates.

    anchor is the fixed coordinate (y for horizontal, x for vertical);
    the closed span [lo, hi] runs along the segment's axis.
    """

    axis: Axis
    anchor: int
    lo: int
    hi: int
    owner: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("segment span is inverted")


@dataclass(frozen=True)
class Cross:
    owner: str
    h_support: Segment
    v_support: Segment
    degenerate: bool = False


@dataclass(frozen=True)
class NetParams:
    """Tuning knobs for the sampling net finder, with the RNG seed."""

    sample_constant: float = 4.0
    max_resamples: int = 64
    rng_seed: int = 0

    def __post_init__(self):
        if self.sample_constant < 1:
            raise ValueError("sample_constant must be at least 1")
        if self.max_resamples < 1:
            raise ValueError("max_resamples must be positive")


@dataclass
class SetSystem:
    """Hitting-set system: two supporting segments per path, one set per
    cross, plus the mutable weights driving the reweighting loop."""

    universe: list[Segment]
    sets: list[list[int]]
    weights: list[int]
    crosses: list[Cross]
    path_ids: list[str]
    graph: IntersectionGraph


def _support(axis: Axis, anchor: int, corner_c: int, tip_c: int, owner: str) -> tuple[Segment, bool]:
    """One supporting segment along an arm running corner_c -> tip_c.

    Arms shorter than one grid unit would invert after the tip pullback;
    those collapse to a point at the corner-side end and are flagged.
    """
    direction = 1 if tip_c >= corner_c else -1
    corner_end = SCALE * corner_c - direction * _CORNER_OVERHANG
    tip_end = SCALE * tip_c - direction * _TIP_PULLBACK
    if (tip_end - corner_end) * direction < 0:
        return Segment(axis, anchor, corner_end, corner_end, owner), True
    lo, hi = min(corner_end, tip_end), max(corner_end, tip_end)
    return Segment(axis, anchor, lo, hi, owner), False


def build_cross(path: GridPath) -> Cross:
    """The cross of a path: offset copies of its two parts in quarter units."""
    h_seg, h_bad = _support(
        Axis.H, SCALE * path.corner.y, path.corner.x, path.h_tip.x, path.id
    )
    v_seg, v_bad = _support(
        Axis.V, SCALE * path.corner.x, path.corner.y, path.v_tip.y, path.id
    )
    return Cross(path.id, h_seg, v_seg, degenerate=h_bad or v_bad)


def segments_intersect(a: Segment, b: Segment) -> bool:
    """Closed point-set intersection of two axis-parallel segments."""
    if a.axis is b.axis:
        return a.anchor == b.anchor and max(a.lo, b.lo) <= min(a.hi, b.hi)
    h, v = (a, b) if a.axis is Axis.H else (b, a)
    return h.lo <= v.anchor <= h.hi and v.lo <= h.anchor <= v.hi


def crosses_intersect(a: Cross, b: Cross) -> bool:
    """True iff any supporting segment of a meets any supporting segment of b."""
    for s in (a.h_support, a.v_support):
        for t in (b.h_support, b.v_support):
            if segments_intersect(s, t):
                return True
    return False


def build_set_system(rep: Representation) -> SetSystem:
    """Universe of all 2n supporting segments and, per cross, the set of
    elements meeting it.  A cross's own two segments belong to its set by
    definition, regardless of degeneracy."""
    if not is_one_string(rep):
        raise NotOneString("set system requires a one-string representation")
    crosses = [build_cross(p) for p in rep.paths]
    universe: list[Segment] = []
    for c in crosses:
        universe.append(c.h_support)
        universe.append(c.v_support)
    sets: list[list[int]] = []
    for idx, c in enumerate(crosses):
        members = {2 * idx, 2 * idx + 1}
        for j, e in enumerate(universe):
            if segments_intersect(e, c.h_support) or segments_intersect(
                e, c.v_support
            ):
                members.add(j)
        sets.append(sorted(members))
    return SetSystem(
        universe=universe,
        sets=sets,
        weights=[1] * len(universe),
        crosses=crosses,
        path_ids=[p.id for p in rep.paths],
        graph=build_graph(rep),
    )


def ds_to_hs(ds: set[str], system: SetSystem) -> set[int]:
    """Both supporting segments of every dominating path; hits every set."""
    known = set(system.path_ids)
    for p in ds:
        if p not in known:
            raise UnknownId(p)
    if not system.graph.is_dominating_set(ds):
        raise NotDominating("input is not a dominating set")
    index = {pid: i for i, pid in enumerate(system.path_ids)}
    out: set[int] = set()
    for p in ds:
        out.add(2 * index[p])
        out.add(2 * index[p] + 1)
    return out


def hs_to_ds(hs: set[int], system: SetSystem) -> set[str]:
    """Owners of the hitting elements; dominates the derived graph."""
    for e in hs:
        if not 0 <= e < len(system.universe):
            raise UnknownId(f"element index {e}")
    if verify_hitting(system, hs) is not None:
        raise NotHitting("input does not hit every set")
    return {system.universe[e].owner for e in hs}


def verify_hitting(system: SetSystem, candidate: set[int]) -> int | None:
    """Index of the first unhit set, or None when the candidate hits all."""
    chosen = set(candidate)
    for idx, members in enumerate(system.sets):
        if chosen.isdisjoint(members):
            return idx
    return None


def _axis_elements(system: SetSystem, axis: Axis) -> list[int]:
    return [i for i, s in enumerate(system.universe) if s.axis is axis]


def axis_net(
    system: SetSystem,
    axis: Axis,
    eps: Fraction,
    params: NetParams,
    rng: random.Random | None = None,
) -> set[int]:
    """Weighted sample of axis elements hitting every set whose axis-restricted
    weighted mass reaches eps times the axis total.

    Each sample is verified exhaustively; failed draws are retried up to
    params.max_resamples times before NetFailure.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    if rng is None:
        rng = random.Random(params.rng_seed)
    elements = _axis_elements(system, axis)
    if not elements:
        return set()
    weights = [system.weights[i] for i in elements]
    total = sum(weights)
    if total == 0:
        return set()
    axis_set = set(elements)
    demanding: list[set[int]] = []
    for members in system.sets:
        restricted = axis_set.intersection(members)
        mass = sum(system.weights[e] for e in restricted)
        if mass > 0 and mass >= eps * total:
            demanding.append(restricted)
    if not demanding:
        return set()
    size = max(
        1,
        math.ceil(
            params.sample_constant * float(1 / eps) * math.log(float(1 / eps) + 2)
        ),
    )
    for _ in range(params.max_resamples):
        net = set(rng.choices(elements, weights=weights, k=size))
        if all(net & group for group in demanding):
            return net
    raise NetFailure(f"no verified {eps}-net for axis {axis.value} after "
                     f"{params.max_resamples} samples")


def combined_net(
    system: SetSystem,
    eps: Fraction,
    params: NetParams,
    rng: random.Random | None = None,
) -> set[int]:
    """Union of half-eps nets per axis.

    A set with weighted mass at least eps times the full total places at
    least half that mass on one axis, so the corresponding axis net hits it.
    """
    eps = Fraction(eps)
    if rng is None:
        rng = random.Random(params.rng_seed)
    half = eps / 2
    return axis_net(system, Axis.H, half, params, rng) | axis_net(
        system, Axis.V, half, params, rng
    )


def _prune_hitting_set(system: SetSystem, net: set[int]) -> set[int]:
    """Drop redundant elements while every set stays hit.

    Elements covering few sets go first, so widely shared elements survive;
    ties break on the index, keeping the scan deterministic.
    """
    counts = [0] * len(system.sets)
    containing: dict[int, list[int]] = {e: [] for e in net}
    for idx, members in enumerate(system.sets):
        for e in members:
            if e in containing:
                counts[idx] += 1
                containing[e].append(idx)
    kept = set(net)
    for e in sorted(net, key=lambda e: (len(containing[e]), e)):
        if all(counts[idx] >= 2 for idx in containing[e]):
            kept.remove(e)
            for idx in containing[e]:
                counts[idx] -= 1
    return kept


def bg_hitting_set(system: SetSystem, params: NetParams) -> set[int]:
    """Hitting set by iterative doubling over an optimum guess r.

    For each guess the weights reset to one and 1/(2r)-nets are drawn; an
    unhit set returned by the verifier is light (a verified net hits every
    heavy set), so its elements' weights double.  Light sets can only double
    a bounded number of times before the guess is provably too small, at
    which point r doubles.  Once r reaches the universe size every set
    qualifies for the nets, so termination is guaranteed; a sampling failure
    falls back to the exhaustive net (the whole universe).  Redundant
    elements are pruned from the verified answer before returning.
    """
    n_elems = len(system.universe)
    if n_elems == 0:
        return set()
    rng = random.Random(params.rng_seed)
    r = 1
    while True:
        system.weights[:] = [1] * n_elems
        budget = max(1, math.ceil(4 * r * math.log2(n_elems / r + 2)))
        doublings = 0
        while doublings < budget:
            try:
                net = combined_net(system, Fraction(1, 2 * r), params, rng)
            except NetFailure:
                try:
                    net = combined_net(system, Fraction(1, 2 * r), params, rng)
                except NetFailure:
                    net = set(range(n_elems))
            unhit = verify_hitting(system, net)
            if unhit is None:
                return _prune_hitting_set(system, net)
            doublings += 1
            members = system.sets[unhit]
            mass = sum(system.weights[e] for e in members)
            total = sum(system.weights)
            if 2 * r * mass <= total:
                for e in members:
                    system.weights[e] *= 2
        r *= 2


def approx_mds_one_string(rep: Representation, params: NetParams) -> set[str]:
    """Dominating set via the set system, the doubling hitting set, and the
    owner mapping; the answer is verified to dominate before returning."""
    system = build_set_system(rep)
    hitting = bg_hitting_set(system, params)
    ds = hs_to_ds(hitting, system)
    if not system.graph.is_dominating_set(ds):
        raise RuntimeError("internal error: pipeline produced a non-dominating set")
    return ds
