"""Shared test oracles.

These are deliberately dumber, independent implementations: point-set
enumeration instead of interval arithmetic, and size-ascending subset scans
instead of branch and bound.  They exist so the library is checked against
code that shares none of its logic.
"""
from __future__ import annotations

import itertools

from gridpaths.geometry import GridPath, IntersectionGraph


def h_points(p: GridPath) -> set[tuple[int, int]]:
    lo, hi = p.h_span
    return {(x, p.corner.y) for x in range(lo, hi + 1)}


def v_points(p: GridPath) -> set[tuple[int, int]]:
    lo, hi = p.v_span
    return {(p.corner.x, y) for y in range(lo, hi + 1)}


def all_points(p: GridPath) -> set[tuple[int, int]]:
    return h_points(p) | v_points(p)


def hand_crossings(a: GridPath, b: GridPath) -> tuple[list[tuple[int, int]], bool]:
    """Crossing points and overlap marker by brute point enumeration."""

    def interior_h(p):
        lo, hi = p.h_span
        return {(x, p.corner.y) for x in range(lo + 1, hi)}

    def interior_v(p):
        lo, hi = p.v_span
        return {(p.corner.x, y) for y in range(lo + 1, hi)}

    points = (interior_h(a) & interior_v(b)) | (interior_h(b) & interior_v(a))
    overlap = (
        len(h_points(a) & h_points(b)) >= 2 or len(v_points(a) & v_points(b)) >= 2
    )
    return sorted(points), overlap


def hand_vpg_adjacent(a: GridPath, b: GridPath) -> bool:
    points, overlap = hand_crossings(a, b)
    return bool(points) or overlap


def exhaustive_min_dominating(g: IntersectionGraph) -> set[str]:
    """Smallest dominating set by size-ascending subset enumeration."""
    verts = list(g.vertices)
    closed = {v: g.closed_neighborhood(v) for v in verts}
    everything = set(verts)
    for k in range(len(verts) + 1):
        for combo in itertools.combinations(verts, k):
            covered = set()
            for v in combo:
                covered |= closed[v]
            if covered == everything:
                return set(combo)
    return set(verts)


def exhaustive_max_independent(g: IntersectionGraph) -> set[str]:
    """Largest independent set by size-descending subset enumeration."""
    verts = list(g.vertices)
    for k in range(len(verts), -1, -1):
        for combo in itertools.combinations(verts, k):
            if g.is_independent_set(combo):
                return set(combo)
    return set()


def find_disjoint_optimum(g: IntersectionGraph, taboo: set[str], k: int) -> set[str] | None:
    """A dominating set of size k avoiding the taboo vertices, if one exists."""
    candidates = [v for v in g.vertices if v not in taboo]
    closed = {v: g.closed_neighborhood(v) for v in candidates}
    everything = set(g.vertices)
    for combo in itertools.combinations(candidates, k):
        covered = set()
        for v in combo:
            covered |= closed[v]
        if covered == everything:
            return set(combo)
    return None
