"""Exact brute-force solvers for desk-scale instances.

All solvers use bitset adjacency and branch-and-bound, verify feasibility of
their answer before returning, and are deterministic for a fixed input.  The
size caps keep accidental research-scale calls from hanging; they are
configuration constants and each solver accepts an explicit override.
"""
from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from .errors import TooLarge
from .geometry import IntersectionGraph

if TYPE_CHECKING:  # pragma: no cover
    from .mds_vpg import SetSystem
    from .reduction import SimpleGraph

MAX_MIS_VERTICES = 25
MAX_MDS_VERTICES = 25
MAX_HS_UNIVERSE = 50
MAX_HS_SETS = 25
MAX_VC_VERTICES = 20


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x -= low


def _index_graph(g: IntersectionGraph) -> tuple[list[str], list[int]]:
    """Sorted vertex list plus open-neighborhood bitmasks."""
    ids = list(g.vertices)
    pos = {v: i for i, v in enumerate(ids)}
    masks = [0] * len(ids)
    for v in ids:
        m = 0
        for w in g.neighbors(v):
            m |= 1 << pos[w]
        masks[pos[v]] = m
    return ids, masks


def brute_mis(g: IntersectionGraph, cap: int = MAX_MIS_VERTICES) -> set[str]:
    """Maximum independent set by branch and bound with a degree pivot.

    Only the size is contractual; the returned set is one deterministic
    maximizer.
    """
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {cap}")
    ids, adj = _index_graph(g)
    n = len(ids)
    if n == 0:
        return set()

    # Greedy seed: repeatedly take the minimum-degree remaining vertex.
    best_set = 0
    remaining = (1 << n) - 1
    while remaining:
        v = min(_bits(remaining), key=lambda i: _popcount(adj[i] & remaining))
        best_set |= 1 << v
        remaining &= ~(adj[v] | (1 << v))
    best = [best_set, _popcount(best_set)]

    def search(candidates: int, chosen: int, size: int):
        if size + _popcount(candidates) <= best[1]:
            return
        if candidates == 0:
            best[0], best[1] = chosen, size
            return
        # Pivot on the highest-degree candidate: include it or drop it.
        v = max(_bits(candidates), key=lambda i: _popcount(adj[i] & candidates))
        search(candidates & ~(adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        search(candidates & ~(1 << v), chosen, size)

    search((1 << n) - 1, 0, 0)
    result = {ids[i] for i in _bits(best[0])}
    if not g.is_independent_set(result):
        raise RuntimeError("internal error: solver produced a dependent set")
    return result


def brute_mds(g: IntersectionGraph, cap: int = MAX_MDS_VERTICES) -> set[str]:
    """Minimum dominating set by set-cover branch and bound.

    Branches on the undominated vertex with the fewest potential dominators;
    prunes with a disjoint closed-neighborhood packing bound.
    """
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {cap}")
    ids, adj = _index_graph(g)
    n = len(ids)
    if n == 0:
        return set()
    closed = [adj[i] | (1 << i) for i in range(n)]
    full = (1 << n) - 1

    def greedy() -> int:
        chosen = 0
        covered = 0
        while covered != full:
            v = max(range(n), key=lambda i: (_popcount(closed[i] & ~covered), -i))
            chosen |= 1 << v
            covered |= closed[v]
        return chosen

    best_mask = greedy()
    best = [best_mask, _popcount(best_mask)]

    def lower_bound(uncovered: int) -> int:
        # Greedy packing of vertices with pairwise disjoint closed
        # neighborhoods; each packed vertex needs its own dominator.
        bound = 0
        blocked = 0
        for v in _bits(uncovered):
            if closed[v] & blocked:
                continue
            bound += 1
            blocked |= closed[v]
        return bound

    def search(covered: int, chosen_mask: int, size: int):
        if covered == full:
            if size < best[1]:
                best[0], best[1] = chosen_mask, size
            return
        uncovered = full & ~covered
        if size + lower_bound(uncovered) >= best[1]:
            return
        # Undominated vertex with the fewest candidate dominators.
        u = min(_bits(uncovered), key=lambda i: _popcount(closed[i]))
        cands = sorted(
            _bits(closed[u]), key=lambda d: (-_popcount(closed[d] & uncovered), d)
        )
        for d in cands:
            search(covered | closed[d], chosen_mask | (1 << d), size + 1)

    search(0, 0, 0)
    result = {ids[i] for i in _bits(best[0])}
    if not g.is_dominating_set(result):
        raise RuntimeError("internal error: solver produced a non-dominating set")
    return result


def brute_hs(
    system: "SetSystem",
    universe_cap: int = MAX_HS_UNIVERSE,
    sets_cap: int = MAX_HS_SETS,
) -> set[int]:
    """Minimum hitting set over a set system, exact."""
    m = len(system.sets)
    u = len(system.universe)
    if u > universe_cap:
        raise TooLarge(f"universe of {u} exceeds the cap of {universe_cap}")
    if m > sets_cap:
        raise TooLarge(f"{m} sets exceeds the cap of {sets_cap}")
    set_masks = []
    for members in system.sets:
        mask = 0
        for e in members:
            mask |= 1 << e
        set_masks.append(mask)

    # Greedy seed: element hitting the most unhit sets.
    def greedy() -> set[int]:
        chosen: set[int] = set()
        unhit = list(range(m))
        while unhit:
            counts = [0] * u
            for c in unhit:
                for e in _bits(set_masks[c]):
                    counts[e] += 1
            e = max(range(u), key=lambda i: (counts[i], -i))
            chosen.add(e)
            unhit = [c for c in unhit if not (set_masks[c] >> e) & 1]
        return chosen

    best = [greedy()]

    def lower_bound(unhit: list[int]) -> int:
        # Pairwise-disjoint unhit sets each need their own element.
        blocked = 0
        lb = 0
        for c in sorted(unhit, key=lambda c: _popcount(set_masks[c])):
            if set_masks[c] & blocked:
                continue
            lb += 1
            blocked |= set_masks[c]
        return lb

    def search(unhit: list[int], chosen: set[int]):
        if not unhit:
            if len(chosen) < len(best[0]):
                best[0] = set(chosen)
            return
        if len(chosen) + lower_bound(unhit) >= len(best[0]):
            return
        pick = min(unhit, key=lambda c: _popcount(set_masks[c]))
        for e in _bits(set_masks[pick]):
            rest = [c for c in unhit if not (set_masks[c] >> e) & 1]
            chosen.add(e)
            search(rest, chosen)
            chosen.remove(e)

    search(list(range(m)), set())
    result = best[0]
    for members in system.sets:
        if not result & set(members):
            raise RuntimeError("internal error: solver missed a set")
    return result


def brute_vc(g: "SimpleGraph", cap: int = MAX_VC_VERTICES) -> set[int]:
    """Minimum vertex cover by branching on an uncovered edge."""
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the cap of {cap}")
    edges = list(g.edges)
    best = [set(range(g.n))]

    def search(remaining: Sequence[tuple[int, int]], chosen: set[int]):
        if len(chosen) >= len(best[0]):
            return
        live = [(a, b) for a, b in remaining if a not in chosen and b not in chosen]
        if not live:
            best[0] = set(chosen)
            return
        a, b = live[0]
        chosen.add(a)
        search(live, chosen)
        chosen.remove(a)
        chosen.add(b)
        search(live, chosen)
        chosen.remove(b)

    search(edges, set())
    result = best[0]
    for a, b in edges:
        if a not in result and b not in result:
            raise RuntimeError("internal error: solver missed an edge")
    return result
