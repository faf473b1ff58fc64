"""Cross construction, hitting-set system, nets and the doubling pipeline."""
import random
from fractions import Fraction

import pytest

from gridpaths.errors import NotDominating, NotHitting, NotOneString
from gridpaths.exact import brute_hs, brute_mds
from gridpaths.generators import gen_vpg
from gridpaths.geometry import (
    GridPath,
    Mode,
    Representation,
    build_graph,
    crossing_points,
    point_sets_intersect,
    vpg_adjacent,
)
from gridpaths.mds_vpg import (
    Axis,
    NetParams,
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


def P(pid, cx, cy, hx, vy):
    return GridPath.make(pid, cx, cy, hx, vy)


def one_string_rep(n, seed):
    return gen_vpg(n, seed, one_string=True)


def axis_mass(system, members, axis):
    return sum(
        system.weights[e] for e in members if system.universe[e].axis is axis
    )


def scan_net_soundness(system, net, eps):
    """Independent exhaustive check of the combined net guarantee."""
    total = sum(system.weights)
    for members in system.sets:
        mass = sum(system.weights[e] for e in members)
        if total and Fraction(mass) >= Fraction(eps) * total:
            assert set(members) & net, "heavy set left unhit"


class TestBuildCross:
    def test_ll_support_offsets(self):
        cross = build_cross(P("a", 0, 0, 4, 4))
        # Quarter units: one quarter past the corner, three short of the tip.
        assert (cross.h_support.anchor, cross.h_support.lo, cross.h_support.hi) == (0, -1, 13)
        assert (cross.v_support.anchor, cross.v_support.lo, cross.v_support.hi) == (0, -1, 13)
        assert not cross.degenerate

    def test_mirrored_arm(self):
        cross = build_cross(P("a", 0, 0, -4, 4))
        assert (cross.h_support.lo, cross.h_support.hi) == (-13, 1)

    def test_unit_arm(self):
        cross = build_cross(P("a", 0, 0, 1, 4))
        assert (cross.h_support.lo, cross.h_support.hi) == (-1, 1)
        assert not cross.degenerate

    def test_zero_arm_clamps_and_flags(self):
        cross = build_cross(P("a", 0, 0, 0, 4))
        assert (cross.h_support.lo, cross.h_support.hi) == (-1, -1)
        assert cross.degenerate


class TestCrossesIntersect:
    def test_own_cross(self):
        cross = build_cross(P("a", 0, 0, 4, 4))
        assert crosses_intersect(cross, cross)

    def test_far_apart(self):
        a = build_cross(P("a", 0, 0, 3, 3))
        b = build_cross(P("b", 50, 50, 53, 53))
        assert not crosses_intersect(a, b)

    def test_crossing_pair_matches_adjacency(self):
        a = P("a", 0, 0, 2, 2)
        b = P("b", 1, -1, 3, 1)
        assert vpg_adjacent(a, b)
        assert crosses_intersect(build_cross(a), build_cross(b))

    def test_touching_pair_not_intersecting(self):
        a = P("a", 0, 0, 2, 2)
        b = P("b", 2, 0, 4, 2)
        assert not vpg_adjacent(a, b)
        assert not crosses_intersect(build_cross(a), build_cross(b))

    def test_equivalence_on_random_pairs(self):
        # Excluded: touching contacts (meet without adjacency), degenerate
        # crosses, and collinear-overlap adjacency; the equivalence belongs
        # to the crossing-only regime of one-string inputs.
        rng = random.Random(41)
        checked = 0
        excluded = 0
        while checked < 4000:
            cx, cy = rng.randint(-8, 8), rng.randint(-8, 8)
            dx, dy = rng.randint(-8, 8), rng.randint(-8, 8)
            a = P("a", cx, cy, cx + rng.choice((-1, 1)) * rng.randint(1, 5),
                  cy + rng.choice((-1, 1)) * rng.randint(1, 5))
            b = P("b", dx, dy, dx + rng.choice((-1, 1)) * rng.randint(1, 5),
                  dy + rng.choice((-1, 1)) * rng.randint(1, 5))
            ca, cb = build_cross(a), build_cross(b)
            touch_only = point_sets_intersect(a, b) and not vpg_adjacent(a, b)
            overlap = crossing_points(a, b).overlap
            if touch_only or overlap or ca.degenerate or cb.degenerate:
                excluded += 1
                continue
            assert vpg_adjacent(a, b) == crosses_intersect(ca, cb)
            checked += 1
        assert excluded < checked  # pathological contacts are the rare case


class TestBuildSetSystem:
    def test_single_path(self):
        system = build_set_system(Representation(Mode.VPG, (P("a", 0, 0, 3, 3),)))
        assert len(system.universe) == 2
        assert system.sets == [[0, 1]]
        assert system.weights == [1, 1]

    def test_two_disjoint_paths(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3), P("b", 30, 30, 33, 33)))
        system = build_set_system(rep)
        assert system.sets == [[0, 1], [2, 3]]

    def test_crossing_pair_sets_grow(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 2, 2), P("b", 1, -1, 3, 1)))
        system = build_set_system(rep)
        assert all(len(members) >= 3 for members in system.sets)
        assert {0, 1} <= set(system.sets[0])
        assert {2, 3} <= set(system.sets[1])

    def test_rejects_non_one_string(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 6, 6), P("b", 5, 5, -1, -1)))
        with pytest.raises(NotOneString):
            build_set_system(rep)

    def test_same_axis_supports_never_share_an_edge(self):
        # On one-string inputs, distinct paths' same-axis supports overlap in
        # at most a point, so horizontal elements only ever hit vertical
        # supports of other crosses.
        for seed in range(30):
            system = build_set_system(one_string_rep(10, seed))
            segs = system.universe
            for i, s in enumerate(segs):
                for t in segs[i + 1 :]:
                    if s.owner == t.owner or s.axis is not t.axis:
                        continue
                    if s.anchor != t.anchor:
                        continue
                    assert min(s.hi, t.hi) - max(s.lo, t.lo) <= 0


class TestConversions:
    def test_singleton_round_trip(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3),))
        system = build_set_system(rep)
        hs = ds_to_hs({"a"}, system)
        assert hs == {0, 1}
        assert hs_to_ds(hs, system) == {"a"}

    def test_everything(self):
        rep = one_string_rep(8, 2)
        system = build_set_system(rep)
        all_ids = set(system.path_ids)
        hs = ds_to_hs(all_ids, system)
        assert hs == set(range(len(system.universe)))
        assert hs_to_ds(hs, system) == all_ids

    def test_crossing_pair_single_endpoint(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 2, 2), P("b", 1, -1, 3, 1)))
        system = build_set_system(rep)
        hs = ds_to_hs({"a"}, system)
        assert len(hs) == 2
        assert verify_hitting(system, hs) is None

    def test_not_dominating_rejected(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3), P("b", 30, 30, 33, 33)))
        system = build_set_system(rep)
        with pytest.raises(NotDominating):
            ds_to_hs({"a"}, system)

    def test_not_hitting_rejected(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3), P("b", 30, 30, 33, 33)))
        system = build_set_system(rep)
        with pytest.raises(NotHitting):
            hs_to_ds({0}, system)

    def test_round_trip_bound_random(self):
        for seed in range(40):
            rep = one_string_rep(9, seed)
            system = build_set_system(rep)
            optimum = brute_mds(system.graph)
            hs = ds_to_hs(optimum, system)
            assert len(hs) == 2 * len(optimum)
            assert verify_hitting(system, hs) is None
            ds = hs_to_ds(hs, system)
            assert system.graph.is_dominating_set(ds)
            assert len(ds) <= len(hs)
            assert len(ds) <= 2 * len(optimum)


class TestVerifyHitting:
    def test_full_universe(self):
        system = build_set_system(one_string_rep(6, 0))
        assert verify_hitting(system, set(range(len(system.universe)))) is None

    def test_empty_candidate(self):
        system = build_set_system(one_string_rep(6, 0))
        assert verify_hitting(system, set()) == 0

    def test_first_unhit_reported(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3), P("b", 30, 30, 33, 33)))
        system = build_set_system(rep)
        assert verify_hitting(system, {0}) == 1
        assert verify_hitting(system, {2}) == 0


class TestNets:
    def test_axis_net_hits_heavy_sets(self):
        system = build_set_system(one_string_rep(12, 1))
        params = NetParams(rng_seed=5)
        for eps in (Fraction(1, 2), Fraction(1, 4)):
            net = axis_net(system, Axis.H, eps, params)
            total = sum(
                system.weights[i]
                for i, s in enumerate(system.universe)
                if s.axis is Axis.H
            )
            for members in system.sets:
                mass = axis_mass(system, members, Axis.H)
                if mass and Fraction(mass) >= eps * total:
                    assert {
                        e for e in members if system.universe[e].axis is Axis.H
                    } & net

    def test_axis_net_respects_axis(self):
        system = build_set_system(one_string_rep(10, 3))
        net = axis_net(system, Axis.V, Fraction(1, 4), NetParams(rng_seed=7))
        assert all(system.universe[e].axis is Axis.V for e in net)

    def test_eps_one_can_be_empty(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3), P("b", 30, 30, 33, 33)))
        system = build_set_system(rep)
        net = axis_net(system, Axis.H, Fraction(1), NetParams(rng_seed=1))
        assert net == set()

    def test_combined_net_soundness(self):
        for seed in range(20):
            system = build_set_system(one_string_rep(10, seed))
            for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)):
                net = combined_net(system, eps, NetParams(rng_seed=seed))
                scan_net_soundness(system, net, eps)

    def test_combined_net_weighted(self):
        rng = random.Random(2)
        for seed in range(10):
            system = build_set_system(one_string_rep(10, seed))
            for i in range(len(system.weights)):
                system.weights[i] = rng.randint(1, 16)
            net = combined_net(system, Fraction(1, 4), NetParams(rng_seed=seed))
            scan_net_soundness(system, net, Fraction(1, 4))

    def test_empty_system(self):
        system = build_set_system(Representation(Mode.VPG, ()))
        assert combined_net(system, Fraction(1, 2), NetParams()) == set()

    def test_invalid_eps(self):
        system = build_set_system(one_string_rep(4, 0))
        with pytest.raises(ValueError):
            axis_net(system, Axis.H, Fraction(0), NetParams())


class TestBgHittingSet:
    def test_single_path_system(self):
        system = build_set_system(Representation(Mode.VPG, (P("a", 0, 0, 3, 3),)))
        hs = bg_hitting_set(system, NetParams(rng_seed=0))
        assert 1 <= len(hs) <= 2
        assert verify_hitting(system, hs) is None

    def test_two_disjoint_paths_exactly_two(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3), P("b", 30, 30, 33, 33)))
        system = build_set_system(rep)
        hs = bg_hitting_set(system, NetParams(rng_seed=0))
        assert len(hs) == 2
        assert verify_hitting(system, hs) is None

    def test_corpus_ratio(self):
        worst = 0.0
        for seed in range(20):
            system = build_set_system(one_string_rep(10, seed))
            hs = bg_hitting_set(system, NetParams(rng_seed=seed))
            assert verify_hitting(system, hs) is None
            opt = len(brute_hs(system))
            worst = max(worst, len(hs) / opt)
        assert worst <= 6.0

    def test_deterministic(self):
        rep = one_string_rep(12, 9)
        first = bg_hitting_set(build_set_system(rep), NetParams(rng_seed=3))
        second = bg_hitting_set(build_set_system(rep), NetParams(rng_seed=3))
        assert first == second


class TestPipeline:
    def test_singleton(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 3, 3),))
        assert approx_mds_one_string(rep, NetParams(rng_seed=0)) == {"a"}

    def test_star(self):
        center = P("c", 0, 0, 12, 2)
        spokes = [P(f"s{k}", 2 * k + 1, -1, 2 * k + 2, 1) for k in range(4)]
        rep = Representation(Mode.VPG, tuple([center] + spokes))
        graph = build_graph(rep)
        assert len(brute_mds(graph)) == 1
        solution = approx_mds_one_string(rep, NetParams(rng_seed=0))
        assert graph.is_dominating_set(solution)
        assert len(solution) <= 2

    def test_random_instances_dominate(self):
        for seed in range(25):
            rep = one_string_rep(10, seed)
            graph = build_graph(rep)
            solution = approx_mds_one_string(rep, NetParams(rng_seed=seed))
            assert graph.is_dominating_set(solution)
            assert len(solution) <= 6 * len(brute_mds(graph))

    def test_rejects_non_one_string(self):
        rep = Representation(Mode.VPG, (P("a", 0, 0, 6, 6), P("b", 5, 5, -1, -1)))
        with pytest.raises(NotOneString):
            approx_mds_one_string(rep, NetParams())
