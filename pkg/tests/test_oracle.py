import math

import numpy as np
import pytest

from mttp.instance import Instance, make_circular_instance
from mttp.oracle import (OracleSizeError, enumerate_feasible, oracle_distance,
                         oracle_team_distance, single_round_robins)
from mttp.schedule import Schedule, check_schedule, team_itinerary_distance, travel_distance

from conftest import CANONICAL_4, random_drr


def test_team_walk(canon4, circ4):
    assert oracle_team_distance(canon4, circ4, 4) == 8
    assert oracle_team_distance(canon4, circ4, 1) == 6


def test_all_home_walk(circ4):
    opp = np.array(CANONICAL_4)
    opp[2] = [1, 2, 4, 1, 2, 4]
    assert oracle_team_distance(Schedule(opp), circ4, 3) == 0


@pytest.mark.parametrize("n", [4, 6, 8])
def test_agrees_with_schedule_core(n):
    inst = make_circular_instance(n)
    for s in random_drr(n, 200, seed=n):
        for t in range(1, n + 1):
            assert oracle_team_distance(s, inst, t) == team_itinerary_distance(s, inst, t)


def test_round_robin_count_n4():
    # K4 has 3 perfect matchings, used in every order
    assert len(list(single_round_robins(4))) == math.factorial(3)


def test_round_robin_count_n6():
    # K6 has 6 one-factorizations of 5 rounds each, in every round order
    assert len(list(single_round_robins(6))) == 6 * math.factorial(5)


def test_circ4():
    inst = make_circular_instance(4)
    rep = enumerate_feasible(inst)
    assert rep.schedules_enumerated == 6 * 2**6
    assert rep.count_feasible == 384   # with mirroring no 4-run fits in 6 rounds
    assert rep.optimum_distance == 20
    assert check_schedule(rep.optimum_schedule, inst).feasible
    assert travel_distance(rep.optimum_schedule, inst) == 20


def test_zero_matrix(zero4):
    rep = enumerate_feasible(zero4)
    assert rep.optimum_distance == 0 and rep.count_feasible > 0


def test_k1_n4_has_no_feasible_schedule():
    rep = enumerate_feasible(make_circular_instance(4, k=1))
    assert rep.count_feasible == 0
    assert rep.optimum_distance is None and rep.optimum_schedule is None


def test_optimum_lower_bounds_every_feasible_n4():
    # brute force over the same space with the schedule-core distance
    inst = make_circular_instance(4, k=2)
    inst3 = make_circular_instance(4)
    rep2, rep3 = enumerate_feasible(inst), enumerate_feasible(inst3)
    assert rep2.count_feasible == 0
    best = None
    for srr in single_round_robins(4):
        for mask in range(64):
            opp = np.zeros((4, 6), dtype=int)
            g = 0
            for r, rnd in enumerate(srr):
                for a, b in rnd:
                    h, v = (a, b) if mask >> g & 1 else (b, a)
                    opp[h - 1, r], opp[v - 1, r] = v, -h
                    g += 1
            opp[:, 3:] = -opp[:, :3]
            s = Schedule(opp)
            if check_schedule(s, inst3).feasible:
                d = travel_distance(s, inst3)
                best = d if best is None else min(best, d)
    assert best == rep3.optimum_distance


@pytest.mark.slow
def test_circ6():
    inst = make_circular_instance(6)
    rep = enumerate_feasible(inst)
    assert rep.optimum_distance == 72
    assert travel_distance(rep.optimum_schedule, inst) == 72
    assert oracle_distance(rep.optimum_schedule, inst) == 72


def test_size_guard():
    with pytest.raises(OracleSizeError):
        enumerate_feasible(make_circular_instance(8))
