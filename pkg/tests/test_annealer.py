import math

import numpy as np
import pytest

from mttp.annealer import (HAVE_COMPILED, ConfigError, SAConfig, accept, anneal)
from mttp.instance import make_circular_instance
from mttp.oracle import enumerate_feasible
from mttp.rng import Rng
from mttp.schedule import check_schedule, travel_distance

EXAMPLE = SAConfig(t_initial=400, t_final=1, alpha=0.99, n_iterations=10, seed=1)


def test_accept_improving_draws_nothing():
    rng, ref = Rng(3), Rng(3)
    assert accept(-5, 1e-9, rng)
    assert rng.raw() == ref.raw()


def test_accept_zero_delta_always():
    rng = Rng(0)
    assert all(accept(0, 0.5, rng) for _ in range(1000))


def test_accept_rejects_non_positive_temperature():
    with pytest.raises(ConfigError):
        accept(1, 0.0, Rng(0))


def test_accept_frequency():
    rng = Rng(42)
    hits = sum(accept(10, 10.0, rng) for _ in range(10_000))
    assert abs(hits / 10_000 - math.exp(-1)) <= 0.02


@pytest.mark.parametrize("kwargs", [
    dict(t_initial=1, t_final=1), dict(t_final=0), dict(alpha=1.0), dict(alpha=0),
    dict(n_iterations=0), dict(burn_in=-1), dict(seed=-1),
])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        SAConfig(**kwargs)


def test_sweep_length_matches_closed_form():
    closed = math.ceil(math.log(1 / 400) / math.log(0.99))
    assert closed == 597
    assert EXAMPLE.sweep_length() == 597
    assert EXAMPLE.expected_explored() == 5970


def test_zero_matrix_reaches_zero(zero4):
    res = anneal(zero4, SAConfig(n_iterations=2, seed=9))
    assert res.best_dist == 0
    assert check_schedule(res.best_schedule, zero4).feasible


def test_circ4_reaches_oracle_optimum(circ4):
    optimum = enumerate_feasible(circ4).optimum_distance
    assert optimum == 20
    res = anneal(circ4, EXAMPLE)
    assert res.best_dist == optimum
    assert res.solutions_explored == 5970
    assert res.accepted <= res.solutions_explored


@pytest.mark.parametrize("n", [6, 8, 10])
def test_result_invariants(n):
    inst = make_circular_instance(n)
    res = anneal(inst, SAConfig(n_iterations=100, seed=n))
    assert res.found
    assert check_schedule(res.best_schedule, inst).feasible
    assert travel_distance(res.best_schedule, inst) == res.best_dist
    assert res.solutions_explored == 100 * SAConfig().sweep_length()


def test_deterministic():
    inst = make_circular_instance(8)
    cfg = SAConfig(n_iterations=15, seed=77)
    a, b = anneal(inst, cfg), anneal(inst, cfg)
    assert (a.best_dist, a.solutions_explored, a.accepted) == (b.best_dist, b.solutions_explored, b.accepted)
    assert a.best_schedule == b.best_schedule


def test_no_feasible_schedule_is_explicit():
    # mirrored n=4 admits no schedule with k=1 (exhaustive check)
    inst = make_circular_instance(4, k=1)
    assert enumerate_feasible(inst).count_feasible == 0
    res = anneal(inst, SAConfig(n_iterations=2))
    assert not res.found and res.best_dist is None and res.best_schedule is None


def test_observer_sees_every_evaluation_and_best_updates():
    inst = make_circular_instance(8)
    cfg = SAConfig(n_iterations=5, seed=3)
    events = []
    res = anneal(inst, cfg, observer=events.append)
    assert len(events) == res.solutions_explored
    assert [e.step for e in events] == list(range(1, len(events) + 1))
    assert sum(e.accepted for e in events) == res.accepted
    improvements = [e for e in events if e.improved_best]
    assert improvements and improvements[-1].best_dist == res.best_dist
    assert all(e.best_schedule is not None for e in improvements)
    bests = [e.best_dist for e in events if e.best_dist is not None]
    assert all(a >= b for a, b in zip(bests, bests[1:]))


def test_observer_run_matches_plain_run():
    inst = make_circular_instance(6)
    cfg = SAConfig(n_iterations=4, seed=8)
    plain = anneal(inst, cfg)
    watched = anneal(inst, cfg, observer=lambda e: None)
    assert plain.best_schedule == watched.best_schedule
    assert plain.accepted == watched.accepted


def test_unknown_backend():
    with pytest.raises(ConfigError):
        anneal(make_circular_instance(4), EXAMPLE, backend="gpu")


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_compiled_backend_refuses_observer(circ4):
    with pytest.raises(ConfigError):
        anneal(circ4, EXAMPLE, observer=print, backend="compiled")
