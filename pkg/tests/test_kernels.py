"""The compiled kernel must reproduce the pure-Python kernel draw for draw."""
import numpy as np
import pytest

from mttp import _pykernel as pk
from mttp.annealer import HAVE_COMPILED, SAConfig, anneal
from mttp.instance import Instance, make_circular_instance
from mttp.rng import Rng

from conftest import random_mirrored

pytestmark = pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")

if HAVE_COMPILED:
    from mttp import _kernel


@pytest.mark.parametrize("n", [4, 6, 8, 12])
def test_random_move_sequences_match(n):
    h_py = random_mirrored(n, 1, seed=n)[0].first_half()
    h_c = np.array(h_py, dtype=np.intc)
    r_py, r_c = Rng(n), Rng(n)
    for _ in range(3000):
        assert pk.random_move(h_py, r_py) == _kernel.random_move(h_c, r_c.bit_generator)
        assert h_c.tolist() == h_py
    assert r_py.raw() == r_c.raw()


@pytest.mark.parametrize("n", [4, 6, 8])
def test_distance_and_feasibility_match(n):
    inst = make_circular_instance(n)
    d = inst.dist.tolist()
    for s in random_mirrored(n, 200, seed=n + 1):
        h = s.first_half()
        a = np.array(h, dtype=np.intc)
        assert _kernel.distance(a, inst.dist) == pk.distance(h, d)
        for k in (1, 2, 3):
            assert _kernel.feasible(a, k) == pk.feasible(h, k)


def _random_instance(n, seed):
    a = np.random.default_rng(seed).integers(0, 1000, (n, n))
    a = np.triu(a, 1)
    return Instance(n, a + a.T, name="R")


@pytest.mark.parametrize("inst", [
    make_circular_instance(4), make_circular_instance(8), make_circular_instance(10),
    _random_instance(6, 1), _random_instance(8, 2), make_circular_instance(6, k=2),
])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_anneal_trajectories_match(inst, seed):
    cfg = SAConfig(t_initial=50, t_final=1, alpha=0.97, n_iterations=6, seed=seed)
    a = anneal(inst, cfg, backend="compiled")
    b = anneal(inst, cfg, backend="python")
    assert (a.best_dist, a.solutions_explored, a.accepted) == (b.best_dist, b.solutions_explored, b.accepted)
    assert a.best_schedule == b.best_schedule
