"""Serial simulated annealing: one replica of the parallel algorithm.

Each outer iteration reheats to ``t_initial`` and restarts from the incumbent
best, then cools geometrically while ``temp > t_final``. Candidates are
accepted by the Metropolis rule; the incumbent only moves to candidates that
beat it and pass :func:`check_schedule`.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from . import _pykernel
from .instance import Instance
from .neighborhood import MoveKind, initial_schedule
from .rng import Rng
from .schedule import Schedule

try:
    if os.environ.get("MTTP_PURE_PYTHON"):
        raise ImportError("pure-Python kernel forced by MTTP_PURE_PYTHON")
    from . import _kernel
except ImportError:
    _kernel = None

HAVE_COMPILED = _kernel is not None
BACKENDS = ("auto", "compiled", "python")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SAConfig:
    t_initial: float = 400.0
    t_final: float = 1.0
    alpha: float = 0.99
    n_iterations: int = 100
    burn_in: Optional[int] = None  # None: 20 * n
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.t_final < self.t_initial:
            raise ConfigError(
                f"need 0 < t_final < t_initial, got {self.t_final}, {self.t_initial}")
        if not 0 < self.alpha < 1:
            raise ConfigError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.n_iterations < 1:
            raise ConfigError(f"n_iterations must be >= 1, got {self.n_iterations}")
        if self.burn_in is not None and self.burn_in < 0:
            raise ConfigError(f"burn_in must be >= 0, got {self.burn_in}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def sweep_length(self) -> int:
        """Inner-loop passes per outer iteration, counted exactly as the loop runs."""
        temp, passes = self.t_initial, 0
        while temp > self.t_final:
            passes += 1
            temp *= self.alpha
        return passes

    def expected_explored(self) -> int:
        return self.n_iterations * self.sweep_length()


@dataclass
class AnnealResult:
    best_schedule: Optional[Schedule]
    best_dist: Optional[int]  # None: no feasible schedule found
    solutions_explored: int
    accepted: int
    elapsed_seconds: float

    @property
    def found(self) -> bool:
        return self.best_schedule is not None


class Evaluation(NamedTuple):
    """One inner-loop pass, as reported to an ``anneal`` observer."""

    step: int
    kind: MoveKind
    candidate_dist: int
    current_dist: int
    accepted: bool
    improved_best: bool
    best_dist: Optional[int]
    best_schedule: Optional[Schedule]  # set only when improved_best
    temperature: float


Observer = Callable[[Evaluation], None]


def accept(delta: int, temp: float, rng: Rng) -> bool:
    """Metropolis rule; draws a uniform only when ``delta >= 0``."""
    if not temp > 0:
        raise ConfigError(f"temperature must be positive, got {temp}")
    return delta < 0 or math.exp(-delta / temp) > rng.uniform()


def _resolve_backend(backend: str, observer) -> str:
    if backend not in BACKENDS:
        raise ConfigError(f"unknown backend {backend!r}; choose from {BACKENDS}")
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise ConfigError("compiled kernel is not available in this build")
        if observer is not None:
            raise ConfigError("observers require the Python kernel")
    if backend == "auto":
        backend = "compiled" if HAVE_COMPILED and observer is None else "python"
    return backend


def anneal(inst: Instance, cfg: SAConfig, rng: Optional[Rng] = None,
           observer: Optional[Observer] = None, backend: str = "auto") -> AnnealResult:
    """Run one annealing replica.

    ``rng`` defaults to ``Rng(cfg.seed)``. Passing an observer selects the
    Python kernel, which produces the same trajectory as the compiled one.
    """
    backend = _resolve_backend(backend, observer)
    if rng is None:
        rng = Rng(cfg.seed)
    start = time.perf_counter()
    half = initial_schedule(inst, rng, cfg.burn_in).first_half()
    if backend == "compiled":
        best, best_dist, explored, accepted = _kernel.anneal(
            np.array(half, dtype=np.intc), np.ascontiguousarray(inst.dist, dtype=np.int64),
            inst.k, float(cfg.t_initial), float(cfg.t_final), float(cfg.alpha),
            int(cfg.n_iterations), rng.bit_generator)
    else:
        hook = None
        if observer is not None:
            def hook(step, kind, cand_dist, curr_dist, ok, improved, best_dist, cand, temp):
                observer(Evaluation(
                    step, MoveKind(kind), cand_dist, curr_dist, ok, improved,
                    None if best_dist < 0 else best_dist,
                    Schedule.from_half(cand) if improved else None, temp))
        best, best_dist, explored, accepted = _pykernel.anneal(
            half, inst.dist.tolist(), inst.k, cfg.t_initial, cfg.t_final, cfg.alpha,
            cfg.n_iterations, rng, hook)
    elapsed = time.perf_counter() - start
    if best is None:
        return AnnealResult(None, None, explored, accepted, elapsed)
    return AnnealResult(Schedule.from_half(best), int(best_dist), explored, accepted, elapsed)
