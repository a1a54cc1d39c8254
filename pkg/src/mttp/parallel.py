"""PSA(T): independent annealing replicas, a join, and a least-distance reduction."""
from __future__ import annotations

import statistics
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .annealer import HAVE_COMPILED, AnnealResult, SAConfig, anneal, ConfigError
from .instance import Instance
from .rng import replica_rng


class ComparisonError(ValueError):
    """Speedup requested between runs that are not comparable."""


@dataclass(frozen=True)
class RunConfig:
    threads: int = 1
    sa: SAConfig = field(default_factory=SAConfig)
    instance: str = ""
    backend: str = "auto"
    # "thread" scales only with the compiled kernel, which drops the GIL;
    # "auto" falls back to processes for the pure-Python kernel.
    executor: str = "auto"

    def __post_init__(self):
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")
        if self.executor not in ("auto", "thread", "process"):
            raise ConfigError(f"unknown executor {self.executor!r}")


@dataclass
class ReplicaSummary:
    replica: int
    best_dist: Optional[int]
    solutions_explored: int
    accepted: int
    elapsed_seconds: float


@dataclass
class RunStats:
    instance: str
    threads: int
    sa: SAConfig
    per_replica: list[ReplicaSummary]
    total_solutions_explored: int
    wall_elapsed_seconds: float
    solutions_per_second: float
    best_dist: Optional[int]  # None: no replica found a feasible schedule
    best_replica: Optional[int]

    @property
    def feasible(self) -> bool:
        return self.best_dist is not None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["sa"] = asdict(self.sa)
        return d


def _replica(inst: Instance, sa: SAConfig, index: int, backend: str) -> AnnealResult:
    return anneal(inst, sa, replica_rng(sa.seed, index), backend=backend)


def reduce_results(results: list[AnnealResult]) -> tuple[Optional[int], Optional[int]]:
    """Index and distance of the least-distance feasible replica, lowest index on ties."""
    best_i = None
    for i, r in enumerate(results):
        if r.found and (best_i is None or r.best_dist < results[best_i].best_dist):
            best_i = i
    return best_i, None if best_i is None else results[best_i].best_dist


def run_psa(inst: Instance, cfg: RunConfig) -> tuple[AnnealResult, RunStats]:
    """Run ``cfg.threads`` replicas; replica ``i`` is seeded by ``replica_seed(seed, i)``.

    The returned result is the winning replica's own record. When no replica
    finds a feasible schedule it has ``best_schedule=None`` and the stats
    carry ``best_dist=None``.
    """
    T = cfg.threads
    executor = cfg.executor
    if executor == "auto":
        uses_compiled = HAVE_COMPILED and cfg.backend != "python"
        executor = "thread" if uses_compiled or T == 1 else "process"
    pool_cls = ThreadPoolExecutor if executor == "thread" else ProcessPoolExecutor

    results: list[Optional[AnnealResult]] = [None] * T
    start = time.perf_counter()
    if T == 1:
        results[0] = _replica(inst, cfg.sa, 0, cfg.backend)
    else:
        with pool_cls(max_workers=T) as pool:
            futures = [pool.submit(_replica, inst, cfg.sa, i, cfg.backend) for i in range(T)]
            for i, fut in enumerate(futures):
                results[i] = fut.result()
    wall = time.perf_counter() - start

    best_i, best_dist = reduce_results(results)
    total = sum(r.solutions_explored for r in results)
    stats = RunStats(
        instance=cfg.instance or inst.name,
        threads=T,
        sa=cfg.sa,
        per_replica=[ReplicaSummary(i, r.best_dist, r.solutions_explored, r.accepted,
                                    r.elapsed_seconds) for i, r in enumerate(results)],
        total_solutions_explored=total,
        wall_elapsed_seconds=wall,
        solutions_per_second=total / wall if wall > 0 else float("inf"),
        best_dist=best_dist,
        best_replica=best_i,
    )
    winner = results[best_i] if best_i is not None else AnnealResult(
        None, None, total, sum(r.accepted for r in results), wall)
    return winner, stats


def compute_speedup(baseline: RunStats, parallel: RunStats) -> float:
    if baseline.threads != 1:
        raise ComparisonError(f"baseline must use 1 thread, got {baseline.threads}")
    if baseline.sa != parallel.sa or baseline.instance != parallel.instance:
        raise ComparisonError("runs used different instances or annealing configs")
    return parallel.solutions_per_second / baseline.solutions_per_second


@dataclass
class BenchRow:
    threads: int
    samples: list[float]
    best_distances: list[Optional[int]]
    median_solutions_per_second: float
    speedup: float


def benchmark(inst: Instance, sa: SAConfig, threads_list: list[int], repeats: int,
              backend: str = "auto", executor: str = "auto") -> list[BenchRow]:
    """Throughput per thread count; repeat ``r`` uses seed ``sa.seed + r``.

    Speedup is the ratio of median throughputs against the 1-thread row.
    """
    if 1 not in threads_list:
        raise ConfigError("threads list must contain 1 for the speedup baseline")
    if repeats < 1:
        raise ConfigError(f"repeats must be >= 1, got {repeats}")
    raw = {}
    for T in threads_list:
        samples, dists = [], []
        for rep in range(repeats):
            cfg = RunConfig(T, SAConfig(**{**asdict(sa), "seed": sa.seed + rep}),
                            inst.name, backend, executor)
            _, stats = run_psa(inst, cfg)
            samples.append(stats.solutions_per_second)
            dists.append(stats.best_dist)
        raw[T] = (samples, dists)
    base = statistics.median(raw[1][0])
    rows = []
    for T in threads_list:
        samples, dists = raw[T]
        med = statistics.median(samples)
        rows.append(BenchRow(T, samples, dists, med, med / base))
    return rows
