"""Benchmark harness: threshold sweeps over graph sources, CSV output, and
randomized cross-checks of the solver against the exact oracle."""

from __future__ import annotations

import hashlib
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Sequence

from .bounds import bound_new, bound_old
from .diffusion import is_target_set
from .generators import GraphSource, clique_graph, cycle_graph, random_tree
from .graph import Graph
from .reference import clique_optimum, exact_solve, greedy_tss
from .solver import tss_solve
from .thresholds import assign_thresholds, constant_capped, random_in_degree

CSV_HEADER = "graph_name,n,m,t_param,algorithm,solution_size,bound_new,bound_old,elapsed_ms,seed,error"

THREADS_ENV_VAR = "TARGETSET_THREADS"


def derive_seed(master: int, *parts) -> int:
    """Stable per-task seed so no task reads another task's random stream."""
    text = str(master) + "|" + "|".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class BenchRow:
    graph_name: str
    n: int
    m: int
    t_param: int | None
    algorithm: str
    solution_size: int | None
    bound_new: str
    bound_old: str
    elapsed_ms: str
    seed: int
    error: str = ""

    def as_csv(self) -> str:
        t_param = "" if self.t_param is None else str(self.t_param)
        size = "" if self.solution_size is None else str(self.solution_size)
        return ",".join(
            [
                self.graph_name,
                str(self.n),
                str(self.m),
                t_param,
                self.algorithm,
                size,
                self.bound_new,
                self.bound_old,
                self.elapsed_ms,
                str(self.seed),
                self.error,
            ]
        )


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark run.

    With the constant-capped policy every value in ``sweep`` produces one
    instance per source and repetition; other policies draw one assignment
    per (source, repetition).  ``timings`` off keeps the CSV byte-identical
    across runs; switch it on to study scaling.
    """

    sources: tuple[GraphSource, ...]
    policy: str = "const"
    sweep: tuple[int, ...] = tuple(range(1, 11))
    algorithms: tuple[str, ...] = ("tss",)
    seed: int = 0
    repetitions: int = 1
    timings: bool = False
    exact_cap: int = 24

    def __post_init__(self):
        for alg in self.algorithms:
            if alg not in ("tss", "greedy", "exact"):
                raise ValueError(f"unknown algorithm {alg!r}")
        if self.policy.partition(":")[0] not in ("const", "random", "degree", "file"):
            raise ValueError(f"unknown threshold policy {self.policy!r}")


def _solve_row(cfg: BenchConfig, task) -> BenchRow:
    src_name, g, t, t_param, alg, seed = task
    try:
        if alg == "exact" and g.n > cfg.exact_cap:
            raise ValueError("instance too large for exact solver")
        start = time.perf_counter()
        if alg == "tss":
            solution = tss_solve(g, t).target_set
        elif alg == "greedy":
            solution = greedy_tss(g, t).target_set
        else:
            solution = exact_solve(g, t, max_vertices=cfg.exact_cap).witness
        elapsed = time.perf_counter() - start
        if not is_target_set(g, t, solution):
            raise AssertionError("verification failed: output is not a target set")
        return BenchRow(
            graph_name=src_name,
            n=g.n,
            m=g.m,
            t_param=t_param,
            algorithm=alg,
            solution_size=len(solution),
            bound_new=f"{float(bound_new(g, t)):.6g}",
            bound_old=f"{float(bound_old(g, t)):.6g}",
            elapsed_ms=f"{elapsed * 1000.0:.3f}" if cfg.timings else "",
            seed=seed,
        )
    except (ValueError, AssertionError) as exc:
        return BenchRow(
            graph_name=src_name,
            n=g.n,
            m=g.m,
            t_param=t_param,
            algorithm=alg,
            solution_size=None,
            bound_new="",
            bound_old="",
            elapsed_ms="",
            seed=seed,
            error=str(exc),
        )


def run_bench(cfg: BenchConfig) -> list[BenchRow]:
    """Assign thresholds, solve, verify, and emit one row per task.

    Rows come back in deterministic configuration order (source, repetition,
    sweep value, algorithm) regardless of how tasks are scheduled.  The
    ``TARGETSET_THREADS`` environment variable sets the worker count.
    """
    tasks = []
    is_const = cfg.policy.partition(":")[0] == "const"
    for src in cfg.sources:
        for rep in range(cfg.repetitions):
            gseed = derive_seed(cfg.seed, "graph", src.name, rep)
            g = src.with_seed(gseed).build()
            for t_param in cfg.sweep if is_const else (None,):
                tseed = derive_seed(cfg.seed, "thresholds", src.name, rep, t_param)
                if is_const:
                    t = constant_capped(g, t_param)
                elif cfg.policy == "random":
                    t = random_in_degree(g, tseed)
                else:
                    t = assign_thresholds(g, cfg.policy, tseed)
                for alg in cfg.algorithms:
                    tasks.append((src.name, g, t, t_param, alg, gseed))

    workers = int(os.environ.get(THREADS_ENV_VAR, "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda task: _solve_row(cfg, task), tasks))
    return [_solve_row(cfg, task) for task in tasks]


def write_csv(rows: Sequence[BenchRow], stream: IO) -> None:
    stream.write(CSV_HEADER + "\n")
    for row in rows:
        stream.write(row.as_csv() + "\n")


@dataclass(frozen=True)
class VerifyOutcome:
    instances: int
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def run_verify(klass: str, n_max: int, instances: int, seed: int = 0) -> VerifyOutcome:
    """Cross-check the solver against the exact oracle on a graph class.

    Random instances of ``tree``, ``cycle`` or ``clique`` are drawn with the
    thresholds that exercise every elimination branch: uniform in [1, d] for
    trees, mixes of {0, 1, 2, d+1} for cycles, uniform in [1, n+2] for
    cliques (where the closed form is checked as well).
    """
    if klass not in ("tree", "cycle", "clique"):
        raise ValueError(f"unknown verification class {klass!r}")
    mismatches: list[str] = []
    for i in range(instances):
        iseed = derive_seed(seed, klass, i)
        rng = random.Random(iseed)
        n = rng.randint(3, max(3, n_max))
        if klass == "tree":
            g = random_tree(n, seed=derive_seed(iseed, "graph"))
            t = random_in_degree(g, seed=derive_seed(iseed, "thresholds"))
        elif klass == "cycle":
            g = cycle_graph(n)
            t = [rng.choice((0, 1, 2, 3)) for _ in range(n)]
        else:
            g = clique_graph(n)
            t = sorted(rng.randint(1, n + 2) for _ in range(n))
        got = tss_solve(g, t).size
        want = exact_solve(g, t, max_vertices=max(24, n)).optimum_size
        if got != want:
            mismatches.append(
                f"{klass} n={n} seed={iseed}: solver size {got} != optimum {want}"
            )
            continue
        if klass == "clique":
            closed = clique_optimum(t)
            if closed != want:
                mismatches.append(
                    f"clique n={n} seed={iseed}: closed form {closed} != optimum {want}"
                )
    return VerifyOutcome(instances=instances, mismatches=mismatches)
