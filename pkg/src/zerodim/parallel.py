"""Parallel evaluation of the ZDIM_T0 partition sum.

The coordinator walks the top ``depth`` levels of the backtracking tree on
one thread, cloning the generator state at every branch.  Each state it
reaches at level ``depth`` (a partition of the first ``depth`` points) is an
independent work item.  A fixed pool of worker threads drains the work
items; every worker adds into its own accumulator, and the accumulators are
summed once all workers have joined.  Depth 0 yields a single work item,
i.e. a sequential run.

The compiled kernel releases the GIL, so native work items run truly in
parallel.  The pure-Python backend is correct under threads but serialised.
"""

from __future__ import annotations

import logging
import os
import queue
import threading
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _native
from .counting import Backend, check_n, subtree_sum
from .errors import ConfigurationError, DomainError
from .order_tables import OrdStarTable, default_ord_star
from .partitions import GeneratorState

log = logging.getLogger(__name__)

DEFAULT_DEPTH = 9
THREADS_ENV = "ZERODIM_THREADS"


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            workers = int(raw)
        except ValueError:
            raise ConfigurationError(f"{THREADS_ENV}={raw!r} is not an integer") from None
        if workers < 1:
            raise ConfigurationError(f"{THREADS_ENV} must be >= 1, got {workers}")
        return workers
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


@dataclass(frozen=True)
class SplitConfig:
    depth: int
    workers: int

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")
        if self.depth < 0:
            raise ConfigurationError(f"depth must be >= 0, got {self.depth}")

    @classmethod
    def for_n(cls, n: int, depth: int | None = None, workers: int | None = None) -> "SplitConfig":
        """Fill in defaults (depth ``min(9, n-1)``, all available CPUs) and clamp."""
        if workers is None:
            workers = default_workers()
        if depth is None:
            depth = min(DEFAULT_DEPTH, max(n - 1, 0))
        return cls(depth, workers).clamped(n)

    def clamped(self, n: int) -> "SplitConfig":
        limit = max(n - 1, 0)
        if self.depth > limit:
            log.warning("split depth %d exceeds n-1 = %d for n=%d; using %d",
                        self.depth, limit, n, limit)
            return SplitConfig(limit, self.workers)
        return self


@dataclass(frozen=True)
class ParallelRun:
    value: int
    partials: tuple[int, ...]
    depth: int
    workers: int
    tasks: int


def split_tasks(n: int, depth: int) -> list[GeneratorState]:
    """States at prefix length ``depth``, each an independent copy.

    There is one per restricted growth prefix of that length, so Bell(depth)
    of them for depth >= 1 and a single empty root for depth 0.
    """
    if not 0 <= depth <= n:
        raise DomainError(f"split depth must lie in 0..{n}, got {depth}")
    tasks: list[GeneratorState] = []

    def walk(state: GeneratorState) -> None:
        if state.i == depth:
            tasks.append(state)
            return
        for child in state.children():
            walk(child)

    walk(GeneratorState.root(n))
    return tasks


def run_parallel(
    n: int,
    ord_star: OrdStarTable | None = None,
    cfg: SplitConfig | None = None,
    *,
    backend: Backend = "native",
) -> ParallelRun:
    ord_star = ord_star or default_ord_star()
    check_n(n, ord_star)
    cfg = (cfg or SplitConfig.for_n(n)).clamped(n)
    tasks = split_tasks(n, cfg.depth)
    work: queue.SimpleQueue[GeneratorState] = queue.SimpleQueue()
    for task in tasks:
        work.put(task)

    errors: list[BaseException] = []
    if backend == "native":
        _native.check_capacity(n, ord_star)
        pres = _native.residue_table(ord_star, n)
        accs = [_native.new_accumulator() for _ in range(cfg.workers)]

        def run_task(worker: int, task: GeneratorState) -> None:
            d = np.array(task.d, dtype=np.int64)
            _native.recursive_kernel(n, task.m, d, task.i, pres, accs[worker])
    elif backend == "python":
        sums = [0] * cfg.workers

        def run_task(worker: int, task: GeneratorState) -> None:
            sums[worker] += subtree_sum(task, ord_star, backend="python")
    else:
        raise DomainError(f"unknown backend {backend!r}")

    def worker_loop(worker: int) -> None:
        try:
            while True:
                try:
                    task = work.get_nowait()
                except queue.Empty:
                    return
                run_task(worker, task)
        except BaseException as exc:  # re-raised on the coordinator
            errors.append(exc)

    threads = [
        threading.Thread(target=worker_loop, args=(w,), name=f"zerodim-worker-{w}")
        for w in range(cfg.workers)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if errors:
        raise errors[0]

    if backend == "native":
        partials = tuple(_native.reconstruct(acc) for acc in accs)
    else:
        partials = tuple(sums)
    return ParallelRun(sum(partials), partials, cfg.depth, cfg.workers, len(tasks))


def zdim_t0_parallel(
    n: int,
    ord_star: OrdStarTable | None = None,
    cfg: SplitConfig | None = None,
    *,
    backend: Backend = "native",
) -> int:
    return run_parallel(n, ord_star, cfg, backend=backend).value


@dataclass(frozen=True)
class BenchRow:
    depth: int
    run: int
    seconds: float
    value: int


@dataclass
class BenchReport:
    n: int
    workers: int
    rows: list[BenchRow]

    CSV_HEADER = "depth,run,seconds,value"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        lines += [f"{r.depth},{r.run},{r.seconds:.6f},{r.value}" for r in self.rows]
        return "\n".join(lines) + "\n"

    def best_seconds(self) -> dict[int, float]:
        best: dict[int, float] = {}
        for r in self.rows:
            best[r.depth] = min(best.get(r.depth, float("inf")), r.seconds)
        return best

    def speedup(self) -> float | None:
        """Depth-0 time over the fastest split depth, or None without a depth-0 row."""
        best = self.best_seconds()
        if 0 not in best or len(best) < 2:
            return None
        fastest = min(s for d, s in best.items() if d != 0)
        return best[0] / fastest if fastest > 0 else None


def bench_depth_sweep(
    n: int,
    depths: Iterable[int],
    cfg_base: SplitConfig | None = None,
    *,
    repeats: int = 1,
    ord_star: OrdStarTable | None = None,
) -> BenchReport:
    """Time the parallel engine at each depth and check that all runs agree."""
    ord_star = ord_star or default_ord_star()
    check_n(n, ord_star)
    if repeats < 1:
        raise ConfigurationError(f"repeats must be >= 1, got {repeats}")
    workers = cfg_base.workers if cfg_base else default_workers()
    # load or compile the kernels before anything is timed
    zdim_t0_parallel(min(n, 3), ord_star, SplitConfig(0, 1))
    rows = []
    for depth in depths:
        cfg = SplitConfig(depth, workers).clamped(n)
        for run in range(1, repeats + 1):
            start = time.perf_counter()
            value = zdim_t0_parallel(n, ord_star, cfg)
            rows.append(BenchRow(depth, run, time.perf_counter() - start, value))
    values = {r.value for r in rows}
    if len(values) > 1:
        raise RuntimeError(f"parallel runs disagree for n={n}: {sorted(values)}")
    return BenchReport(n, workers, rows)


def parse_depths(text: str) -> Sequence[int]:
    try:
        depths = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ConfigurationError(f"bad depth list {text!r}") from None
    if not depths or any(d < 0 for d in depths):
        raise ConfigurationError(f"bad depth list {text!r}")
    return depths
