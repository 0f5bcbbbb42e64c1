"""ZDIM_T0(n) as a sum over set partitions, and ZDIM(n) from it.

A zero-dimensional T0 topology on ``{1..n}`` is a partition of the points
together with a rooted partial order (one with a greatest element) on each
block.  Hence

    ZDIM_T0(n) = sum over partitions P of prod over blocks A of ORD*(|A|)

where singleton blocks contribute ``ORD*(1) = 1`` and are skipped.  Arbitrary
topologies reduce to T0 ones on the quotient by indistinguishability, giving

    ZDIM(n) = sum_{i=1..n} S(n, i) * ZDIM_T0(i).

Two engines evaluate the partition sum.  ``backend="python"`` drives the
generators of :mod:`zerodim.partitions` with Python integers;
``backend="native"`` runs compiled kernels of the same loops
(see :mod:`zerodim._native`).  Both are exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from . import _native
from .errors import DomainError
from .order_tables import OrdStarTable, default_ord_star
from .partitions import (
    GeneratorState,
    block_sizes,
    descend,
    generate_iterative,
    generate_recursive,
)
from .stirling import StirlingRow, stirling_row as _stirling_row

Algorithm = Literal["iterative", "recursive", "parallel"]
Backend = Literal["native", "python"]
ALGORITHMS = ("iterative", "recursive", "parallel")
BACKENDS = ("native", "python")


@dataclass(frozen=True)
class CountResult:
    n: int
    value: int
    algorithm: str
    depth: int = 0
    workers: int = 1
    elapsed_seconds: float = 0.0


def check_n(n: int, ord_star: OrdStarTable) -> None:
    if not 1 <= n <= ord_star.max_n:
        raise DomainError(
            f"n={n} is out of range: the ORD* table covers 1..{ord_star.max_n} "
            f"(ORD({ord_star.max_n}) is not published)"
        )


def _check_backend(backend: str) -> None:
    if backend not in BACKENDS:
        raise DomainError(f"unknown backend {backend!r}; choose from {BACKENDS}")


def leaf_product(d: Sequence[int], ord_star: OrdStarTable, top: int | None = None) -> int:
    """Product of ``ORD*(d[j])`` over entries with ``d[j] > 1``; empty product is 1."""
    prod = 1
    for j in range(len(d) if top is None else top):
        s = d[j]
        if s > 1:
            prod *= ord_star[s]
    return prod


def zdim_t0_iterative(
    n: int, ord_star: OrdStarTable | None = None, *, backend: Backend = "native"
) -> int:
    """ZDIM_T0(n) over ``setpart1`` codewords, recounting block sizes at each one."""
    ord_star = ord_star or default_ord_star()
    check_n(n, ord_star)
    _check_backend(backend)
    if n == 1:
        return 1
    if backend == "native":
        _native.check_capacity(n, ord_star)
        acc = _native.new_accumulator()
        _native.iterative_kernel(n, _native.residue_table(ord_star, n), acc)
        return _native.reconstruct(acc)

    total = 0

    def visit(codeword):
        nonlocal total
        total += leaf_product(block_sizes(codeword), ord_star)

    generate_iterative(n, visit)
    return total


def zdim_t0_recursive(
    n: int, ord_star: OrdStarTable | None = None, *, backend: Backend = "native"
) -> int:
    """ZDIM_T0(n) by backtracking with incrementally maintained block sizes."""
    ord_star = ord_star or default_ord_star()
    check_n(n, ord_star)
    _check_backend(backend)
    if backend == "native":
        return subtree_sum(GeneratorState.root(n), ord_star, backend="native")

    total = 0

    def visit(state: GeneratorState):
        nonlocal total
        total += leaf_product(state.d, ord_star, state.m)

    generate_recursive(n, visit)
    return total


def subtree_sum(
    state: GeneratorState, ord_star: OrdStarTable, *, backend: Backend = "native"
) -> int:
    """Sum of leaf products below ``state``; ``state`` is left unchanged."""
    if backend == "native":
        _native.check_capacity(state.n, ord_star)
        acc = _native.new_accumulator()
        d = np.array(state.d, dtype=np.int64)
        _native.recursive_kernel(
            state.n, state.m, d, state.i, _native.residue_table(ord_star, state.n), acc
        )
        return _native.reconstruct(acc)

    total = 0

    def visit(leaf: GeneratorState):
        nonlocal total
        total += leaf_product(leaf.d, ord_star, leaf.m)

    descend(state, visit)
    return total


def zdim(n: int, zdim_t0_values: Sequence[int], stirling_row: StirlingRow) -> int:
    """Combine ``ZDIM_T0(1..n)`` with row ``n`` of the Stirling triangle.

    ``zdim_t0_values[i - 1]`` must hold ZDIM_T0(i).
    """
    if len(zdim_t0_values) != n:
        raise DomainError(f"need ZDIM_T0(1..{n}), got {len(zdim_t0_values)} values")
    if stirling_row.n != n:
        raise DomainError(f"need Stirling row {n}, got row {stirling_row.n}")
    z = 0
    for i in range(1, n + 1):
        z += stirling_row[i] * zdim_t0_values[i - 1]
    return z


def zdim_t0(
    n: int,
    algorithm: Algorithm = "recursive",
    *,
    depth: int | None = None,
    workers: int | None = None,
    ord_star: OrdStarTable | None = None,
    backend: Backend = "native",
) -> CountResult:
    """Dispatch to one of the three algorithms and time it."""
    ord_star = ord_star or default_ord_star()
    start = time.perf_counter()
    if algorithm == "iterative":
        value, used_depth, used_workers = zdim_t0_iterative(n, ord_star, backend=backend), 0, 1
    elif algorithm == "recursive":
        value, used_depth, used_workers = zdim_t0_recursive(n, ord_star, backend=backend), 0, 1
    elif algorithm == "parallel":
        from .parallel import SplitConfig, run_parallel

        cfg = SplitConfig.for_n(n, depth=depth, workers=workers)
        run = run_parallel(n, ord_star, cfg, backend=backend)
        value, used_depth, used_workers = run.value, run.depth, run.workers
    else:
        raise DomainError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    return CountResult(
        n, value, algorithm, used_depth, used_workers, time.perf_counter() - start
    )


def zdim_series(
    n: int,
    algorithm: Algorithm = "recursive",
    *,
    depth: int | None = None,
    workers: int | None = None,
    ord_star: OrdStarTable | None = None,
    backend: Backend = "native",
) -> list[int]:
    """ZDIM_T0(1..n) computed once each, in ascending order."""
    ord_star = ord_star or default_ord_star()
    check_n(n, ord_star)
    values = []
    for i in range(1, n + 1):
        # a depth chosen for n is routinely too deep for the small i
        d = None if depth is None else min(depth, i - 1)
        values.append(
            zdim_t0(i, algorithm, depth=d, workers=workers, ord_star=ord_star, backend=backend).value
        )
    return values


def zdim_full(
    n: int,
    algorithm: Algorithm = "recursive",
    *,
    depth: int | None = None,
    workers: int | None = None,
    ord_star: OrdStarTable | None = None,
    backend: Backend = "native",
) -> int:
    """ZDIM(n) from freshly computed ZDIM_T0(1..n)."""
    values = zdim_series(
        n, algorithm, depth=depth, workers=workers, ord_star=ord_star, backend=backend
    )
    return zdim(n, values, _stirling_row(n))
