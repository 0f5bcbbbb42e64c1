"""Exact counts of zero-dimensional topologies on a finite set."""

from .counting import (
    CountResult,
    zdim,
    zdim_series,
    zdim_t0,
    zdim_t0_iterative,
    zdim_t0_recursive,
)
from .errors import ConfigurationError, DomainError
from .order_tables import OrdStarTable, OrdTable, derive_ord_star, load_ord_table
from .parallel import SplitConfig, bench_depth_sweep, zdim_t0_parallel
from .stirling import StirlingRow, bell, stirling_row

__all__ = [
    "ConfigurationError",
    "CountResult",
    "DomainError",
    "OrdStarTable",
    "OrdTable",
    "SplitConfig",
    "StirlingRow",
    "bell",
    "bench_depth_sweep",
    "derive_ord_star",
    "load_ord_table",
    "stirling_row",
    "zdim",
    "zdim_series",
    "zdim_t0",
    "zdim_t0_iterative",
    "zdim_t0_recursive",
    "zdim_t0_parallel",
]
