import logging

import pytest

from oracles import exponential_formula, rgs_brute_force
from zerodim import golden
from zerodim.counting import subtree_sum, zdim_t0_recursive
from zerodim.errors import ConfigurationError, DomainError
from zerodim.order_tables import default_ord_star
from zerodim.parallel import (
    BenchReport,
    SplitConfig,
    bench_depth_sweep,
    default_workers,
    parse_depths,
    run_parallel,
    split_tasks,
    zdim_t0_parallel,
)
from zerodim.stirling import bell

STAR = default_ord_star()


def test_depth_zero_is_sequential():
    run = run_parallel(13, STAR, SplitConfig(0, 3))
    assert run.tasks == 1
    assert run.value == 5630684018989523274 == zdim_t0_recursive(13)


def test_small_split():
    assert zdim_t0_parallel(4, STAR, SplitConfig(2, 4)) == 137


@pytest.mark.parametrize("k", range(0, 7))
def test_task_count_matches_prefix_enumeration(k):
    prefixes = rgs_brute_force(k) if k else [()]
    tasks = split_tasks(9, k)
    assert len(tasks) == len(prefixes)
    assert len(tasks) == (bell(k) if k else 1)
    # each task is the block-size vector of one distinct prefix
    expected = sorted(
        tuple(sum(1 for x in p if x == lbl) for lbl in range(1, 10)) for p in prefixes
    )
    assert sorted(tuple(t.d) for t in tasks) == expected
    assert all(t.i == k for t in tasks)


def test_tasks_share_no_buffers():
    tasks = split_tasks(8, 4)
    assert len({id(t.d) for t in tasks}) == len(tasks)


def test_sibling_isolation():
    parent = split_tasks(8, 3)[2]
    checksum = (parent.m, tuple(parent.d))
    kids = parent.children()
    before = [tuple(k.d) for k in kids]
    subtree_sum(kids[0], STAR, backend="python")
    kids[0].d[0] += 5  # scribble on one child
    assert [tuple(k.d) for k in kids[1:]] == before[1:]
    assert (parent.m, tuple(parent.d)) == checksum


@pytest.mark.parametrize("backend", ["native", "python"])
def test_partials_sum_to_sequential_total(backend):
    n = 9 if backend == "python" else 11
    run = run_parallel(n, STAR, SplitConfig(4, 4), backend=backend)
    assert len(run.partials) == 4
    assert sum(run.partials) == run.value == golden.ZDIM_T0[n]


@pytest.mark.parametrize("n", range(1, 12))
@pytest.mark.parametrize("depth", [0, 1, 3, 6, 9])
@pytest.mark.parametrize("workers", [1, 2, 4, 8])
def test_determinism_grid(n, depth, workers):
    cfg = SplitConfig(depth, workers)
    assert zdim_t0_parallel(n, STAR, cfg) == golden.ZDIM_T0[n]


def test_python_backend_agrees():
    expected = exponential_formula(STAR, 8)
    for n in range(1, 9):
        assert zdim_t0_parallel(n, STAR, SplitConfig(min(3, n - 1), 2), backend="python") == expected[n]


def test_depth_clamped_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        cfg = SplitConfig(12, 2).clamped(5)
    assert cfg.depth == 4
    assert "exceeds" in caplog.text
    assert zdim_t0_parallel(5, STAR, SplitConfig(12, 2)) == 1826


def test_default_depth():
    assert SplitConfig.for_n(14, workers=1).depth == 9
    assert SplitConfig.for_n(5, workers=1).depth == 4
    assert SplitConfig.for_n(1, workers=1).depth == 0


def test_zero_workers_rejected():
    with pytest.raises(ConfigurationError):
        SplitConfig(3, 0)
    with pytest.raises(ConfigurationError):
        SplitConfig(-1, 1)


def test_out_of_range_n():
    with pytest.raises(DomainError):
        zdim_t0_parallel(20, STAR, SplitConfig(9, 2))


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("ZERODIM_THREADS", "3")
    assert default_workers() == 3
    assert SplitConfig.for_n(10).workers == 3
    monkeypatch.setenv("ZERODIM_THREADS", "zero")
    with pytest.raises(ConfigurationError):
        default_workers()
    monkeypatch.setenv("ZERODIM_THREADS", "0")
    with pytest.raises(ConfigurationError):
        default_workers()
    monkeypatch.delenv("ZERODIM_THREADS")
    assert default_workers() >= 1


def test_bench_rows_agree():
    report = bench_depth_sweep(13, [0, 3, 6, 9], SplitConfig(0, 2))
    assert [r.depth for r in report.rows] == [0, 3, 6, 9]
    assert {r.value for r in report.rows} == {5630684018989523274}


def test_bench_repeats_and_csv():
    report = bench_depth_sweep(12, [0, 6], SplitConfig(0, 1), repeats=2)
    lines = report.to_csv().splitlines()
    assert lines[0] == "depth,run,seconds,value"
    assert len(lines) == 5
    assert all(line.endswith(",17735173202222665") for line in lines[1:])
    assert [line.split(",")[:2] for line in lines[1:]] == [["0", "1"], ["0", "2"], ["6", "1"], ["6", "2"]]


def test_speedup_report():
    from zerodim.parallel import BenchRow

    rep = BenchReport(5, 2, [BenchRow(0, 1, 4.0, 1), BenchRow(3, 1, 1.0, 1), BenchRow(3, 2, 2.0, 1)])
    assert rep.speedup() == 4.0
    assert BenchReport(5, 2, [BenchRow(3, 1, 1.0, 1)]).speedup() is None


def test_parse_depths():
    assert parse_depths("0,3,6,9") == [0, 3, 6, 9]
    for bad in ["", "a,b", "-1"]:
        with pytest.raises(ConfigurationError):
            parse_depths(bad)
