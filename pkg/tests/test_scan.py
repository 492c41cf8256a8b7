"""Prefix-sum variants: serial reference, two-sweep tree, queued driver.

Oracle: an exclusive scan is ``np.cumsum`` shifted right one slot with a
leading zero.  The tree scan must also respect the work-efficiency bound
(additions <= 2 * (n_padded - 1)) and run exactly 2*log2(n_padded) - 1
sweep levels (the up-sweep's root-add level is skipped — its only product
is the grand total, which the root-zeroing step discards anyway).
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cimotifs.scan import (
    CountsAndOffsets,
    ScanStats,
    scan_parallel,
    scan_parallel_stats,
    scan_queued,
    scan_serial,
)


def oracle(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    out = np.zeros_like(x)
    if x.size > 1:
        np.cumsum(x[:-1], out=out[1:])
    return out


count_arrays = st.lists(st.integers(0, 1000), min_size=0, max_size=300).map(
    lambda v: np.array(v, dtype=np.int64)
)


class TestSerial:
    def test_worked_example(self):
        x = [3, 1, 7, 0, 4, 1, 6, 3]
        assert scan_serial(x).tolist() == [0, 3, 4, 11, 11, 15, 16, 22]

    def test_edges(self):
        assert scan_serial([]).tolist() == []
        assert scan_serial([5]).tolist() == [0]
        assert scan_serial([0, 0, 0]).tolist() == [0, 0, 0]

    @given(count_arrays)
    def test_matches_cumsum(self, x):
        assert np.array_equal(scan_serial(x), oracle(x))


class TestParallel:
    def test_worked_example(self):
        x = [3, 1, 7, 0, 4, 1, 6, 3]
        assert scan_parallel(x).tolist() == [0, 3, 4, 11, 11, 15, 16, 22]

    @given(count_arrays)
    def test_matches_serial(self, x):
        assert np.array_equal(scan_parallel(x), scan_serial(x))

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 31, 32, 33, 1000, 4096])
    def test_non_power_of_two_padding(self, n):
        rng = np.random.default_rng(n)
        x = rng.integers(0, 50, size=n, dtype=np.int64)
        y, stats = scan_parallel_stats(x)
        assert np.array_equal(y, oracle(x))
        assert stats.n_padded >= n
        assert stats.n_padded & (stats.n_padded - 1) == 0

    @pytest.mark.parametrize("n", [2, 4, 8, 64, 1024, 4096])
    def test_level_count_on_powers_of_two(self, n):
        x = np.ones(n, dtype=np.int64)
        _, stats = scan_parallel_stats(x)
        k = int(np.log2(stats.n_padded))
        assert stats.n_padded == n
        assert stats.levels == 2 * k - 1

    @given(count_arrays.filter(lambda x: x.size > 0))
    def test_work_bound(self, x):
        _, stats = scan_parallel_stats(x)
        assert stats.additions <= 2 * (stats.n_padded - 1)

    def test_exact_addition_count(self):
        # skipping the root-add level makes the count exactly 2*n - 3:
        # up-sweep n-2 adds (n-1 minus the skipped root), down-sweep n-1
        for n in (2, 4, 8, 256):
            _, stats = scan_parallel_stats(np.ones(n, dtype=np.int64))
            assert stats.additions == 2 * n - 3

    def test_empty(self):
        y, stats = scan_parallel_stats(np.empty(0, dtype=np.int64))
        assert y.size == 0
        assert stats == ScanStats(0, 0, 0)


class TestQueued:
    @given(count_arrays, st.integers(1, 8))
    @settings(max_examples=25)
    def test_matches_serial(self, x, workers):
        got = scan_queued(x, workers=workers)
        assert np.array_equal(got, scan_serial(x))

    def test_chunked_levels(self):
        rng = np.random.default_rng(0)
        x = rng.integers(0, 9, size=2048, dtype=np.int64)
        want = scan_serial(x)
        for chunks in (1, 3, 16):
            assert np.array_equal(scan_queued(x, workers=4, chunks_per_level=chunks), want)

    def test_large_input_many_workers(self):
        rng = np.random.default_rng(1)
        x = rng.integers(0, 100, size=100_000, dtype=np.int64)
        assert np.array_equal(scan_queued(x, workers=8), scan_serial(x))


class TestCountsAndOffsets:
    def test_accepts_consistent(self):
        co = CountsAndOffsets(
            counts=np.array([3, 1, 2], dtype=np.int64),
            offsets=np.array([0, 3, 4], dtype=np.int64),
            total=6,
        )
        assert co.total == 6

    def test_rejects_inconsistent(self):
        good_c = np.array([3, 1, 2], dtype=np.int64)
        cases = [
            dict(counts=good_c, offsets=np.array([1, 4, 5], dtype=np.int64), total=7),
            dict(counts=good_c, offsets=np.array([0, 2, 4], dtype=np.int64), total=6),
            dict(counts=good_c, offsets=np.array([0, 3], dtype=np.int64), total=6),
            dict(counts=good_c, offsets=np.array([0, 3, 4], dtype=np.int64), total=7),
        ]
        for kwargs in cases:
            with pytest.raises(ValueError):
                CountsAndOffsets(**kwargs)
