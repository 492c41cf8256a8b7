"""Count-then-fill construction of segmented shared arrays.

Pass 1 counts items per row; the exclusive scan of those counts carves one
flat shared array into per-row segments; pass 2 stores each row's items at
slots claimed from a per-row cursor.  Two execution policies share the API:

* ``parallel_inner`` — a row's items may be stored by several workers at
  once, so a slot is claimed with an atomic increment-and-fetch of the row
  cursor.  Slot order within a segment is unspecified; the segment content
  (as a multiset) is not.
* ``serial_inner``  — each row is owned by exactly one worker, cursors are
  bumped with plain loads/stores, and the output is byte-identical to a
  serial pass.  Zero atomic operations are executed on this path (the stats
  counters prove it).

Both paths hard-fail if a row yields more items than it counted (a slot past
the segment end) or fewer (a cursor short of the segment end) — either means
the count pass and fill pass disagreed.

``fill_rows`` is the generic API (any per-row iterable, any item dtype).
``fill_pattern`` is the compiled synthetic benchmark motif: every row stores
``j`` for each ``j in 1..inner`` with ``j % keep_every == 0``, which at
``keep_every=1`` makes every worker hammer its row cursor once per inner
iteration — the stress shape for the atomic-capture contract.

Worker counts are capped by the ``CIMOTIFS_MAX_WORKERS`` environment
variable (see ``_util``).
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from numba import njit, prange

from ._intrinsics import atomic_add_i64
from ._util import numba_threads, resolve_workers
from .scan import CountsAndOffsets, scan_parallel, scan_serial

__all__ = [
    "POLICIES",
    "FillStats",
    "SparsityFill",
    "counts_to_offsets",
    "fill_rows",
    "count_pattern",
    "fill_pattern",
]

POLICIES = ("parallel_inner", "serial_inner")

_SENTINEL = object()


@dataclass(frozen=True)
class FillStats:
    """Instrumentation: how many cursor bumps ran atomically vs plain."""

    atomic_rmw: int
    plain_increments: int
    policy: str
    workers: int


@dataclass(frozen=True)
class SparsityFill:
    """A filled segmented array plus its final cursors and fill stats."""

    offsets: CountsAndOffsets
    cursor: np.ndarray
    entries: np.ndarray
    stats: FillStats


def counts_to_offsets(counts, use_parallel: bool = False) -> CountsAndOffsets:
    """Exclusive-scan per-row counts into segment offsets.

    >>> counts_to_offsets([3, 1, 2]).offsets.tolist()
    [0, 3, 4]
    """
    counts = np.ascontiguousarray(counts, dtype=np.int64)
    if counts.ndim != 1 or counts.size == 0:
        raise ValueError("counts must be a non-empty 1-D array")
    if (counts < 0).any():
        raise ValueError("counts must be non-negative")
    offsets = scan_parallel(counts) if use_parallel else scan_serial(counts)
    return CountsAndOffsets(counts=counts, offsets=offsets, total=int(counts.sum()))


# ----------------------------------------------------------------------
# generic python-level fill
# ----------------------------------------------------------------------

def _normalize_row_work(row_work, n_rows: int) -> list[Iterable]:
    if callable(row_work):
        return [row_work(i) for i in range(n_rows)]
    items = list(row_work)
    if len(items) != n_rows:
        raise ValueError(f"row_work has {len(items)} rows, counts have {n_rows}")
    return items


def fill_rows(
    row_work: Callable[[int], Iterable] | Sequence[Iterable],
    counts_offsets: CountsAndOffsets,
    policy: str = "parallel_inner",
    workers: int | None = None,
    item_dtype=np.int64,
) -> SparsityFill:
    """Store every row's items into its segment of one flat shared array.

    ``row_work`` is either a callable ``i -> iterable`` or a sequence of
    per-row iterables; ``counts_offsets`` must come from a counting pass over
    the same work.  See the module docstring for the two policies.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}, expected one of {POLICIES}")
    co = counts_offsets
    n_rows = co.counts.size
    rows = _normalize_row_work(row_work, n_rows)
    n_workers = resolve_workers(workers, ceiling=8)

    entries = np.zeros(co.total, dtype=item_dtype)
    cursor = co.offsets.copy()
    ends = co.offsets + co.counts

    def overflow(i: int):
        return ValueError(
            f"row {i} produced more items than counted ({co.counts[i]}): "
            "count pass and fill pass disagree"
        )

    if policy == "serial_inner":
        # Rows partitioned across workers; plain increments, no atomics.
        def run_serial(w: int) -> int:
            bumps = 0
            for i in range(w, n_rows, n_workers):
                end = ends[i]
                for item in rows[i]:
                    slot = int(cursor[i])
                    if slot >= end:
                        raise overflow(i)
                    cursor[i] = slot + 1
                    entries[slot] = item
                    bumps += 1
            return bumps

        if n_workers == 1:
            plain = run_serial(0)
        else:
            with ThreadPoolExecutor(max_workers=n_workers) as pool:
                plain = sum(pool.map(run_serial, range(n_workers)))
        stats = FillStats(0, plain, policy, n_workers)
    else:
        # Inner-dimension parallelism: all workers roam all rows, each visit
        # claims one item and one slot under the row's lock (atomic capture).
        iters = [iter(r) for r in rows]
        locks = [threading.Lock() for _ in range(n_rows)]
        exhausted = np.zeros(n_rows, dtype=bool)

        def run_parallel(w: int) -> int:
            captures = 0
            start = (w * n_rows) // n_workers
            while True:
                alive = False
                for step in range(n_rows):
                    i = (start + step) % n_rows
                    if exhausted[i]:
                        continue
                    with locks[i]:
                        if exhausted[i]:
                            continue
                        item = next(iters[i], _SENTINEL)
                        if item is _SENTINEL:
                            exhausted[i] = True
                            continue
                        slot = int(cursor[i])  # increment-and-fetch
                        cursor[i] = slot + 1
                    alive = True
                    if slot >= ends[i]:
                        raise overflow(i)
                    entries[slot] = item
                    captures += 1
                if not alive:
                    return captures

        if n_workers == 1:
            atomics = run_parallel(0)
        else:
            with ThreadPoolExecutor(max_workers=n_workers) as pool:
                atomics = sum(pool.map(run_parallel, range(n_workers)))
        stats = FillStats(atomics, 0, policy, n_workers)

    short = np.flatnonzero(cursor != ends)
    if short.size:
        i = int(short[0])
        raise ValueError(
            f"row {i} produced {int(cursor[i] - co.offsets[i])} items but counted "
            f"{int(co.counts[i])}: count pass and fill pass disagree"
        )
    return SparsityFill(offsets=co, cursor=cursor, entries=entries, stats=stats)


# ----------------------------------------------------------------------
# compiled synthetic benchmark motif
# ----------------------------------------------------------------------

@njit(parallel=True, cache=True)
def _pattern_counts(n_rows, inner, keep):
    counts = np.zeros(n_rows, np.int64)
    for i in prange(n_rows):
        c = 0
        for j in range(1, inner + 1):
            if j % keep == 0:
                c += 1
        counts[i] = c
    return counts


@njit(parallel=True, cache=True)
def _pattern_fill_atomic(entries, cursor, ends, n_rows, inner, keep):
    total = np.int64(n_rows) * np.int64(inner)
    captures = 0
    overflow = 0
    for t in prange(total):
        i = t // inner
        j = t % inner + 1
        if j % keep == 0:
            slot = atomic_add_i64(cursor, i, 1) - 1  # increment-and-fetch
            if slot >= ends[i]:
                overflow += 1
            else:
                entries[slot] = j
                captures += 1
    return captures, overflow


@njit(parallel=True, cache=True)
def _pattern_fill_plain(entries, cursor, ends, n_rows, inner, keep):
    bumps = 0
    overflow = 0
    for i in prange(n_rows):
        for j in range(1, inner + 1):
            if j % keep == 0:
                slot = cursor[i]
                if slot >= ends[i]:
                    overflow += 1
                else:
                    cursor[i] = slot + 1
                    entries[slot] = j
                    bumps += 1
    return bumps, overflow


def count_pattern(n_rows: int, inner: int = 512, keep_every: int = 1) -> np.ndarray:
    """Pass-1 counts for the synthetic motif (compiled, parallel over rows)."""
    if n_rows < 1 or inner < 1 or keep_every < 1:
        raise ValueError("n_rows, inner, keep_every must all be >= 1")
    return _pattern_counts(n_rows, inner, keep_every)


def fill_pattern(
    n_rows: int,
    inner: int = 512,
    keep_every: int = 1,
    policy: str = "parallel_inner",
    workers: int | None = None,
) -> SparsityFill:
    """Compiled count-then-fill of the synthetic motif.

    Under ``parallel_inner`` the flat (row, inner) iteration space is split
    across workers with the inner index fastest, so adjacent iterations of
    one row land in one worker's chunk but every chunk boundary splits a row
    between workers — slots must be claimed atomically.  ``serial_inner``
    assigns whole rows to workers and bumps cursors with plain stores.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}, expected one of {POLICIES}")
    counts = count_pattern(n_rows, inner, keep_every)
    co = counts_to_offsets(counts)
    entries = np.zeros(co.total, dtype=np.int64)
    cursor = co.offsets.copy()
    ends = co.offsets + co.counts
    with numba_threads(workers) as n_workers:
        if policy == "parallel_inner":
            captures, overflow = _pattern_fill_atomic(entries, cursor, ends, n_rows, inner, keep_every)
            stats = FillStats(int(captures), 0, policy, n_workers)
        else:
            bumps, overflow = _pattern_fill_plain(entries, cursor, ends, n_rows, inner, keep_every)
            stats = FillStats(0, int(bumps), policy, n_workers)
    if overflow:
        raise ValueError(
            f"{int(overflow)} items landed past their segment end: "
            "count pass and fill pass disagree"
        )
    if not np.array_equal(cursor, ends):
        raise ValueError("some rows filled short of their counted segment")
    return SparsityFill(offsets=co, cursor=cursor, entries=entries, stats=stats)
