"""Exclusive prefix sums: serial reference and work-efficient two-sweep scan.

Both functions return ``y`` with ``y[0] = 0`` and ``y[i+1] = y[i] + x[i]`` —
the offsets that turn per-row counts into segment boundaries.

The parallel form pads to a power of two and runs the classic two-sweep tree
scan in place: an up-sweep builds partial sums bottom-up, the root is zeroed,
and a down-sweep pushes exclusive prefixes back to the leaves.  Each sweep
level is one data-parallel kernel launch over pairs at stride ``2**(p+1)``;
the kernel's return is the level barrier.  The up-sweep's final level would
only compute the grand total into the root slot, which the root-zeroing step
immediately discards, so it is skipped — leaving ``2*log2(n_padded) - 1``
sweep levels and at most ``2*(n_padded - 1)`` additions in total (the
work-efficiency bound).  Every level kernel counts its additions, so the
bound is checked against instrumented counters, not derived on faith.

``scan_queued`` is an alternative driver for the same levels: every level's
chunk tasks are enqueued up front into a FIFO (non-blocking), and a worker
pool executes them in order, gated so a task only starts after the previous
level completed.  It exists to demonstrate that in-order queued execution is
equivalent to the barriered driver.
"""

from __future__ import annotations

import queue
import threading
from dataclasses import dataclass

import numpy as np
from numba import njit, prange

from ._util import numba_threads, resolve_workers

__all__ = [
    "CountsAndOffsets",
    "ScanStats",
    "scan_serial",
    "scan_parallel",
    "scan_parallel_stats",
    "scan_queued",
]


@dataclass(frozen=True)
class CountsAndOffsets:
    """Per-row counts with their exclusive prefix sum and grand total."""

    counts: np.ndarray
    offsets: np.ndarray
    total: int

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        offsets = np.asarray(self.offsets, dtype=np.int64)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "offsets", offsets)
        if counts.shape != offsets.shape or counts.ndim != 1 or counts.size == 0:
            raise ValueError("counts and offsets must be equal-length, non-empty 1-D arrays")
        if offsets[0] != 0:
            raise ValueError("offsets must start at 0")
        if not np.array_equal(offsets[1:] - offsets[:-1], counts[:-1]):
            raise ValueError("offsets[i+1] - offsets[i] must equal counts[i]")
        if self.total != int(offsets[-1] + counts[-1]):
            raise ValueError("total must equal last offset + last count")


@dataclass(frozen=True)
class ScanStats:
    n_padded: int
    levels: int
    additions: int


# ----------------------------------------------------------------------
# kernels: one call per sweep level; the return is the level barrier
# ----------------------------------------------------------------------

@njit(cache=True)
def _scan_serial_kernel(x, y):
    s = np.int64(0)
    for i in range(x.shape[0]):
        y[i] = s
        s += x[i]


@njit(parallel=True, cache=True)
def _up_level(y, stride2):
    half = stride2 // 2
    pairs = y.shape[0] // stride2
    adds = 0
    for t in prange(pairs):
        j = t * stride2
        y[j + stride2 - 1] += y[j + half - 1]
        adds += 1
    return adds


@njit(parallel=True, cache=True)
def _down_level(y, stride2):
    half = stride2 // 2
    pairs = y.shape[0] // stride2
    adds = 0
    for t in prange(pairs):
        j = t * stride2
        tmp = y[j + half - 1]
        y[j + half - 1] = y[j + stride2 - 1]
        y[j + stride2 - 1] += tmp
        adds += 1
    return adds


def _padded_size(n: int) -> int:
    return 1 if n <= 1 else 1 << (n - 1).bit_length()


def _level_strides(n_padded: int) -> tuple[list[int], list[int]]:
    """(up-sweep strides, down-sweep strides); root-add level omitted."""
    logn = n_padded.bit_length() - 1
    ups = [1 << (p + 1) for p in range(logn - 1)]
    downs = [1 << (p + 1) for p in range(logn - 1, -1, -1)]
    return ups, downs


# ----------------------------------------------------------------------
# public API
# ----------------------------------------------------------------------

def scan_serial(x) -> np.ndarray:
    """Exclusive prefix sum, sequential reference.

    >>> scan_serial([1, 2, 3, 4]).tolist()
    [0, 1, 3, 6]
    """
    x = np.ascontiguousarray(x, dtype=np.int64)
    y = np.empty_like(x)
    if x.size:
        _scan_serial_kernel(x, y)
    return y


def scan_parallel(x, workers: int | None = None) -> np.ndarray:
    """Exclusive prefix sum via the two-sweep tree scan; equals scan_serial."""
    y, _ = scan_parallel_stats(x, workers=workers)
    return y


def scan_parallel_stats(x, workers: int | None = None) -> tuple[np.ndarray, ScanStats]:
    """Like scan_parallel, also returning instrumented work counters."""
    x = np.ascontiguousarray(x, dtype=np.int64)
    n = x.size
    if n == 0:
        return np.empty(0, dtype=np.int64), ScanStats(0, 0, 0)
    n_pad = _padded_size(n)
    y = np.zeros(n_pad, dtype=np.int64)
    y[:n] = x
    ups, downs = _level_strides(n_pad)
    adds = 0
    with numba_threads(workers):
        for stride2 in ups:
            adds += _up_level(y, stride2)
        y[n_pad - 1] = 0  # root zero: the discarded grand total
        for stride2 in downs:
            adds += _down_level(y, stride2)
    stats = ScanStats(n_padded=n_pad, levels=len(ups) + len(downs), additions=int(adds))
    return y[:n].copy(), stats


# ----------------------------------------------------------------------
# queued driver: enqueue every level's chunks up front, execute in order
# ----------------------------------------------------------------------

def _apply_chunk(y, phase: str, stride2: int, t0: int, t1: int) -> None:
    # pairs t0..t1 (exclusive) of the level at this stride
    half = stride2 // 2
    hi = slice(t0 * stride2 + stride2 - 1, t1 * stride2, stride2)
    lo = slice(t0 * stride2 + half - 1, t1 * stride2, stride2)
    if phase == "up":
        y[hi] += y[lo]
    elif phase == "down":
        tmp = y[lo].copy()
        y[lo] = y[hi]
        y[hi] += tmp
    else:  # root zero
        y[-1] = 0


def scan_queued(x, workers: int = 4, chunks_per_level: int | None = None) -> np.ndarray:
    """Exclusive prefix sum with all sweep levels enqueued before any waiting.

    Tasks sit in a single FIFO in level order; pool workers pop continuously
    and a popped task blocks only until its predecessor level has fully
    completed.  Output is identical to :func:`scan_parallel`.
    """
    x = np.ascontiguousarray(x, dtype=np.int64)
    n = x.size
    if n == 0:
        return np.empty(0, dtype=np.int64)
    workers = resolve_workers(workers, ceiling=64)
    chunks = chunks_per_level or workers
    n_pad = _padded_size(n)
    y = np.zeros(n_pad, dtype=np.int64)
    y[:n] = x

    ups, downs = _level_strides(n_pad)
    levels: list[list[tuple]] = []
    for phase, strides in (("up", ups), ("root", [0]), ("down", downs)):
        for stride2 in strides:
            if phase == "root":
                levels.append([("root", 0, 0, 0)])
                continue
            pairs = n_pad // stride2
            step = max(1, -(-pairs // chunks))
            levels.append(
                [(phase, stride2, t0, min(t0 + step, pairs)) for t0 in range(0, pairs, step)]
            )

    tasks: queue.SimpleQueue = queue.SimpleQueue()
    for lvl, chunk_list in enumerate(levels):
        for task in chunk_list:
            tasks.put((lvl, task))
    for _ in range(workers):
        tasks.put(None)

    pending = [len(chunk_list) for chunk_list in levels]
    done_upto = [0]  # highest level index fully completed
    cond = threading.Condition()
    errors: list[BaseException] = []

    def run():
        while True:
            got = tasks.get()
            if got is None:
                return
            lvl, (phase, stride2, t0, t1) = got
            with cond:
                while done_upto[0] < lvl and not errors:
                    cond.wait()
                if errors:
                    return
            try:
                _apply_chunk(y, phase, stride2, t0, t1)
            except BaseException as e:  # propagate to caller
                with cond:
                    errors.append(e)
                    cond.notify_all()
                return
            with cond:
                pending[lvl] -= 1
                if pending[lvl] == 0:
                    done_upto[0] = lvl + 1
                    cond.notify_all()

    threads = [threading.Thread(target=run) for _ in range(workers)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if errors:
        raise errors[0]
    return y[:n].copy()
