"""Pair-interaction tests and row-wise pair counting between two bases.

A rank-``d`` operator connects two states only if they differ in at most
``2*d`` occupied single-particle states.  Counting the connected pairs of a
basis is the first pass of the two-pass matrix build, and it dominates at
scale, so three implementations of the same count are kept side by side:

* ``combined``   — XOR+popcount on the packed 64-state word as a cheap
                   prefilter, then the exact occupation-list walk to confirm
                   (the production scheme);
* ``mbs_only``   — the exact occupation-list walk for every pair;
* ``bitrep_only``— popcount over a full-width two-word (128-state) bit
                   representation, exact on its own for ``n_sp <= 128``.

All three return identical counts; they differ only in cost.  The prefilter
word covers states 1..64 only, so for states occupying higher indices it
*under*-counts differences — it can pass a pair the confirm step rejects, but
never the reverse.

Counting parallelizes over rows: each row's counter is private to the worker
that owns the row, and the output array is the only shared state, written at
disjoint indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit, prange

from ._intrinsics import popcount64
from ._util import numba_threads
from .mbstate import BITREP_WIDTH, Basis, ManyBodyState

__all__ = [
    "InteractionRank",
    "PairCounts",
    "count_difference",
    "pair_interacts_bitrep",
    "count_pairs",
    "COUNT_VARIANTS",
]

COUNT_VARIANTS = ("combined", "mbs_only", "bitrep_only")


@dataclass(frozen=True)
class InteractionRank:
    """Particle rank d of the operator; pairs connect iff they differ in <= 2d."""

    d: int = 2

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"rank must be >= 1, got d={self.d}")

    @property
    def threshold(self) -> int:
        return 2 * self.d


@dataclass(eq=False)
class PairCounts:
    """Per-row interacting-pair counts and their 64-bit total."""

    per_row: np.ndarray
    total: int

    def __post_init__(self):
        self.per_row = np.asarray(self.per_row, dtype=np.int64)
        self.total = int(self.total)
        if (self.per_row < 0).any():
            raise ValueError("negative per-row count")
        if self.total != int(self.per_row.sum()):
            raise ValueError("total does not match sum of per-row counts")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairCounts):
            return NotImplemented
        return self.total == other.total and np.array_equal(self.per_row, other.per_row)


def count_difference(s1, s2) -> int:
    """Difference measure from the two-pointer walk of both occupation lists.

    Walks both sorted lists in lockstep, counting indices private to each
    side, and returns ``2 * max(private_1, private_2)``.  The walk stops when
    either list is exhausted.  For equal-length lists this equals the size of
    the symmetric difference of the occupation sets; for unequal lengths the
    trailing tail of the longer list is deliberately left uncounted (the
    counting pipeline only ever compares equal particle numbers).

    Accepts states or raw occupation sequences.

    >>> count_difference((1, 2, 5, 7), (2, 3, 6, 8))
    6
    """
    occ1 = s1.occ if isinstance(s1, ManyBodyState) else tuple(s1)
    occ2 = s2.occ if isinstance(s2, ManyBodyState) else tuple(s2)
    i1 = i2 = 0
    diffs1 = diffs2 = 0
    n1, n2 = len(occ1), len(occ2)
    while i1 < n1 and i2 < n2:
        a, b = occ1[i1], occ2[i2]
        if a == b:
            i1 += 1
            i2 += 1
        elif a < b:
            diffs1 += 1
            i1 += 1
        else:
            diffs2 += 1
            i2 += 1
    return 2 * max(diffs1, diffs2)


def pair_interacts_bitrep(b1: int, b2: int, rank: InteractionRank) -> bool:
    """XOR+popcount test on packed 64-state words.

    Exact when every occupied index of both states is <= 64; otherwise a
    prefilter that can only over-accept.
    """
    return ((b1 ^ b2) & ((1 << BITREP_WIDTH) - 1)).bit_count() <= rank.threshold


# ----------------------------------------------------------------------
# compiled counting kernels
# ----------------------------------------------------------------------

@njit(inline="always")
def _occ_diff(occ_r, i, occ_c, j, n1, n2):
    i1 = 0
    i2 = 0
    diffs1 = 0
    diffs2 = 0
    while i1 < n1 and i2 < n2:
        a = occ_r[i, i1]
        b = occ_c[j, i2]
        if a == b:
            i1 += 1
            i2 += 1
        elif a < b:
            diffs1 += 1
            i1 += 1
        else:
            diffs2 += 1
            i2 += 1
    if diffs1 > diffs2:
        return 2 * diffs1
    return 2 * diffs2


@njit(parallel=True, cache=True)
def _count_combined(lo_r, occ_r, lo_c, occ_c, thr, counts):
    nr = lo_r.shape[0]
    nc = lo_c.shape[0]
    n1 = occ_r.shape[1]
    n2 = occ_c.shape[1]
    for i in prange(nr):
        c = 0
        for j in range(nc):
            if popcount64(lo_r[i] ^ lo_c[j]) <= thr:
                if _occ_diff(occ_r, i, occ_c, j, n1, n2) <= thr:
                    c += 1
        counts[i] = c


@njit(parallel=True, cache=True)
def _count_mbs_only(occ_r, occ_c, thr, counts):
    nr = occ_r.shape[0]
    nc = occ_c.shape[0]
    n1 = occ_r.shape[1]
    n2 = occ_c.shape[1]
    for i in prange(nr):
        c = 0
        for j in range(nc):
            if _occ_diff(occ_r, i, occ_c, j, n1, n2) <= thr:
                c += 1
        counts[i] = c


@njit(parallel=True, cache=True)
def _count_bitrep_only(lo_r, hi_r, lo_c, hi_c, thr, counts):
    nr = lo_r.shape[0]
    nc = lo_c.shape[0]
    for i in prange(nr):
        c = 0
        for j in range(nc):
            d = popcount64(lo_r[i] ^ lo_c[j]) + popcount64(hi_r[i] ^ hi_c[j])
            if d <= thr:
                c += 1
        counts[i] = c


def count_pairs(
    rows: Basis,
    cols: Basis,
    rank: InteractionRank = InteractionRank(),
    variant: str = "combined",
    workers: int | None = None,
) -> PairCounts:
    """Count interacting pairs (i over rows, j over cols) per row.

    ``per_row[i]`` is the number of column states within ``2*rank.d``
    differences of row state ``i``; ``total`` is their 64-bit sum.  The three
    variants (see module docstring) are interchangeable in result.
    """
    if variant not in COUNT_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {COUNT_VARIANTS}")
    if rows.n_particles != cols.n_particles:
        raise ValueError(
            f"mismatched particle numbers: rows N={rows.n_particles}, cols N={cols.n_particles}"
        )
    if rows.n_sp != cols.n_sp:
        raise ValueError(f"mismatched n_sp: rows {rows.n_sp}, cols {cols.n_sp}")
    if variant == "bitrep_only" and rows.n_sp > 2 * BITREP_WIDTH:
        raise ValueError(
            f"bitrep_only covers n_sp <= {2 * BITREP_WIDTH}, basis has n_sp={rows.n_sp}"
        )

    counts = np.zeros(len(rows), dtype=np.int64)
    thr = rank.threshold
    with numba_threads(workers):
        if variant == "combined":
            _count_combined(rows.bits_lo, rows.occ_mat, cols.bits_lo, cols.occ_mat, thr, counts)
        elif variant == "mbs_only":
            _count_mbs_only(rows.occ_mat, cols.occ_mat, thr, counts)
        else:
            _count_bitrep_only(rows.bits_lo, rows.bits_hi, cols.bits_lo, cols.bits_hi, thr, counts)
    return PairCounts(per_row=counts, total=int(counts.sum()))
