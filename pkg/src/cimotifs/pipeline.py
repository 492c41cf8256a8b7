"""Desk-scale matrix-build driver composing the four motifs.

The build walks a hierarchy: states are grouped into *orbitals* (contiguous
runs sharing a coarse grouping key), orbital pairs that could hold
interacting states become *tiles*, and within each tile the state-level
count → offsets → fill sequence runs exactly as in the sparsity/scan/fill
modules.  A final phase re-walks the tiles to contract synthetic operator
values against eigenvector coefficients — the observables motif of the
reduce module, in its pair-filtered form.

Storage is tile-major: the flat column-index/value arrays are segmented per
(tile, row-within-tile), so the fill module's per-row cursor protocol runs
unchanged with tile-rows as the rows.

Synthetic values stand in for physics:

* matrix values  ``H[i,j] = h(i XOR j)``, ``h`` a seeded splittable hash
  mapped to [-1, 1);
* operator values ``O[i,j,k] = g(i, j, k)``, a seeded splittable hash made
  symmetric in (i, j) by canonicalizing the pair, or the identity operator
  (``1`` on the diagonal) for exactness checks;
* eigenvectors: unit-normalized pseudorandom stubs — Gaussian rows, or
  ±n**-0.5 sign vectors whose float32 sums of squares are exact whenever n
  is a power of 4 (entries and partial sums are then dyadic rationals).

Everything is deterministic per seed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numba import njit, prange

from ._intrinsics import atomic_add_f32, popcount64
from ._util import digest, numba_threads
from .fill import POLICIES, SparsityFill, counts_to_offsets, fill_rows
from .mbstate import CALIBRATION_BIAS, Basis, ManyBodyState, random_basis
from .reduce import GENERATED_CEILING, PARALLEL_ACCUM_LIMIT, STRATEGIES
from .scan import CountsAndOffsets
from .sparsity import InteractionRank, PairCounts, _occ_diff, count_pairs

__all__ = [
    "DEFAULT_GROUP_BITS",
    "OP_KINDS",
    "Orbital",
    "Tile",
    "SparseSkeleton",
    "ObservablesInput",
    "bitrep_prefix_key",
    "group_orbitals",
    "enumerate_tiles",
    "build_skeleton",
    "contract_observables",
    "contract_oracle",
    "random_coefficients",
    "PipelineConfig",
    "run_pipeline",
]

DEFAULT_GROUP_BITS = 16
OP_KINDS = ("symmetric_hash", "identity")


@dataclass(frozen=True)
class Orbital:
    """A contiguous run [start, stop) of basis states sharing a grouping key."""

    id: int
    key: object
    start: int
    stop: int

    def __post_init__(self):
        if self.stop <= self.start:
            raise ValueError(f"orbital {self.id} is empty: [{self.start}, {self.stop})")

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass
class Tile:
    """A row-orbital/col-orbital pair that may hold interacting state pairs."""

    row_orbital: int
    col_orbital: int
    cnt: int = 0
    offset: int = 0


@dataclass(frozen=True)
class SparseSkeleton:
    """Filled sparsity structure: tiles plus flat column/value arrays."""

    tiles: tuple
    colind: np.ndarray
    values: np.ndarray
    segments: CountsAndOffsets  # per (tile, row-in-tile) segment layout
    fill: SparsityFill

    def __post_init__(self):
        total = sum(t.cnt for t in self.tiles)
        if not (total == self.colind.size == self.values.size):
            raise ValueError(
                f"tile counts ({total}) and array lengths "
                f"({self.colind.size}, {self.values.size}) disagree"
            )

    @property
    def nnz(self) -> int:
        return int(self.colind.size)


# ----------------------------------------------------------------------
# grouping and tile enumeration
# ----------------------------------------------------------------------

def bitrep_prefix_key(group_bits: int = DEFAULT_GROUP_BITS) -> Callable[[ManyBodyState], int]:
    """Grouping key: occupancy word restricted to the lowest ``group_bits`` states."""
    if not 1 <= group_bits <= 64:
        raise ValueError(f"group_bits must be in 1..64, got {group_bits}")
    mask = (1 << group_bits) - 1
    return lambda state: state.bitrep & mask


def group_orbitals(
    basis: Basis,
    key: Callable[[ManyBodyState], object] | None = None,
    group_bits: int = DEFAULT_GROUP_BITS,
) -> tuple[Basis, list[Orbital]]:
    """Reorder states so equal-key runs are contiguous; return (basis, orbitals).

    Groups are ordered by key where keys sort, else by first appearance; ties
    inside a group keep input order, so the permutation is deterministic.
    """
    if key is None:
        key = bitrep_prefix_key(group_bits)
    keys = [key(s) for s in basis]
    groups: dict = {}
    for idx, k in enumerate(keys):
        groups.setdefault(k, []).append(idx)
    try:
        ordered = sorted(groups)
    except TypeError:
        ordered = list(groups)  # insertion order: first appearance

    states: list[ManyBodyState] = []
    orbitals: list[Orbital] = []
    for oid, k in enumerate(ordered):
        start = len(states)
        states.extend(basis[i] for i in groups[k])
        orbitals.append(Orbital(id=oid, key=k, start=start, stop=len(states)))
    reordered = Basis(tuple(states), basis.n_particles, basis.n_sp)
    return reordered, orbitals


def _orbital_pair_passes(key_r, key_c, threshold: int) -> bool:
    # Integer keys are occupancy words: the popcount of their XOR is the
    # number of differences visible in the key window, a lower bound on the
    # true state difference — so this filter only ever over-accepts.
    if isinstance(key_r, int) and isinstance(key_c, int):
        return (key_r ^ key_c).bit_count() <= threshold
    return True


def enumerate_tiles(
    row_orbs: Sequence[Orbital],
    col_orbs: Sequence[Orbital],
    rank: InteractionRank = InteractionRank(),
) -> list[Tile]:
    """Orbital pairs passing the coarse ≤2d test, via count-then-store passes."""
    thr = rank.threshold
    n_tiles = 0
    for r in row_orbs:  # pass 1: count
        for c in col_orbs:
            if _orbital_pair_passes(r.key, c.key, thr):
                n_tiles += 1
    tiles: list = [None] * n_tiles
    pos = 0
    for r in row_orbs:  # pass 2: store
        for c in col_orbs:
            if _orbital_pair_passes(r.key, c.key, thr):
                tiles[pos] = Tile(row_orbital=r.id, col_orbital=c.id)
                pos += 1
    if pos != n_tiles:
        raise RuntimeError(f"tile passes disagree: counted {n_tiles}, stored {pos}")
    return tiles


# ----------------------------------------------------------------------
# synthetic values: seeded splittable hashes (compiled + vectorized twins)
# ----------------------------------------------------------------------

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


@njit(inline="always")
def _mix64(z):
    z = np.uint64(z) + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


@njit(inline="always")
def _to_unit(u):
    # top 53 bits -> [0, 1) -> [-1, 1)
    return np.float32((u >> np.uint64(11)) * (2.0 ** -53) * 2.0 - 1.0)


@njit(inline="always")
def _h_value(i, j, seed):
    u = _mix64(np.uint64(i) ^ np.uint64(j))
    return _to_unit(_mix64(u ^ np.uint64(seed)))


@njit(inline="always")
def _op_value(i, j, k, op_code, seed):
    if op_code == 0:  # identity
        return np.float32(1.0) if i == j else np.float32(0.0)
    lo = i if i < j else j
    hi = j if i < j else i
    u = _mix64(np.uint64(lo) + _GOLDEN * np.uint64(hi))
    u = _mix64(u ^ (np.uint64(k) + np.uint64(1)) * _MIX1)
    return _to_unit(_mix64(u ^ np.uint64(seed)))


def _mix64_np(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        z = z.astype(np.uint64) + _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def _to_unit_np(u: np.ndarray) -> np.ndarray:
    return (u >> np.uint64(11)) * (2.0 ** -53) * 2.0 - 1.0


def _h_values_np(i: np.ndarray, j: np.ndarray, seed: int) -> np.ndarray:
    u = _mix64_np(i.astype(np.uint64) ^ j.astype(np.uint64))
    return _to_unit_np(_mix64_np(u ^ np.uint64(seed))).astype(np.float32)


def _op_values_np(i: np.ndarray, j: np.ndarray, k: int, op_code: int, seed: int) -> np.ndarray:
    if op_code == 0:
        return (i == j).astype(np.float32)
    lo = np.minimum(i, j).astype(np.uint64)
    hi = np.maximum(i, j).astype(np.uint64)
    with np.errstate(over="ignore"):
        u = _mix64_np(lo + _GOLDEN * hi)
        u = _mix64_np(u ^ (np.uint64(k) + np.uint64(1)) * _MIX1)
    return _to_unit_np(_mix64_np(u ^ np.uint64(seed))).astype(np.float32)


_OP_CODES = {"identity": 0, "symmetric_hash": 1}


# ----------------------------------------------------------------------
# skeleton build: per-tile count -> offsets -> fill
# ----------------------------------------------------------------------

@njit(cache=True)
def _fill_tile_cols(lo, occ, r0, r1, c0, c1, thr, local_offsets, out_cols):
    npart = occ.shape[1]
    for ri in range(r1 - r0):
        pos = local_offsets[ri]
        i = r0 + ri
        for j in range(c0, c1):
            if popcount64(lo[i] ^ lo[j]) <= thr:
                if _occ_diff(occ, i, occ, j, npart, npart) <= thr:
                    out_cols[pos] = j
                    pos += 1


def _sub_basis(basis: Basis, orb: Orbital) -> Basis:
    return Basis(basis.states[orb.start:orb.stop], basis.n_particles, basis.n_sp)


ENTRY_DTYPE = np.dtype([("col", np.int64), ("val", np.float32)])


def build_skeleton(
    tiles: Sequence[Tile],
    orbitals: Sequence[Orbital],
    basis: Basis,
    rank: InteractionRank = InteractionRank(),
    value_gen: Callable[[int, int], float] | None = None,
    seed: int = 0,
    policy: str = "parallel_inner",
    workers: int | None = None,
) -> SparseSkeleton:
    """Count, offset, and fill the sparsity structure tile by tile.

    Counting reuses :func:`cimotifs.sparsity.count_pairs` on each tile's
    orbital sub-bases; offsets come from the scan; the fill drives
    :func:`cimotifs.fill.fill_rows` with one pseudo-row per (tile, row).
    ``value_gen`` overrides the built-in hash value ``h(i XOR j)``.
    """
    orb_by_id = {o.id: o for o in orbitals}
    subs = {o.id: _sub_basis(basis, o) for o in orbitals}
    thr = rank.threshold

    tile_rows: list[np.ndarray] = []  # per-tile per-row counts
    for t in tiles:
        pc: PairCounts = count_pairs(
            subs[t.row_orbital], subs[t.col_orbital], rank, "combined", workers=workers
        )
        t.cnt = pc.total
        tile_rows.append(pc.per_row)

    row_counts = (
        np.concatenate(tile_rows) if tile_rows else np.zeros(0, dtype=np.int64)
    )
    if row_counts.size == 0:
        raise ValueError("no tiles to build (empty tile list)")
    co = counts_to_offsets(row_counts)

    # tile.offset = global offset of the tile's first slot
    first_row = 0
    for t, rows in zip(tiles, tile_rows):
        t.offset = int(co.offsets[first_row]) if rows.size else int(co.total)
        first_row += rows.size

    # Pre-enumerate each tile's column indices (same predicate as the count
    # pass), then let fill_rows place (col, value) items per pseudo-row.
    tile_cols: list[np.ndarray] = []
    tile_local: list[np.ndarray] = []  # per-tile local row offsets
    for t, rows in zip(tiles, tile_rows):
        r = orb_by_id[t.row_orbital]
        c = orb_by_id[t.col_orbital]
        local = np.zeros(rows.size, dtype=np.int64)
        if rows.size > 1:
            np.cumsum(rows[:-1], out=local[1:])
        cols = np.empty(int(rows.sum()), dtype=np.int64)
        _fill_tile_cols(
            basis.bits_lo, basis.occ_mat, r.start, r.stop, c.start, c.stop, thr, local, cols
        )
        tile_cols.append(cols)
        tile_local.append(local)

    # map pseudo-row -> (tile index, local row)
    row_tile = np.repeat(
        np.arange(len(tiles)), [rows.size for rows in tile_rows]
    )
    row_local = np.concatenate(
        [np.arange(rows.size) for rows in tile_rows]
    ) if tile_rows else np.zeros(0, dtype=np.int64)

    def row_work(g: int):
        ti = int(row_tile[g])
        ri = int(row_local[g])
        rows = tile_rows[ti]
        local0 = int(tile_local[ti][ri])
        cols = tile_cols[ti][local0:local0 + int(rows[ri])]
        i_global = orb_by_id[tiles[ti].row_orbital].start + ri
        if value_gen is not None:
            vals = np.array([value_gen(i_global, int(j)) for j in cols], dtype=np.float32)
        else:
            vals = _h_values_np(np.full(cols.size, i_global, dtype=np.int64), cols, seed)
        return zip(cols.tolist(), vals.tolist())

    filled = fill_rows(row_work, co, policy=policy, workers=workers, item_dtype=ENTRY_DTYPE)
    return SparseSkeleton(
        tiles=tuple(tiles),
        colind=filled.entries["col"].copy(),
        values=filled.entries["val"].copy(),
        segments=co,
        fill=filled,
    )


# ----------------------------------------------------------------------
# observables contraction (re-walks tiles with the counting predicate)
# ----------------------------------------------------------------------

@dataclass
class ObservablesInput:
    """Eigenvector stubs, operator kind, and the flat accumulator a(1..n_vec*m)."""

    c: np.ndarray  # (n_vec, n) float32
    m_ops: int
    op_kind: str = "symmetric_hash"
    seed: int = 0
    accum: np.ndarray = field(init=False)

    def __post_init__(self):
        self.c = np.ascontiguousarray(self.c, dtype=np.float32)
        if self.c.ndim != 2:
            raise ValueError("coefficients must be (n_vec, n)")
        if self.m_ops < 1:
            raise ValueError("m_ops must be >= 1")
        if self.op_kind not in OP_KINDS:
            raise ValueError(f"unknown op_kind {self.op_kind!r}, expected one of {OP_KINDS}")
        self.accum = np.zeros(self.c.shape[0] * self.m_ops, dtype=np.float32)

    @property
    def n_vec(self) -> int:
        return int(self.c.shape[0])


def random_coefficients(n_vec: int, n: int, seed: int = 0, kind: str = "gauss") -> np.ndarray:
    """Unit-normalized pseudorandom eigenvector stubs.

    ``gauss``: normalized Gaussian rows.  ``signs``: entries ±n**-0.5 with
    pseudorandom signs — when n is a power of 4 every entry and partial sum
    of squares is a dyadic rational, so float32 norms are exactly 1.
    """
    rng = np.random.default_rng(seed)
    if kind == "gauss":
        c = rng.standard_normal((n_vec, n))
        c /= np.linalg.norm(c, axis=1, keepdims=True)
    elif kind == "signs":
        signs = rng.integers(0, 2, size=(n_vec, n)) * 2 - 1
        c = signs / np.sqrt(n)
    else:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    return c.astype(np.float32)


def _collect_pairs(
    tiles: Sequence[Tile],
    orbitals: Sequence[Orbital],
    basis: Basis,
    rank: InteractionRank,
    transpose: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Flat (i, j) arrays of every interacting pair, tile by tile."""
    orb_by_id = {o.id: o for o in orbitals}
    subs = {o.id: _sub_basis(basis, o) for o in orbitals}
    thr = rank.threshold
    chunks_i: list[np.ndarray] = []
    chunks_j: list[np.ndarray] = []
    for t in tiles:
        r = orb_by_id[t.row_orbital]
        c = orb_by_id[t.col_orbital]
        if transpose:
            r, c = c, r
        pc = count_pairs(subs[r.id], subs[c.id], rank, "combined")
        local = np.zeros(pc.per_row.size, dtype=np.int64)
        if pc.per_row.size > 1:
            np.cumsum(pc.per_row[:-1], out=local[1:])
        cols = np.empty(pc.total, dtype=np.int64)
        _fill_tile_cols(
            basis.bits_lo, basis.occ_mat, r.start, r.stop, c.start, c.stop, thr, local, cols
        )
        chunks_i.append(np.repeat(np.arange(r.start, r.stop, dtype=np.int64), pc.per_row))
        chunks_j.append(cols)
    if not chunks_i:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(chunks_i), np.concatenate(chunks_j)


@njit(parallel=True, cache=True)
def _contract_array_clause(pairs_i, pairs_j, c, m_ops, op_code, seed):
    # same discipline as _reduce_array_clause: only the whole-array
    # `a += part` update is privatized per thread by the parallelizer
    n_vec = c.shape[0]
    a = np.zeros(n_vec * m_ops, np.float32)
    for t in prange(pairs_i.shape[0]):
        i = pairs_i[t]
        j = pairs_j[t]
        part = np.empty(n_vec * m_ops, np.float32)
        for k in range(m_ops):
            o = _op_value(i, j, k, op_code, seed)
            for v in range(n_vec):
                part[v * m_ops + k] = c[v, i] * o * c[v, j]
        a += part
    return a


@njit(parallel=True, cache=True)
def _contract_atomic(pairs_i, pairs_j, c, m_ops, op_code, seed, a):
    n_vec = c.shape[0]
    for t in prange(pairs_i.shape[0]):
        i = pairs_i[t]
        j = pairs_j[t]
        for k in range(m_ops):
            o = _op_value(i, j, k, op_code, seed)
            for v in range(n_vec):
                atomic_add_f32(a, v * m_ops + k, c[v, i] * o * c[v, j])


def _render_contract_source(n_vec: int, m_ops: int, parallel: bool) -> str:
    loop = "prange" if parallel else "range"
    lines = [f"def contract_scalars_{n_vec}_{m_ops}(pairs_i, pairs_j, c, op_code, seed):"]
    for v in range(n_vec):
        for k in range(m_ops):
            lines.append(f"    a{v}_{k} = np.float32(0.0)")
    lines.append(f"    for t in {loop}(pairs_i.shape[0]):")
    lines.append("        i = pairs_i[t]")
    lines.append("        j = pairs_j[t]")
    for k in range(m_ops):
        lines.append(f"        o{k} = _op_value(i, j, {k}, op_code, seed)")
    for v in range(n_vec):
        for k in range(m_ops):
            lines.append(f"        a{v}_{k} += c[{v}, i] * o{k} * c[{v}, j]")
    lines.append(f"    out = np.empty({n_vec * m_ops}, np.float32)")
    for v in range(n_vec):
        for k in range(m_ops):
            lines.append(f"    out[{v * m_ops + k}] = a{v}_{k}")
    lines.append("    return out")
    return "\n".join(lines) + "\n"


_contract_cache: dict[tuple[int, int], callable] = {}


def _generated_contraction(n_vec: int, m_ops: int):
    mm = n_vec * m_ops
    if not 2 <= mm <= GENERATED_CEILING:
        raise ValueError(
            f"generated scalar contraction covers 2 <= n_vec*m_ops <= {GENERATED_CEILING}, "
            f"got {n_vec}*{m_ops} = {mm}"
        )
    fn = _contract_cache.get((n_vec, m_ops))
    if fn is None:
        parallel = mm <= PARALLEL_ACCUM_LIMIT
        src = _render_contract_source(n_vec, m_ops, parallel)
        ns = {"np": np, "prange": prange, "_op_value": _op_value}
        exec(compile(src, f"<contract_scalars_{n_vec}_{m_ops}>", "exec"), ns)
        fn = njit(parallel=parallel, cache=False)(ns[f"contract_scalars_{n_vec}_{m_ops}"])
        _contract_cache[(n_vec, m_ops)] = fn
    return fn


def contract_observables(
    tiles: Sequence[Tile],
    orbitals: Sequence[Orbital],
    basis: Basis,
    rank: InteractionRank,
    inputs: ObservablesInput,
    strategy: str = "array_clause",
    workers: int | None = None,
    transpose: bool = False,
) -> np.ndarray:
    """accum[v,k] = sum over interacting pairs (i,j) of c[v,i]*O[i,j,k]*c[v,j].

    Re-walks the tiles with the same interaction predicate as the count pass
    and accumulates under the chosen reduce strategy.  Returns the (n_vec,
    m_ops) view of ``inputs.accum``, which is filled in place.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if inputs.c.shape[1] != len(basis):
        raise ValueError(
            f"coefficients cover {inputs.c.shape[1]} states, basis has {len(basis)}"
        )
    pairs_i, pairs_j = _collect_pairs(tiles, orbitals, basis, rank, transpose=transpose)
    op_code = _OP_CODES[inputs.op_kind]
    n_vec, m_ops = inputs.n_vec, inputs.m_ops
    with numba_threads(workers):
        if strategy == "array_clause":
            a = _contract_array_clause(pairs_i, pairs_j, inputs.c, m_ops, op_code, inputs.seed)
        elif strategy == "atomic_per_element":
            a = np.zeros(n_vec * m_ops, dtype=np.float32)
            _contract_atomic(pairs_i, pairs_j, inputs.c, m_ops, op_code, inputs.seed, a)
        else:
            a = _generated_contraction(n_vec, m_ops)(
                pairs_i, pairs_j, inputs.c, op_code, inputs.seed
            )
    inputs.accum[:] = a
    return inputs.accum.reshape(n_vec, m_ops)


def contract_oracle(
    tiles: Sequence[Tile],
    orbitals: Sequence[Orbital],
    basis: Basis,
    rank: InteractionRank,
    inputs: ObservablesInput,
) -> np.ndarray:
    """Serial double-precision contraction over the same pair set."""
    pairs_i, pairs_j = _collect_pairs(tiles, orbitals, basis, rank)
    c = inputs.c.astype(np.float64)
    op_code = _OP_CODES[inputs.op_kind]
    out = np.zeros((inputs.n_vec, inputs.m_ops), dtype=np.float64)
    for k in range(inputs.m_ops):
        o = _op_values_np(pairs_i, pairs_j, k, op_code, inputs.seed).astype(np.float64)
        for v in range(inputs.n_vec):
            out[v, k] = np.sum(c[v, pairs_i] * o * c[v, pairs_j])
    return out


# ----------------------------------------------------------------------
# end-to-end driver
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineConfig:
    n_states: int = 1024
    particles: int = 8
    n_sp: int = 128
    bias: float = CALIBRATION_BIAS
    rank_d: int = 2
    group_bits: int = DEFAULT_GROUP_BITS
    n_vec: int = 8
    m_ops: int = 4
    strategy: str = "array_clause"
    seed: int = 0
    policy: str = "parallel_inner"
    op_kind: str = "symmetric_hash"
    coeff_kind: str = "gauss"
    workers: int | None = None

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.op_kind not in OP_KINDS:
            raise ValueError(f"unknown op_kind {self.op_kind!r}")


def run_pipeline(cfg: PipelineConfig) -> dict:
    """Run generate → group → tiles → skeleton → contract; return a summary."""
    rank = InteractionRank(cfg.rank_d)
    t0 = time.perf_counter()
    basis = random_basis(cfg.n_states, cfg.particles, cfg.n_sp, cfg.bias, cfg.seed)
    grouped, orbitals = group_orbitals(basis, group_bits=cfg.group_bits)
    t1 = time.perf_counter()
    tiles = enumerate_tiles(orbitals, orbitals, rank)
    t2 = time.perf_counter()
    skeleton = build_skeleton(
        tiles, orbitals, grouped, rank, seed=cfg.seed, policy=cfg.policy, workers=cfg.workers
    )
    t3 = time.perf_counter()
    whole = count_pairs(grouped, grouped, rank, "combined", workers=cfg.workers)
    t4 = time.perf_counter()
    inputs = ObservablesInput(
        c=random_coefficients(cfg.n_vec, cfg.n_states, cfg.seed, cfg.coeff_kind),
        m_ops=cfg.m_ops,
        op_kind=cfg.op_kind,
        seed=cfg.seed,
    )
    accum = contract_observables(
        tiles, orbitals, grouped, rank, inputs, cfg.strategy, workers=cfg.workers
    )
    t5 = time.perf_counter()

    n = cfg.n_states
    return {
        "n_states": n,
        "particles": cfg.particles,
        "n_sp": cfg.n_sp,
        "bias": cfg.bias,
        "rank_d": cfg.rank_d,
        "group_bits": cfg.group_bits,
        "orbitals": len(orbitals),
        "tiles": len(tiles),
        "nnz": skeleton.nnz,
        "whole_basis_pairs": whole.total,
        "conservation_ok": skeleton.nnz == whole.total,
        "density": skeleton.nnz / float(n * n),
        "n_vec": cfg.n_vec,
        "m_ops": cfg.m_ops,
        "strategy": cfg.strategy,
        "policy": cfg.policy,
        "op_kind": cfg.op_kind,
        "seed": cfg.seed,
        "accum_checksum": digest(accum),
        "seconds_setup": t1 - t0,
        "seconds_tiles": t2 - t1,
        "seconds_skeleton": t3 - t2,
        "seconds_whole_count": t4 - t3,
        "seconds_contract": t5 - t4,
    }
