"""Many-body basis states in a hybrid bit / occupation-list representation.

A basis state of ``N`` fermions in ``n_sp`` single-particle states is kept two
ways at once:

* ``occ`` — the sorted 1-based indices of the occupied single-particle states,
  ``a_1 < a_2 < ... < a_N`` (the exact representation);
* ``bitrep`` — one unsigned 64-bit word packing the occupancy of states 1..64
  (bit ``a-1`` set iff state ``a`` is occupied).  States above 64 simply do
  not appear in the word.

The word makes "how different are two states?" answerable with XOR+popcount;
the list answers it exactly for any ``n_sp``.  Pair-difference logic lives in
:mod:`cimotifs.sparsity`; this module owns construction, random generation,
and text serialization.

Random generation draws each state's occupied indices without replacement
with weight ``exp(-bias * k)`` on index ``k``, so ``bias=0`` is uniform and
larger bias concentrates occupancy on low indices.  Two calibrated settings
ship with the package:

* ``CALIBRATION_BIAS`` — at ``N=8, n_sp=128, n=2**12`` the measured density of
  interacting pairs against an independent basis lands near 6e-6, a realistic
  sparsity for this regime.
* ``TREND_BIAS`` — densities fall strictly as the particle number grows
  through 4, 8, 12, 16, 20 at ``n=2**12``.

One exponential knob cannot satisfy both anchors at this scale, hence two
documented values (see the calibration script in ``scripts/``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "BITREP_WIDTH",
    "DEFAULT_N_SP",
    "CALIBRATION_BIAS",
    "TREND_BIAS",
    "ManyBodyState",
    "Basis",
    "make_state",
    "make_basis",
    "random_basis",
    "save_basis",
    "load_basis",
]

BITREP_WIDTH = 64
DEFAULT_N_SP = 128

# Probe-calibrated with this module's sampler (scripts/calibrate_density.py).
CALIBRATION_BIAS = 0.0275
TREND_BIAS = 0.15

_WORD_MASK = (1 << BITREP_WIDTH) - 1


def _pack_word(occ: Sequence[int], lo: int, hi: int) -> int:
    """Pack occupancy of single-particle states lo..hi into one 64-bit word."""
    word = 0
    for a in occ:
        if lo <= a <= hi:
            word |= 1 << (a - lo)
    return word


@dataclass(frozen=True)
class ManyBodyState:
    """One basis state: sorted occupation list plus packed 64-state word.

    ``bitrep`` is derived from ``occ`` at construction, so the invariant
    "bit a-1 set iff a in occ, for a <= 64" holds by construction.

    >>> ManyBodyState((1, 2, 3)).bitrep
    7
    >>> ManyBodyState((65, 66)).bitrep
    0
    """

    occ: tuple[int, ...]
    bitrep: int = field(init=False)

    def __post_init__(self):
        occ = tuple(int(a) for a in self.occ)
        for prev, cur in zip(occ, occ[1:]):
            if cur <= prev:
                raise ValueError(f"occupation list must be strictly increasing, got {occ}")
        if occ and occ[0] < 1:
            raise ValueError(f"occupation indices are 1-based, got {occ}")
        object.__setattr__(self, "occ", occ)
        object.__setattr__(self, "bitrep", _pack_word(occ, 1, BITREP_WIDTH))

    @property
    def n_particles(self) -> int:
        return len(self.occ)


def make_state(occ: Iterable[int], n_sp: int) -> ManyBodyState:
    """Construct a state, validating indices against the space size.

    >>> make_state([1, 64, 65], 128).bitrep == (1 << 63) | 1
    True
    """
    state = ManyBodyState(tuple(occ))
    if state.occ and state.occ[-1] > n_sp:
        raise ValueError(
            f"occupied index {state.occ[-1]} out of range 1..{n_sp}"
        )
    return state


@dataclass(frozen=True)
class Basis:
    """An ordered, immutable collection of distinct states with uniform N.

    Besides the state objects themselves, the constructor packs three
    kernel-side views shared read-only by the counting kernels:
    ``occ_mat`` (n, N) uint16, and per-state occupancy words ``bits_lo``
    (states 1..64) / ``bits_hi`` (states 65..128).
    """

    states: tuple[ManyBodyState, ...]
    n_particles: int
    n_sp: int
    occ_mat: np.ndarray = field(init=False, repr=False, compare=False)
    bits_lo: np.ndarray = field(init=False, repr=False, compare=False)
    bits_hi: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("Basis requires at least one state")
        object.__setattr__(self, "states", states)
        seen = set()
        n, N = len(states), self.n_particles
        occ_mat = np.empty((n, N), dtype=np.uint16)
        bits_lo = np.empty(n, dtype=np.uint64)
        bits_hi = np.empty(n, dtype=np.uint64)
        for i, s in enumerate(states):
            if s.n_particles != N:
                raise ValueError(
                    f"state {i} has {s.n_particles} particles, basis requires {N}"
                )
            if s.occ and s.occ[-1] > self.n_sp:
                raise ValueError(f"state {i} occupies index {s.occ[-1]} > n_sp={self.n_sp}")
            if s.occ in seen:
                raise ValueError(f"duplicate state at position {i}: {s.occ}")
            seen.add(s.occ)
            occ_mat[i, :] = s.occ
            bits_lo[i] = s.bitrep
            bits_hi[i] = _pack_word(s.occ, BITREP_WIDTH + 1, 2 * BITREP_WIDTH)
        for arr in (occ_mat, bits_lo, bits_hi):
            arr.flags.writeable = False
        object.__setattr__(self, "occ_mat", occ_mat)
        object.__setattr__(self, "bits_lo", bits_lo)
        object.__setattr__(self, "bits_hi", bits_hi)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i: int) -> ManyBodyState:
        return self.states[i]


def make_basis(occs: Iterable[Sequence[int]], n_sp: int) -> Basis:
    """Build a Basis from occupation lists (particle number inferred)."""
    states = tuple(make_state(o, n_sp) for o in occs)
    if not states:
        raise ValueError("cannot build an empty Basis")
    return Basis(states, states[0].n_particles, n_sp)


# ----------------------------------------------------------------------
# random generation
# ----------------------------------------------------------------------

def random_basis(
    n_states: int,
    n_particles: int,
    n_sp: int = DEFAULT_N_SP,
    bias: float = 0.0,
    seed: int = 0,
) -> Basis:
    """Generate ``n_states`` distinct random states, biased toward low indices.

    Index ``k`` carries weight ``exp(-bias * k)``; each state's indices are
    drawn without replacement under those weights (Gumbel-top-N keys, which
    realizes exactly that distribution and vectorizes).  Duplicated states are
    rejected and redrawn, so the result is a set; generation is deterministic
    for a fixed seed, independent of thread count.
    """
    if n_particles < 1 or n_particles > n_sp:
        raise ValueError(f"need 1 <= n_particles <= n_sp, got N={n_particles}, n_sp={n_sp}")
    if n_states < 1:
        raise ValueError("n_states must be >= 1")
    if bias < 0:
        raise ValueError("bias must be >= 0")
    limit = math.comb(n_sp, n_particles)
    if n_states > limit:
        raise ValueError(
            f"{n_states} distinct states requested but only {limit} "
            f"{n_particles}-subsets of {n_sp} exist"
        )

    rng = np.random.default_rng(seed)
    logw = -bias * np.arange(1, n_sp + 1, dtype=np.float64)
    seen: set[bytes] = set()
    rows: list[np.ndarray] = []
    while len(rows) < n_states:
        want = n_states - len(rows)
        batch = want + max(8, want // 16)  # slack: collisions are rare
        keys = rng.gumbel(size=(batch, n_sp)) + logw
        picks = np.argpartition(keys, n_sp - n_particles, axis=1)[:, n_sp - n_particles:]
        picks = np.sort(picks, axis=1).astype(np.uint16) + 1
        for row in picks:
            tag = row.tobytes()
            if tag in seen:
                continue
            seen.add(tag)
            rows.append(row)
            if len(rows) == n_states:
                break

    states = tuple(ManyBodyState(tuple(int(a) for a in row)) for row in rows)
    return Basis(states, n_particles, n_sp)


# ----------------------------------------------------------------------
# serialization: "N n_sp" header, then one space-separated state per line
# ----------------------------------------------------------------------

def save_basis(basis: Basis, path: str | Path) -> None:
    lines = [f"{basis.n_particles} {basis.n_sp}"]
    lines.extend(" ".join(str(a) for a in s.occ) for s in basis)
    Path(path).write_text("\n".join(lines) + "\n")


def load_basis(path: str | Path) -> Basis:
    text = Path(path).read_text().splitlines()
    if not text:
        raise ValueError(f"{path}: empty basis file")
    try:
        n_particles, n_sp = (int(t) for t in text[0].split())
    except ValueError as e:
        raise ValueError(f"{path}:1: malformed header (want 'N n_sp'): {text[0]!r}") from e
    states = []
    for lineno, line in enumerate(text[1:], start=2):
        if not line.strip():
            continue
        try:
            occ = tuple(int(t) for t in line.split())
        except ValueError as e:
            raise ValueError(f"{path}:{lineno}: malformed state line {line!r}") from e
        states.append(make_state(occ, n_sp))
    if not states:
        raise ValueError(f"{path}: no states after header")
    return Basis(tuple(states), n_particles, n_sp)
