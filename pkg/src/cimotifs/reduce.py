"""Small-array reduction strategies for the observables contraction motif.

The motif: ``a[k] = sum_{i,j} x[k,i] * y[k,j]`` for ``k < m`` with small
``m`` (typically 8..256), accumulated in single precision over the full
``n x n`` iteration space with no intermediate ``O(n*m)`` materialization.
Because the sum runs over all (i, j), it factorizes as
``(sum_i x[k,i]) * (sum_j y[k,j])`` — computed in double precision, that is
the independent oracle.

Three strategies compute the same result with different merge disciplines:

* ``array_clause``      — parallel loop over (i, j) with the accumulator
                          array as a reduction variable (per-worker private
                          copies, merged on completion);
* ``atomic_per_element``— parallel loop over the flat (i, j, k) space, each
                          product atomically added to ``a[k]``;
* ``generated_scalars`` — a routine generated per ``m`` holding ``m``
                          independent scalar accumulators ``a1..am``, written
                          back to the array at the end.

Summation order is the only freedom: results agree with the oracle within
``2**-20 * n**2 * max|x| * max|y|`` (single-precision accumulation of n**2
bounded terms; each partial sum is bounded by ``n**2 * max|x| * max|y|`` and
float32 rounding contributes at most one 2**-24 relative step per addition,
leaving a wide safety factor at the tested sizes).

Generated routines are specialized source (see ``scripts/gen_reductions.py``;
common sizes are committed in ``_reductions_gen.py``, other sizes are rendered
on demand from the same template).  Two documented limits: the template
refuses m outside [2, 256] — code size and compiler resource use grow with
every additional accumulator — and routines with m > 64 are compiled for a
single worker because the parallel backend's compile cost and memory grow
superlinearly in the number of reduction variables (measured: ~1 s at m=8,
~11 s at m=64, ~39 s at m=128, out-of-memory at m=256 on a 4 GB build host;
the sequential backend compiles m=256 in ~8 s).

All loop linearization arithmetic is 64-bit: the flat (i, j, k) space reaches
2**32 already at m=64, n=2**13.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit, prange

from ._intrinsics import atomic_add_f32
from ._util import numba_threads

__all__ = [
    "STRATEGIES",
    "GENERATED_CEILING",
    "PARALLEL_ACCUM_LIMIT",
    "ObservableAccumulator",
    "reduce_observables",
    "reduce_oracle",
    "agreement_tolerance",
    "generate_scalar_reduction",
]

STRATEGIES = ("array_clause", "atomic_per_element", "generated_scalars")
GENERATED_CEILING = 256
PARALLEL_ACCUM_LIMIT = 64
TOLERANCE_EPS = 2.0 ** -20


@dataclass(frozen=True)
class ObservableAccumulator:
    """m single-precision accumulator values."""

    a: np.ndarray
    m: int

    def __post_init__(self):
        a = np.asarray(self.a, dtype=np.float32)
        object.__setattr__(self, "a", a)
        if a.ndim != 1 or a.size != self.m:
            raise ValueError(f"accumulator must be 1-D of length m={self.m}")
        if not np.isfinite(a).all():
            raise ValueError("accumulator contains non-finite values")


# ----------------------------------------------------------------------
# fixed-strategy kernels
# ----------------------------------------------------------------------

@njit(parallel=True, cache=True)
def _reduce_array_clause(x, y):
    # whole-array `a += part` is the only array form the parallelizer
    # privatizes per thread; element-indexed `a[k] +=` would race
    m = x.shape[0]
    n = x.shape[1]
    a = np.zeros(m, np.float32)
    for i in prange(n):
        part = np.empty(m, np.float32)
        for k in range(m):
            xi = x[k, i]
            acc = np.float32(0.0)
            for j in range(n):
                acc += xi * y[k, j]
            part[k] = acc
        a += part
    return a


@njit(parallel=True, cache=True)
def _reduce_atomic(x, y, a):
    m = x.shape[0]
    n = x.shape[1]
    total = np.int64(m) * np.int64(n) * np.int64(n)
    for t in prange(total):
        k = t % m
        j = (t // m) % n
        i = t // (np.int64(m) * np.int64(n))
        atomic_add_f32(a, k, x[k, i] * y[k, j])


# ----------------------------------------------------------------------
# generated-scalars strategy
# ----------------------------------------------------------------------

def render_scalar_reduction_source(m: int, parallel: bool) -> str:
    """Render the m-accumulator routine's source (shared by the gen script)."""
    if not 2 <= m <= GENERATED_CEILING:
        raise ValueError(
            f"generated scalar reductions cover 2 <= m <= {GENERATED_CEILING}, got m={m}"
        )
    loop = "prange" if parallel else "range"
    lines = [
        f"def reduce_scalars_{m}(x, y):",
        "    n = x.shape[1]",
        "    nn = np.int64(n) * np.int64(n)",
    ]
    lines += [f"    a{k} = np.float32(0.0)" for k in range(1, m + 1)]
    lines += [
        f"    for t in {loop}(nn):",
        "        i = t // n",
        "        j = t % n",
    ]
    lines += [f"        a{k} += x[{k - 1}, i] * y[{k - 1}, j]" for k in range(1, m + 1)]
    lines += [f"    out = np.empty({m}, np.float32)"]
    lines += [f"    out[{k - 1}] = a{k}" for k in range(1, m + 1)]
    lines += ["    return out"]
    return "\n".join(lines) + "\n"


_generated_cache: dict[int, callable] = {}


def generate_scalar_reduction(m: int):
    """Return the compiled m-accumulator routine, rendering it if needed."""
    if not 2 <= m <= GENERATED_CEILING:
        raise ValueError(
            f"generated scalar reductions cover 2 <= m <= {GENERATED_CEILING}, got m={m}"
        )
    fn = _generated_cache.get(m)
    if fn is not None:
        return fn
    try:
        from . import _reductions_gen
        fn = _reductions_gen.REGISTRY.get(m)
    except ImportError:
        fn = None
    if fn is None:
        parallel = m <= PARALLEL_ACCUM_LIMIT
        ns = {"np": np, "prange": prange}
        exec(compile(render_scalar_reduction_source(m, parallel), f"<reduce_scalars_{m}>", "exec"), ns)
        fn = njit(parallel=parallel, cache=False)(ns[f"reduce_scalars_{m}"])
    _generated_cache[m] = fn
    return fn


# ----------------------------------------------------------------------
# public API
# ----------------------------------------------------------------------

def _prepare(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.ascontiguousarray(x, dtype=np.float32)
    y = np.ascontiguousarray(y, dtype=np.float32)
    if x.ndim != 2 or x.shape != y.shape:
        raise ValueError(f"x and y must be equal-shape (m, n) matrices, got {x.shape} vs {y.shape}")
    if x.shape[0] < 1 or x.shape[1] < 1:
        raise ValueError("m and n must both be >= 1")
    return x, y


def reduce_observables(
    x, y, strategy: str = "array_clause", workers: int | None = None
) -> ObservableAccumulator:
    """Accumulate ``a[k] = sum_ij x[k,i] * y[k,j]`` under the chosen strategy."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    x, y = _prepare(x, y)
    m = x.shape[0]
    with numba_threads(workers):
        if strategy == "array_clause":
            a = _reduce_array_clause(x, y)
        elif strategy == "atomic_per_element":
            a = np.zeros(m, dtype=np.float32)
            _reduce_atomic(x, y, a)
        else:
            a = generate_scalar_reduction(m)(x, y)
    return ObservableAccumulator(a=a, m=m)


def reduce_oracle(x, y) -> np.ndarray:
    """Factorized double-precision oracle: (sum_i x[k,i]) * (sum_j y[k,j])."""
    x, y = _prepare(x, y)
    return x.astype(np.float64).sum(axis=1) * y.astype(np.float64).sum(axis=1)


def agreement_tolerance(x, y) -> float:
    """Permitted |strategy - oracle| gap: 2**-20 * n**2 * max|x| * max|y|."""
    x, y = _prepare(x, y)
    n = x.shape[1]
    mx = float(np.abs(x).max()) if x.size else 0.0
    my = float(np.abs(y).max()) if y.size else 0.0
    return TOLERANCE_EPS * float(n) * float(n) * mx * my
