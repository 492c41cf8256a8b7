"""Shared plumbing: worker-count resolution and result digests.

Worker policy
-------------
Compiled kernels parallelize through numba's thread pool, whose size is fixed
at import by ``NUMBA_NUM_THREADS`` but can be lowered per call site with
``numba.set_num_threads``.  Pure-Python concurrent paths use their own thread
pools.  Both honor the ``CIMOTIFS_MAX_WORKERS`` environment variable as a hard
upper bound so benchmark hosts can pin resource usage without touching
configs.
"""

from __future__ import annotations

import contextlib
import hashlib
import os

import numba
import numpy as np

MAX_WORKERS_ENV = "CIMOTIFS_MAX_WORKERS"

__all__ = ["MAX_WORKERS_ENV", "env_worker_cap", "resolve_workers", "numba_threads", "digest"]


def env_worker_cap() -> int | None:
    raw = os.environ.get(MAX_WORKERS_ENV)
    if raw is None or not raw.strip():
        return None
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{MAX_WORKERS_ENV} must be >= 1, got {raw!r}")
    return cap


def resolve_workers(requested: int | None, *, ceiling: int | None = None) -> int:
    """Clamp a requested worker count to the env cap and an optional ceiling."""
    n = requested if requested is not None else (ceiling or numba.config.NUMBA_NUM_THREADS)
    if requested is not None and requested < 1:
        raise ValueError(f"workers must be >= 1, got {requested}")
    cap = env_worker_cap()
    if cap is not None:
        n = min(n, cap)
    if ceiling is not None:
        n = min(n, ceiling)
    return max(1, n)


@contextlib.contextmanager
def numba_threads(workers: int | None):
    """Temporarily set numba's thread count (bounded by its launch-time pool)."""
    if workers is None:
        yield numba.get_num_threads()
        return
    n = resolve_workers(workers, ceiling=numba.config.NUMBA_NUM_THREADS)
    prev = numba.get_num_threads()
    numba.set_num_threads(n)
    try:
        yield n
    finally:
        numba.set_num_threads(prev)


def digest(*parts) -> str:
    """Stable hex digest of arrays/bytes/strs — used for result checksums."""
    h = hashlib.sha256()
    for p in parts:
        if isinstance(p, np.ndarray):
            h.update(np.ascontiguousarray(p).tobytes())
        elif isinstance(p, bytes):
            h.update(p)
        else:
            h.update(str(p).encode())
        h.update(b"|")
    return h.hexdigest()[:16]
