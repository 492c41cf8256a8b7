"""Shared test configuration.

The thread-count default must land before numba is imported anywhere, so
this assignment stays at the very top: the host may expose few CPUs, and
several tests exercise multi-worker behaviour (contention, linearizability),
which needs logical threads even when cores are scarce.
"""

import os

os.environ.setdefault("NUMBA_NUM_THREADS", "8")

from hypothesis import HealthCheck, settings  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,  # JIT warmup makes first examples slow
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")
