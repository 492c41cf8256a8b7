"""Worker resolution, env capping, and checksum helper."""

import numpy as np
import pytest

from cimotifs._util import MAX_WORKERS_ENV, digest, env_worker_cap, numba_threads, resolve_workers


class TestResolveWorkers:
    def test_passthrough_without_cap(self, monkeypatch):
        monkeypatch.delenv(MAX_WORKERS_ENV, raising=False)
        assert resolve_workers(4) == 4

    def test_env_cap_applies(self, monkeypatch):
        monkeypatch.setenv(MAX_WORKERS_ENV, "2")
        assert env_worker_cap() == 2
        assert resolve_workers(8) == 2
        assert resolve_workers(1) == 1

    def test_ceiling(self, monkeypatch):
        monkeypatch.delenv(MAX_WORKERS_ENV, raising=False)
        assert resolve_workers(100, ceiling=16) == 16

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            resolve_workers(0)

    def test_rejects_bad_env(self, monkeypatch):
        monkeypatch.setenv(MAX_WORKERS_ENV, "zero")
        with pytest.raises(ValueError):
            env_worker_cap()


class TestNumbaThreads:
    def test_restores_thread_count(self):
        import numba

        before = numba.get_num_threads()
        with numba_threads(1) as eff:
            assert eff == 1
            assert numba.get_num_threads() == 1
        assert numba.get_num_threads() == before

    def test_none_keeps_current(self):
        import numba

        before = numba.get_num_threads()
        with numba_threads(None) as eff:
            assert eff == before


class TestDigest:
    def test_stable_and_distinct(self):
        a = np.arange(5, dtype=np.int64)
        assert digest(a) == digest(a.copy())
        assert digest(a) != digest(a[::-1].copy())
        assert len(digest(a)) == 16

    def test_mixed_part_types(self):
        a = np.ones(3, dtype=np.float32)
        d = digest(a, "label", b"raw")
        assert d == digest(a, "label", b"raw")

    def test_separator_prevents_concatenation_collisions(self):
        assert digest("ab", "c") != digest("a", "bc")
