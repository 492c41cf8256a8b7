"""Small-array reduction strategies against the factorized oracle.

Because every product enters the sum exactly once, ``a[k]`` equals
``(sum_i x[k,i]) * (sum_j y[k,j])`` — computable in double precision
without touching the n^2 iteration space.  Strategies only reorder the
float32 additions, so they must land within the documented rounding
envelope of that oracle, and *exactly* on it for integer-valued inputs.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cimotifs.reduce import (
    GENERATED_CEILING,
    PARALLEL_ACCUM_LIMIT,
    STRATEGIES,
    ObservableAccumulator,
    agreement_tolerance,
    generate_scalar_reduction,
    reduce_observables,
    reduce_oracle,
    render_scalar_reduction_source,
)


def gaussian_inputs(m, n, seed):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((m, n)).astype(np.float32)
    y = rng.standard_normal((m, n)).astype(np.float32)
    return x, y


def integer_inputs(m, n, seed, density=0.1):
    rng = np.random.default_rng(seed)
    x = (rng.random((m, n)) < density).astype(np.float32)
    y = (rng.random((m, n)) < density).astype(np.float32)
    return x, y


class TestWorkedExamples:
    @pytest.mark.parametrize("strategy", STRATEGIES)
    def test_all_ones(self, strategy):
        x = np.ones((4, 8), dtype=np.float32)
        acc = reduce_observables(x, x, strategy)
        assert acc.a.tolist() == [64.0] * 4
        assert acc.m == 4

    @pytest.mark.parametrize("strategy", STRATEGIES)
    def test_indicator_rows(self, strategy):
        # x[k] selects column k, y[k] sums everything -> a[k] = n
        m, n = 3, 6
        x = np.zeros((m, n), dtype=np.float32)
        x[np.arange(m), np.arange(m)] = 1.0
        y = np.ones((m, n), dtype=np.float32)
        acc = reduce_observables(x, y, strategy)
        assert acc.a.tolist() == [float(n)] * m


class TestOracle:
    def test_factorization(self):
        x, y = gaussian_inputs(4, 32, 0)
        want = [
            float(x[k].astype(np.float64).sum() * y[k].astype(np.float64).sum())
            for k in range(4)
        ]
        assert np.allclose(reduce_oracle(x, y), want, rtol=0, atol=0)

    @pytest.mark.parametrize("strategy", STRATEGIES)
    @pytest.mark.parametrize("m,n", [(2, 16), (4, 64), (8, 128), (16, 256)])
    def test_strategies_within_tolerance(self, strategy, m, n):
        x, y = gaussian_inputs(m, n, seed=m * 1000 + n)
        acc = reduce_observables(x, y, strategy)
        gap = np.abs(acc.a.astype(np.float64) - reduce_oracle(x, y)).max()
        assert gap <= agreement_tolerance(x, y)

    @settings(max_examples=15)
    @given(st.integers(2, 12), st.integers(1, 80), st.integers(0, 2**31))
    def test_tolerance_property(self, m, n, seed):
        x, y = gaussian_inputs(m, n, seed)
        tol = agreement_tolerance(x, y)
        want = reduce_oracle(x, y)
        for strategy in STRATEGIES:
            acc = reduce_observables(x, y, strategy)
            assert np.abs(acc.a.astype(np.float64) - want).max() <= tol


class TestExactInteger:
    @pytest.mark.parametrize("strategy", STRATEGIES)
    def test_exact_on_integer_inputs(self, strategy):
        x, y = integer_inputs(8, 512, seed=1)
        acc = reduce_observables(x, y, strategy)
        assert np.array_equal(acc.a.astype(np.float64), reduce_oracle(x, y))

    def test_atomic_worker_count_invariance(self):
        # adds of integers commute exactly: 1 worker == 8 workers bitwise
        x, y = integer_inputs(6, 256, seed=2)
        one = reduce_observables(x, y, "atomic_per_element", workers=1)
        many = reduce_observables(x, y, "atomic_per_element", workers=8)
        assert one.a.tobytes() == many.a.tobytes()

    def test_strategies_agree_bitwise_on_integers(self):
        x, y = integer_inputs(4, 300, seed=3)
        results = [reduce_observables(x, y, s).a.tobytes() for s in STRATEGIES]
        assert results[0] == results[1] == results[2]


class TestGeneratedScalars:
    @pytest.mark.parametrize("m", [2, 3])
    def test_source_structure(self, m):
        src = render_scalar_reduction_source(m, parallel=True)
        # one private scalar accumulator per observable, no arrays
        assert src.count("= np.float32(0.0)") == m
        assert src.count("out[") == m
        assert "prange" in src
        assert "np.zeros" not in src

    def test_sequential_above_parallel_limit(self):
        big = render_scalar_reduction_source(PARALLEL_ACCUM_LIMIT + 1, parallel=False)
        assert "prange" not in big

    def test_ceiling_rejections(self):
        for bad in (0, 1, GENERATED_CEILING + 1):
            with pytest.raises(ValueError):
                render_scalar_reduction_source(bad, parallel=False)
            with pytest.raises(ValueError):
                generate_scalar_reduction(bad)

    def test_generated_matches_array_clause(self):
        for m in (2, 5, 16):
            x, y = gaussian_inputs(m, 48, seed=m)
            gen = reduce_observables(x, y, "generated_scalars")
            ref = reduce_oracle(x, y)
            assert np.abs(gen.a.astype(np.float64) - ref).max() <= agreement_tolerance(x, y)

    def test_cache_returns_same_function(self):
        assert generate_scalar_reduction(4) is generate_scalar_reduction(4)

    def test_precommitted_sizes_are_used(self):
        # the repo ships compiled routines for the benchmark grid
        from cimotifs import _reductions_gen

        for m in (2, 8, 64, 256):
            assert m in _reductions_gen.REGISTRY


class TestValidation:
    def test_rejects_shape_mismatch(self):
        x = np.ones((2, 4), dtype=np.float32)
        y = np.ones((2, 5), dtype=np.float32)
        with pytest.raises(ValueError):
            reduce_observables(x, y)

    def test_rejects_unknown_strategy(self):
        x = np.ones((2, 4), dtype=np.float32)
        with pytest.raises(ValueError):
            reduce_observables(x, x, "magic")

    def test_accumulator_requires_finite_f32(self):
        with pytest.raises(ValueError):
            ObservableAccumulator(a=np.array([np.inf], dtype=np.float32), m=1)
        with pytest.raises(ValueError):
            ObservableAccumulator(a=np.array([1.0, 2.0], dtype=np.float32), m=3)
