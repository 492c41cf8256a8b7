"""State construction, random generation, and serialization."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cimotifs.mbstate import (
    BITREP_WIDTH,
    Basis,
    ManyBodyState,
    load_basis,
    make_basis,
    make_state,
    random_basis,
    save_basis,
)


occ_lists = st.lists(
    st.integers(min_value=1, max_value=128), min_size=1, max_size=12, unique=True
).map(sorted).map(tuple)


class TestManyBodyState:
    def test_examples(self):
        assert ManyBodyState((1, 2, 3)).bitrep == 0b111
        assert ManyBodyState((1, 64)).bitrep == (1 << 63) | 1
        # states above the word simply don't appear
        assert ManyBodyState((65, 100, 128)).bitrep == 0

    @given(occ_lists)
    def test_bitrep_projects_low_window(self, occ):
        s = ManyBodyState(occ)
        expected = sum(1 << (a - 1) for a in occ if a <= BITREP_WIDTH)
        assert s.bitrep == expected
        assert s.bitrep.bit_count() == sum(1 for a in occ if a <= BITREP_WIDTH)
        assert s.n_particles == len(occ)

    def test_rejects_disorder_and_duplicates(self):
        with pytest.raises(ValueError):
            ManyBodyState((3, 2))
        with pytest.raises(ValueError):
            ManyBodyState((2, 2))
        with pytest.raises(ValueError):
            ManyBodyState((0, 1))

    def test_make_state_range_check(self):
        make_state([1, 64, 65], 128)
        with pytest.raises(ValueError):
            make_state([1, 129], 128)


class TestBasis:
    def test_packed_views(self):
        b = make_basis([(1, 2), (1, 65), (64, 128)], 128)
        assert b.occ_mat.tolist() == [[1, 2], [1, 65], [64, 128]]
        assert b.bits_lo.tolist() == [3, 1, 1 << 63]
        assert b.bits_hi.tolist() == [0, 1, 1 << 63]
        assert not b.occ_mat.flags.writeable

    def test_rejects_mixed_particle_numbers(self):
        with pytest.raises(ValueError):
            make_basis([(1, 2), (3,)], 128)

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            make_basis([(1, 2), (1, 2)], 128)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            make_basis([], 128)
        with pytest.raises(ValueError):
            Basis((), 2, 128)


class TestRandomBasis:
    def test_deterministic_per_seed(self):
        a = random_basis(200, 8, seed=7)
        b = random_basis(200, 8, seed=7)
        c = random_basis(200, 8, seed=8)
        assert a.states == b.states
        assert a.states != c.states

    def test_states_distinct_and_valid(self):
        b = random_basis(500, 6, n_sp=64, bias=0.1, seed=2)
        assert len({s.occ for s in b}) == 500
        for s in b:
            assert len(s.occ) == 6
            assert 1 <= s.occ[0] and s.occ[-1] <= 64

    def test_bias_zero_is_uniform(self):
        # each index appears with frequency ~ N/n_sp
        b = random_basis(4000, 8, n_sp=128, bias=0.0, seed=3)
        freq = np.bincount(b.occ_mat.ravel(), minlength=129)[1:] / 4000.0
        expected = 8 / 128
        assert abs(freq.mean() - expected) < 1e-12
        assert freq.min() > expected * 0.5 and freq.max() < expected * 1.6

    def test_bias_concentrates_low_indices(self):
        lo = random_basis(4000, 8, bias=0.0, seed=4)
        hi = random_basis(4000, 8, bias=0.3, seed=4)
        assert hi.occ_mat.mean() < lo.occ_mat.mean() * 0.5

    @given(st.floats(min_value=0.0, max_value=0.5), st.integers(min_value=0, max_value=10))
    def test_mean_index_monotone_in_bias(self, bias, seed):
        few = random_basis(300, 8, bias=bias, seed=seed)
        more = random_basis(300, 8, bias=bias + 0.25, seed=seed)
        assert more.occ_mat.mean() < few.occ_mat.mean()

    def test_exhausts_small_spaces(self):
        # ask for every 2-subset of 6 — must terminate and cover all of them
        b = random_basis(15, 2, n_sp=6, bias=0.2, seed=0)
        assert len({s.occ for s in b}) == math.comb(6, 2)

    def test_rejects_impossible_requests(self):
        with pytest.raises(ValueError):
            random_basis(16, 2, n_sp=6)  # comb(6,2)=15
        with pytest.raises(ValueError):
            random_basis(10, 0)
        with pytest.raises(ValueError):
            random_basis(10, 129, n_sp=128)
        with pytest.raises(ValueError):
            random_basis(0, 8)
        with pytest.raises(ValueError):
            random_basis(10, 8, bias=-0.1)


class TestSerialization:
    def test_round_trip(self, tmp_path):
        b = random_basis(64, 5, n_sp=100, bias=0.05, seed=11)
        path = tmp_path / "basis.txt"
        save_basis(b, path)
        back = load_basis(path)
        assert back.states == b.states
        assert back.n_particles == b.n_particles
        assert back.n_sp == b.n_sp

    def test_header_format(self, tmp_path):
        path = tmp_path / "b.txt"
        save_basis(make_basis([(1, 3)], 16), path)
        assert path.read_text().splitlines()[0] == "2 16"

    def test_malformed_inputs(self, tmp_path):
        cases = {
            "empty.txt": "",
            "header.txt": "2\n1 2\n",
            "states.txt": "2 16\n",
            "badline.txt": "2 16\n1 x\n",
            "range.txt": "2 16\n1 17\n",
        }
        for name, text in cases.items():
            p = tmp_path / name
            p.write_text(text)
            with pytest.raises(ValueError):
                load_basis(p)
