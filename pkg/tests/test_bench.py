"""Benchmark harness: config parsing, suite runs, CSV round trip."""

import numpy as np
import pytest

from cimotifs._util import MAX_WORKERS_ENV
from cimotifs.bench import (
    CSV_COLUMNS,
    BenchConfig,
    BenchRecord,
    emit_csv,
    load_config,
    parse_csv,
    run_suite,
)

TINY = BenchConfig(
    motifs=("count", "scan", "fill", "reduce"),
    count_sizes=(64,),
    count_particles=(6,),
    scan_sizes=(128, 1024),
    fill_rows=32,
    fill_inner=32,
    reduce_sizes=(64,),
    reduce_ms=(4,),
)


@pytest.fixture(scope="module")
def tiny_run():
    return run_suite(TINY)


class TestConfig:
    def test_defaults_are_valid(self):
        BenchConfig()

    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            BenchConfig(reps=2)
        with pytest.raises(ValueError):
            BenchConfig(motifs=("count", "sort"))
        with pytest.raises(ValueError):
            BenchConfig(count_variants=("combined", "occ_only"))
        with pytest.raises(ValueError):
            BenchConfig(scan_variants=("tree",))
        with pytest.raises(ValueError):
            BenchConfig(fill_policies=("racy",))
        with pytest.raises(ValueError):
            BenchConfig(reduce_strategies=("simd",))

    def test_load_config_round_trip(self, tmp_path):
        p = tmp_path / "bench.conf"
        p.write_text(
            "# benchmark sweep\n"
            "motifs = count, reduce\n"
            "seed = 42\n"
            "reps = 5\n"
            "workers = 2\n"
            "bias = 0.1\n"
            "count_sizes = 64, 128\n"
            "count_particles = 4, 8\n"
            "reduce_sizes = 32\n"
            "reduce_ms = 2, 4\n"
            "reduce_strategies = array_clause\n"
        )
        cfg = load_config(p)
        assert cfg.motifs == ("count", "reduce")
        assert cfg.seed == 42
        assert cfg.reps == 5
        assert cfg.workers == 2
        assert cfg.bias == 0.1
        assert cfg.count_sizes == (64, 128)
        assert cfg.reduce_ms == (2, 4)

    def test_load_config_workers_auto(self, tmp_path):
        p = tmp_path / "w.conf"
        p.write_text("workers = auto\n")
        assert load_config(p).workers is None

    def test_load_config_unknown_key_names_valid_ones(self, tmp_path):
        p = tmp_path / "bad.conf"
        p.write_text("motif_list = count\n")
        with pytest.raises(ValueError, match="unknown key"):
            load_config(p)

    def test_load_config_malformed_line(self, tmp_path):
        p = tmp_path / "bad2.conf"
        p.write_text("just some words\n")
        with pytest.raises(ValueError, match="key = value"):
            load_config(p)


class TestRecord:
    def test_row_formats_missing_as_empty(self):
        rec = BenchRecord(
            motif="scan", variant="serial", n=8, m=None, particles=None,
            reps=3, seconds=0.5, rate=0.5,
        )
        assert rec.row() == ["scan", "serial", "8", "", "", "3", "0.5", "0.5"]

    def test_checksum_excluded_from_equality(self):
        kw = dict(motif="count", variant="combined", n=8, m=None, particles=4,
                  reps=3, seconds=1.0, rate=64.0)
        assert BenchRecord(**kw, checksum="aa") == BenchRecord(**kw, checksum="bb")


class TestSuite:
    def test_covers_all_motifs(self, tiny_run):
        records, meta = tiny_run
        assert "failures" not in meta
        assert {r.motif for r in records} == {"count", "scan", "fill", "reduce"}

    def test_rate_semantics(self, tiny_run):
        records, _ = tiny_run
        for r in records:
            if r.motif == "count":
                assert r.rate == pytest.approx(r.n * r.n / r.seconds)
            elif r.motif == "reduce":
                assert r.rate == pytest.approx(r.n * r.n * r.m / r.seconds)
            else:  # scan, fill report latency in both columns
                assert r.rate == r.seconds

    def test_metadata_contents(self, tiny_run):
        _, meta = tiny_run
        assert "resolution" in meta["timer"]
        assert meta["seed"] == "0"
        assert "scan-crossover" in meta
        assert meta["worker-cap-env"] == MAX_WORKERS_ENV

    def test_checksums_agree_across_variants(self, tiny_run):
        # same case (motif, sizes) + different variant -> same result
        records, _ = tiny_run
        by_case = {}
        for r in records:
            by_case.setdefault((r.motif, r.n, r.m, r.particles), set()).add(r.checksum)
        for case, sums in by_case.items():
            assert len(sums) == 1, f"variants disagree on {case}"

    def test_worker_count_leaves_results_invariant(self):
        cfg1 = BenchConfig(
            motifs=("count", "reduce"), count_sizes=(64,), count_particles=(6,),
            reduce_sizes=(64,), reduce_ms=(4,), workers=1,
        )
        cfg8 = BenchConfig(
            motifs=("count", "reduce"), count_sizes=(64,), count_particles=(6,),
            reduce_sizes=(64,), reduce_ms=(4,), workers=8,
        )
        rec1, _ = run_suite(cfg1)
        rec8, _ = run_suite(cfg8)
        assert [r.checksum for r in rec1] == [r.checksum for r in rec8]

    def test_env_cap_respected(self, monkeypatch):
        monkeypatch.setenv(MAX_WORKERS_ENV, "1")
        cfg = BenchConfig(motifs=("scan",), scan_sizes=(64,), workers=8)
        _, meta = run_suite(cfg)
        assert meta["workers"] == "1"

    def test_failures_recorded_not_raised(self, monkeypatch):
        import cimotifs.bench as bench_mod

        def boom(cfg, workers):
            raise RuntimeError("synthetic breakage")
            yield  # pragma: no cover

        monkeypatch.setitem(
            bench_mod.__dict__, "_fill_cases", boom
        )
        cfg = BenchConfig(motifs=("fill", "scan"), scan_sizes=(64,))
        records, meta = run_suite(cfg)
        assert "synthetic breakage" in meta.get("failures", "")
        assert {r.motif for r in records} == {"scan"}


class TestCsv:
    def test_round_trip(self, tiny_run):
        records, meta = tiny_run
        text = emit_csv(records, meta)
        back, meta2 = parse_csv(text)
        assert back == records
        assert [r.checksum for r in back] == [r.checksum for r in records]
        for k, v in meta.items():
            assert meta2[k] == v

    def test_column_order_pinned(self, tiny_run):
        records, meta = tiny_run
        header = next(
            line for line in emit_csv(records, meta).splitlines()
            if not line.startswith("#")
        )
        assert header == "motif,variant,n,m,particles,reps,seconds,rate"
        assert CSV_COLUMNS == tuple(header.split(","))

    def test_empty_records_header_only(self):
        text = emit_csv([], {"seed": "0"})
        data_lines = [l for l in text.splitlines() if l and not l.startswith("#")]
        assert data_lines == [",".join(CSV_COLUMNS)]
        back, meta = parse_csv(text)
        assert back == []
        assert meta["seed"] == "0"

    def test_results_digest_present_and_stable(self, tiny_run):
        records, meta = tiny_run
        text1 = emit_csv(records, meta)
        text2 = emit_csv(records, meta)
        dig1 = [l for l in text1.splitlines() if l.startswith("# results-digest=")]
        assert len(dig1) == 1
        assert text1 == text2

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_csv("not,a,bench,header\n1,2,3,4\n")
        with pytest.raises(ValueError):
            parse_csv("")
        good_header = ",".join(CSV_COLUMNS)
        with pytest.raises(ValueError):
            parse_csv(good_header + "\ncount,combined,64\n")
