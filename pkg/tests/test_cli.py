"""Console entry points, driven end to end through their main() functions."""

import pytest

from cimotifs.bench import parse_csv
from cimotifs.cli import bench_main, pipeline_main


def parse_kv(stdout: str) -> dict:
    out = {}
    for line in stdout.splitlines():
        if "=" in line:
            k, _, v = line.partition("=")
            out[k] = v
    return out


class TestPipelineCli:
    def test_run_prints_summary(self, capsys):
        rc = pipeline_main([
            "run", "--n-states", "96", "--particles", "6",
            "--n-vec", "4", "--m-ops", "2", "--seed", "3",
        ])
        assert rc == 0
        kv = parse_kv(capsys.readouterr().out)
        assert kv["n_states"] == "96"
        assert kv["conservation_ok"] == "True"
        assert int(kv["nnz"]) == int(kv["whole_basis_pairs"])
        assert float(kv["density"]) > 0

    def test_run_policy_and_strategy_flags(self, capsys):
        rc = pipeline_main([
            "run", "--n-states", "64", "--particles", "5", "--n-vec", "2",
            "--m-ops", "2", "--policy", "serial-inner",
            "--strategy", "generated_scalars", "--group-bits", "8",
        ])
        assert rc == 0
        kv = parse_kv(capsys.readouterr().out)
        assert kv["policy"] == "serial_inner"
        assert kv["strategy"] == "generated_scalars"

    def test_csv_side_output(self, capsys, tmp_path):
        out = tmp_path / "summary.csv"
        rc = pipeline_main([
            "run", "--n-states", "64", "--particles", "5",
            "--n-vec", "2", "--m-ops", "2", "--csv", str(out),
        ])
        assert rc == 0
        capsys.readouterr()
        rows = dict(
            line.split(",", 1) for line in out.read_text().splitlines()
        )
        assert rows["n_states"] == "64"
        assert rows["conservation_ok"] == "True"

    def test_requires_subcommand(self):
        with pytest.raises(SystemExit):
            pipeline_main([])


class TestBenchCli:
    def test_run_with_config(self, capsys, tmp_path):
        conf = tmp_path / "b.conf"
        conf.write_text(
            "motifs = scan, fill\n"
            "scan_sizes = 64, 256\n"
            "fill_rows = 16\n"
            "fill_inner = 16\n"
        )
        out = tmp_path / "out.csv"
        rc = bench_main(["run", "--config", str(conf), "--out", str(out)])
        assert rc == 0
        assert "wrote" in capsys.readouterr().out
        records, meta = parse_csv(out.read_text())
        assert {r.motif for r in records} == {"scan", "fill"}
        assert all(r.checksum for r in records)
        assert "scan-crossover" in meta

    def test_out_flag_required(self):
        with pytest.raises(SystemExit):
            bench_main(["run"])

    def test_missing_config_file_errors(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            bench_main(["run", "--config", str(tmp_path / "nope.conf"),
                        "--out", str(tmp_path / "o.csv")])
