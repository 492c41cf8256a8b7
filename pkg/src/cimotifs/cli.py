"""Command-line entry points: ``pipeline run`` and ``bench run``."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bench import BenchConfig, emit_csv, load_config, run_suite
from .fill import POLICIES
from .mbstate import CALIBRATION_BIAS, DEFAULT_N_SP
from .pipeline import DEFAULT_GROUP_BITS, OP_KINDS, PipelineConfig, run_pipeline
from .reduce import STRATEGIES


def _pipeline_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pipeline",
        description="Run the desk-scale matrix-build pipeline and print a summary.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="generate, group, tile, fill, contract")
    run.add_argument("--n-states", type=int, default=1024)
    run.add_argument("--particles", type=int, default=8)
    run.add_argument("--n-sp", type=int, default=DEFAULT_N_SP)
    run.add_argument("--bias", type=float, default=CALIBRATION_BIAS)
    run.add_argument("--rank", type=int, default=2, help="interaction rank d (threshold 2d)")
    run.add_argument("--group-bits", type=int, default=DEFAULT_GROUP_BITS)
    run.add_argument("--n-vec", type=int, default=8)
    run.add_argument("--m-ops", type=int, default=4)
    run.add_argument("--strategy", choices=STRATEGIES, default="array_clause")
    run.add_argument("--op-kind", choices=OP_KINDS, default="symmetric_hash")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument(
        "--policy",
        choices=[p.replace("_", "-") for p in POLICIES],
        default="parallel-inner",
    )
    run.add_argument("--workers", type=int, default=None)
    run.add_argument("--csv", default=None, help="also append the summary as key,value CSV")
    return p


def pipeline_main(argv: Sequence[str] | None = None) -> int:
    args = _pipeline_parser().parse_args(argv)
    cfg = PipelineConfig(
        n_states=args.n_states,
        particles=args.particles,
        n_sp=args.n_sp,
        bias=args.bias,
        rank_d=args.rank,
        group_bits=args.group_bits,
        n_vec=args.n_vec,
        m_ops=args.m_ops,
        strategy=args.strategy,
        seed=args.seed,
        policy=args.policy.replace("-", "_"),
        op_kind=args.op_kind,
        workers=args.workers,
    )
    summary = run_pipeline(cfg)
    for key, val in summary.items():
        print(f"{key}={val}")
    if args.csv:
        with open(args.csv, "a", encoding="utf-8") as fh:
            for key, val in summary.items():
                fh.write(f"{key},{val}\n")
    return 0 if summary["conservation_ok"] else 1


def _bench_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bench",
        description="Time the four motifs and write a CSV of rates.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run the configured benchmark suite")
    run.add_argument("--config", default=None, help="key = value config file (defaults if omitted)")
    run.add_argument("--out", required=True, help="output CSV path")
    return p


def bench_main(argv: Sequence[str] | None = None) -> int:
    args = _bench_parser().parse_args(argv)
    cfg = load_config(args.config) if args.config else BenchConfig()
    records, meta = run_suite(cfg)
    text = emit_csv(records, meta)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.out} ({len(records)} records)")
    if "failures" in meta:
        print(f"failures: {meta['failures']}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(pipeline_main())
