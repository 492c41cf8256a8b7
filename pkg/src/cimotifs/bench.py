"""Rate-measurement harness for the four motifs.

Produces a flat CSV with exactly these columns::

    motif,variant,n,m,particles,reps,seconds,rate

plus ``#`` comment lines carrying run metadata (timer resolution, seed,
worker settings, per-case result checksums, an aggregate results digest,
and the serial/parallel scan crossover point).  Fields that do not apply
to a motif are left empty.

Rate semantics per motif:

* ``count``  — state pairs scanned per second, ``n*n / seconds``;
* ``scan``   — the ``rate`` column repeats ``seconds`` (latency is the
  figure of merit for a prefix sum, not a throughput);
* ``fill``   — as ``scan``;
* ``reduce`` — accumulated products per second, ``n*n*m / seconds``.

Timing is one untimed warmup followed by the median of ``reps`` >= 3
timed repetitions.  All inputs are derived deterministically from the
config seed; reduce inputs are 0/1 valued so every strategy accumulates
exactly and checksums are bit-stable across workers and repetitions.
"""

from __future__ import annotations

import os
import statistics
import time
from dataclasses import dataclass, field, fields
from typing import Iterable, Sequence

import numpy as np

from . import fill as _fill
from . import reduce as _reduce
from . import scan as _scan
from ._util import MAX_WORKERS_ENV, digest, env_worker_cap
from .mbstate import CALIBRATION_BIAS, random_basis
from .sparsity import COUNT_VARIANTS, InteractionRank, count_pairs

__all__ = [
    "CSV_COLUMNS",
    "MOTIFS",
    "BenchConfig",
    "BenchRecord",
    "load_config",
    "run_suite",
    "emit_csv",
    "parse_csv",
]

CSV_COLUMNS = ("motif", "variant", "n", "m", "particles", "reps", "seconds", "rate")
MOTIFS = ("count", "scan", "fill", "reduce")

SCAN_VARIANTS = ("serial", "parallel", "queued")
FILL_POLICIES = ("parallel", "serial")


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark case.  ``checksum`` lives in comments, not columns."""

    motif: str
    variant: str
    n: int
    m: int | None
    particles: int | None
    reps: int
    seconds: float
    rate: float
    checksum: str | None = field(default=None, compare=False)

    def row(self) -> list[str]:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, float):
                return repr(v)
            return str(v)

        return [cell(getattr(self, c)) for c in CSV_COLUMNS]


@dataclass(frozen=True)
class BenchConfig:
    motifs: tuple[str, ...] = MOTIFS
    seed: int = 0
    reps: int = 3
    workers: int | None = None
    bias: float = CALIBRATION_BIAS
    count_sizes: tuple[int, ...] = (256, 1024)
    count_particles: tuple[int, ...] = (8,)
    count_variants: tuple[str, ...] = COUNT_VARIANTS
    scan_sizes: tuple[int, ...] = (2**10, 2**14, 2**18)
    scan_variants: tuple[str, ...] = ("serial", "parallel")
    fill_rows: int = 512
    fill_inner: int = 512
    fill_keep: int = 3
    fill_policies: tuple[str, ...] = FILL_POLICIES
    reduce_sizes: tuple[int, ...] = (256, 1024)
    reduce_ms: tuple[int, ...] = (8, 64)
    reduce_strategies: tuple[str, ...] = _reduce.STRATEGIES

    def __post_init__(self):
        if self.reps < 3:
            raise ValueError(f"reps must be >= 3 (median of reps), got {self.reps}")
        for m in self.motifs:
            if m not in MOTIFS:
                raise ValueError(f"unknown motif {m!r}, expected one of {MOTIFS}")
        for v in self.count_variants:
            if v not in COUNT_VARIANTS:
                raise ValueError(f"unknown count variant {v!r}")
        for v in self.scan_variants:
            if v not in SCAN_VARIANTS:
                raise ValueError(f"unknown scan variant {v!r}")
        for v in self.fill_policies:
            if v not in FILL_POLICIES:
                raise ValueError(f"unknown fill policy {v!r}")
        for v in self.reduce_strategies:
            if v not in _reduce.STRATEGIES:
                raise ValueError(f"unknown reduce strategy {v!r}")


_INT_TUPLES = {
    "count_sizes", "count_particles", "scan_sizes", "reduce_sizes", "reduce_ms",
}
_STR_TUPLES = {
    "motifs", "count_variants", "scan_variants", "fill_policies", "reduce_strategies",
}


def load_config(path: str | os.PathLike) -> BenchConfig:
    """Parse a flat ``key = value`` config file (lists comma-separated)."""
    valid = {f.name for f in fields(BenchConfig)}
    kwargs: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key not in valid:
                raise ValueError(
                    f"{path}:{lineno}: unknown key {key!r}; valid keys: {sorted(valid)}"
                )
            if key in _INT_TUPLES:
                kwargs[key] = tuple(int(tok) for tok in val.split(",") if tok.strip())
            elif key in _STR_TUPLES:
                kwargs[key] = tuple(tok.strip() for tok in val.split(",") if tok.strip())
            elif key in ("seed", "reps", "fill_rows", "fill_inner", "fill_keep"):
                kwargs[key] = int(val)
            elif key == "workers":
                kwargs[key] = None if val.lower() in ("", "none", "auto") else int(val)
            elif key == "bias":
                kwargs[key] = float(val)
            else:  # pragma: no cover - keys above are exhaustive
                raise AssertionError(key)
    return BenchConfig(**kwargs)


# ----------------------------------------------------------------------
# timing
# ----------------------------------------------------------------------

def _timed(fn, reps: int) -> tuple[float, object]:
    """One warmup call, then median wall time of ``reps`` timed calls."""
    result = fn()  # warmup (also triggers any JIT compilation)
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def _effective_workers(cfg: BenchConfig) -> int | None:
    cap = env_worker_cap()
    w = cfg.workers
    if cap is not None:
        w = cap if w is None else min(w, cap)
    return w


# ----------------------------------------------------------------------
# per-motif cases
# ----------------------------------------------------------------------

def _count_cases(cfg: BenchConfig, workers) -> Iterable[BenchRecord]:
    rank = InteractionRank()
    for n in cfg.count_sizes:
        for npart in cfg.count_particles:
            rows = random_basis(n, npart, bias=cfg.bias, seed=cfg.seed)
            cols = random_basis(n, npart, bias=cfg.bias, seed=cfg.seed + 1)
            for variant in cfg.count_variants:
                secs, pc = _timed(
                    lambda: count_pairs(rows, cols, rank, variant, workers=workers),
                    cfg.reps,
                )
                yield BenchRecord(
                    motif="count", variant=variant, n=n, m=None, particles=npart,
                    reps=cfg.reps, seconds=secs, rate=n * n / secs,
                    checksum=digest(pc.per_row, str(pc.total)),
                )


def _scan_input(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 8, size=n, dtype=np.int64)


def _scan_cases(cfg: BenchConfig, workers) -> Iterable[BenchRecord]:
    runners = {
        "serial": _scan.scan_serial,
        "parallel": lambda x: _scan.scan_parallel(x, workers=workers),
        "queued": lambda x: _scan.scan_queued(x, workers=workers or 4),
    }
    for n in cfg.scan_sizes:
        x = _scan_input(n, cfg.seed)
        for variant in cfg.scan_variants:
            secs, out = _timed(lambda: runners[variant](x), cfg.reps)
            yield BenchRecord(
                motif="scan", variant=variant, n=n, m=None, particles=None,
                reps=cfg.reps, seconds=secs, rate=secs, checksum=digest(out),
            )


def _fill_checksum(filled: _fill.SparsityFill) -> str:
    # canonicalize: parallel fills may order items within a row arbitrarily
    entries = filled.entries.copy()
    bounds = filled.offsets.offsets
    counts = filled.offsets.counts
    for i in range(bounds.size):
        lo = int(bounds[i])
        entries[lo:lo + int(counts[i])].sort()
    return digest(entries, filled.offsets.offsets)


def _fill_cases(cfg: BenchConfig, workers) -> Iterable[BenchRecord]:
    n, inner, keep = cfg.fill_rows, cfg.fill_inner, cfg.fill_keep
    for policy in cfg.fill_policies:
        inner_policy = "parallel_inner" if policy == "parallel" else "serial_inner"
        secs, filled = _timed(
            lambda: _fill.fill_pattern(n, inner, keep, policy=inner_policy, workers=workers),
            cfg.reps,
        )
        yield BenchRecord(
            motif="fill", variant=policy, n=n, m=inner, particles=None,
            reps=cfg.reps, seconds=secs, rate=secs, checksum=_fill_checksum(filled),
        )


def _reduce_inputs(m: int, n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    # 0/1 valued: every partial sum is an integer far below 2**24, so
    # float32 accumulation is exact under any ordering or strategy.
    rng = np.random.default_rng(seed)
    x = (rng.random((m, n)) < 0.05).astype(np.float32)
    y = (rng.random((m, n)) < 0.05).astype(np.float32)
    return x, y


def _reduce_cases(cfg: BenchConfig, workers) -> Iterable[BenchRecord]:
    for n in cfg.reduce_sizes:
        for m in cfg.reduce_ms:
            x, y = _reduce_inputs(m, n, cfg.seed)
            for strategy in cfg.reduce_strategies:
                secs, acc = _timed(
                    lambda: _reduce.reduce_observables(x, y, strategy, workers=workers),
                    cfg.reps,
                )
                yield BenchRecord(
                    motif="reduce", variant=strategy, n=n, m=m, particles=None,
                    reps=cfg.reps, seconds=secs, rate=float(n) * n * m / secs,
                    checksum=digest(acc.a),
                )


def _scan_crossover(records: Sequence[BenchRecord]) -> int | None:
    """Smallest scanned n where the parallel variant beat the serial one."""
    serial = {r.n: r.seconds for r in records if r.motif == "scan" and r.variant == "serial"}
    parallel = {r.n: r.seconds for r in records if r.motif == "scan" and r.variant == "parallel"}
    for n in sorted(serial.keys() & parallel.keys()):
        if parallel[n] < serial[n]:
            return n
    return None


def run_suite(cfg: BenchConfig) -> tuple[list[BenchRecord], dict[str, str]]:
    """Run every configured case; failures are recorded and skipped over."""
    workers = _effective_workers(cfg)
    makers = {
        "count": _count_cases,
        "scan": _scan_cases,
        "fill": _fill_cases,
        "reduce": _reduce_cases,
    }
    records: list[BenchRecord] = []
    failures: list[str] = []
    for motif in cfg.motifs:
        try:
            for rec in makers[motif](cfg, workers):
                records.append(rec)
        except Exception as exc:  # keep benching the other motifs
            failures.append(f"{motif}: {type(exc).__name__}: {exc}")

    import numba  # local import: numba config reads env at first import

    res = time.get_clock_info("perf_counter").resolution
    meta = {
        "seed": str(cfg.seed),
        "reps": str(cfg.reps),
        "bias": repr(cfg.bias),
        "workers": "auto" if workers is None else str(workers),
        "worker-cap-env": MAX_WORKERS_ENV,
        "cpus": str(os.cpu_count()),
        "numba-threads": str(numba.get_num_threads()),
        "timer": f"perf_counter resolution={res:.3e}s",
        "fill-keep": str(cfg.fill_keep),
    }
    cross = _scan_crossover(records)
    meta["scan-crossover"] = "none" if cross is None else f"n={cross}"
    if failures:
        meta["failures"] = "; ".join(failures)
    return records, meta


# ----------------------------------------------------------------------
# CSV round-trip
# ----------------------------------------------------------------------

def emit_csv(records: Sequence[BenchRecord], meta: dict[str, str] | None = None) -> str:
    lines = []
    for key, val in (meta or {}).items():
        lines.append(f"# {key}={val}")
    lines.append(",".join(CSV_COLUMNS))
    for rec in records:
        lines.append(",".join(rec.row()))
    for rec in records:
        if rec.checksum is not None:
            lines.append(
                f"# checksum {rec.motif} {rec.variant} n={rec.n} "
                f"m={'' if rec.m is None else rec.m} {rec.checksum}"
            )
    lines.append(f"# results-digest={_results_digest(records)}")
    return "\n".join(lines) + "\n"


def _results_digest(records: Sequence[BenchRecord]) -> str:
    parts = []
    for rec in records:
        parts.append(f"{rec.motif},{rec.variant},{rec.n},{rec.m},{rec.particles}")
        if rec.checksum is not None:
            parts.append(rec.checksum)
    return digest(*parts) if parts else digest("empty")


def parse_csv(text: str) -> tuple[list[BenchRecord], dict[str, str]]:
    """Inverse of :func:`emit_csv` (timing columns round-trip via repr)."""
    meta: dict[str, str] = {}
    checks: dict[tuple, str] = {}
    rows: list[list[str]] = []
    header_seen = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("checksum "):
                toks = body.split()
                # checksum <motif> <variant> n=<n> m=<m?> <hex>
                key = (toks[1], toks[2], toks[3], toks[4] if toks[4].startswith("m=") else "m=")
                checks[key] = toks[-1]
            elif "=" in body:
                k, _, v = body.partition("=")
                meta[k.strip()] = v.strip()
            continue
        if not header_seen:
            if tuple(line.split(",")) != CSV_COLUMNS:
                raise ValueError(f"unexpected header {line!r}, want {','.join(CSV_COLUMNS)}")
            header_seen = True
            continue
        cells = line.split(",")
        if len(cells) != len(CSV_COLUMNS):
            raise ValueError(f"row has {len(cells)} cells, want {len(CSV_COLUMNS)}: {line!r}")
        rows.append(cells)
    if not header_seen:
        raise ValueError("no header row found")

    def opt_int(s: str) -> int | None:
        return None if s == "" else int(s)

    records = []
    for cells in rows:
        motif, variant, n, m, particles, reps, seconds, rate = cells
        rec = BenchRecord(
            motif=motif, variant=variant, n=int(n), m=opt_int(m),
            particles=opt_int(particles), reps=int(reps),
            seconds=float(seconds), rate=float(rate),
            checksum=checks.get(
                (motif, variant, f"n={n}", f"m={m}")
            ),
        )
        records.append(rec)
    return records, meta
