"""Render one chart per motif from a benchmark CSV.

The y axis defaults to what the harness documents as each motif's figure
of merit: throughput (``rate``) for the counting and reduction motifs,
latency (``seconds``) for the scan and fill motifs.  Rendering is a pure
function of (CSV, spec): the same inputs always select, group, and sort
the same points — only backend pixel details may differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # headless batch tool; must precede pyplot import

import matplotlib.pyplot as plt

from .csvdata import COLUMNS, BenchData, read_csv

__all__ = ["Y_DEFAULTS", "PlotSpec", "RenderResult", "render"]

Y_DEFAULTS = {"count": "rate", "scan": "seconds", "fill": "seconds", "reduce": "rate"}

_Y_LABELS = {
    "rate": "rate (work items / s, median)",
    "seconds": "seconds (median)",
}


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: one motif, y vs x, one series per distinct series key."""

    motif: str
    y_axis: str | None = None  # None: the motif's documented figure of merit
    x_axis: str = "n"
    series_key: str = "variant"
    loglog: bool = True
    out_dir: Path = field(default_factory=Path.cwd)
    formats: tuple[str, ...] = ("png", "svg")

    def __post_init__(self):
        if not self.motif:
            raise ValueError("motif filter must be non-empty")
        for name, col in (("x_axis", self.x_axis), ("series_key", self.series_key)):
            if col not in COLUMNS:
                raise ValueError(f"{name} {col!r} is not a CSV column {COLUMNS}")
        if self.y_axis is not None and self.y_axis not in ("rate", "seconds"):
            raise ValueError(f"y_axis must be 'rate' or 'seconds', got {self.y_axis!r}")
        object.__setattr__(self, "out_dir", Path(self.out_dir))

    def resolve_y(self) -> str:
        if self.y_axis is not None:
            return self.y_axis
        return Y_DEFAULTS.get(self.motif, "seconds")


@dataclass(frozen=True)
class RenderResult:
    files: tuple[Path, ...]
    points: dict[str, int]  # series label -> number of plotted points


def _series(data: BenchData, spec: PlotSpec) -> dict[str, list[tuple[float, float]]]:
    y_col = spec.resolve_y()
    out: dict[str, list[tuple[float, float]]] = {}
    for row in data.rows:
        if row.motif != spec.motif:
            continue
        x = getattr(row, spec.x_axis)
        if x is None:
            continue  # column not applicable to this motif's rows
        out.setdefault(str(getattr(row, spec.series_key)), []).append(
            (float(x), float(getattr(row, y_col)))
        )
    for pts in out.values():
        pts.sort()
    return dict(sorted(out.items()))


def render(csv_path: str | Path, spec: PlotSpec) -> RenderResult:
    """Draw the requested chart and save it in every requested format.

    Raises ValueError when the CSV violates the contract or selects no rows
    for the motif ("no data"), and OSError when out_dir cannot be created
    or written.
    """
    data = read_csv(csv_path)
    series = _series(data, spec)
    if not series:
        have = ", ".join(data.motifs()) or "none"
        raise ValueError(
            f"no data: CSV {csv_path} has no rows for motif {spec.motif!r} (motifs present: {have})"
        )

    y_col = spec.resolve_y()
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    try:
        for label, pts in series.items():
            xs = [p[0] for p in pts]
            ys = [p[1] for p in pts]
            ax.plot(xs, ys, marker="o", label=label)
        if spec.loglog:
            ax.set_xscale("log", base=2)
            ax.set_yscale("log")
        ax.set_xlabel(spec.x_axis)
        ax.set_ylabel(_Y_LABELS.get(y_col, y_col))
        ax.set_title(f"{spec.motif}: {y_col} vs {spec.x_axis}")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(title=spec.series_key)
        if data.meta:
            footnote = "  ".join(f"{k}={v}" for k, v in data.meta.items())
            fig.text(0.01, 0.005, footnote, fontsize=6, color="0.35", wrap=True)
        fig.tight_layout(rect=(0, 0.04, 1, 1))

        spec.out_dir.mkdir(parents=True, exist_ok=True)
        files = []
        for ext in spec.formats:
            path = spec.out_dir / f"{spec.motif}_{y_col}.{ext}"
            fig.savefig(path)
            files.append(path)
    finally:
        plt.close(fig)
    return RenderResult(
        files=tuple(files), points={label: len(pts) for label, pts in series.items()}
    )
