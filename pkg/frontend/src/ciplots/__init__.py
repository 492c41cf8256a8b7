"""Charts from motif benchmark CSVs.

The benchmark harness emits a flat CSV (columns
``motif,variant,n,m,particles,reps,seconds,rate`` plus ``#`` metadata
comments).  This package reads that file format — nothing else is shared
with the library that produced it — and renders one chart per motif:
rate or time against problem size, one line per variant, log-log by
default, run metadata as a caption footnote.
"""

from .csvdata import COLUMNS, BenchData, BenchRow, read_csv
from .plotting import Y_DEFAULTS, PlotSpec, RenderResult, render

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "COLUMNS", "BenchRow", "BenchData", "read_csv",
    "Y_DEFAULTS", "PlotSpec", "RenderResult", "render",
]
