#!/usr/bin/env python3
"""Regenerate src/cimotifs/_reductions_gen.py.

The reduce module's generated_scalars strategy uses routines specialized to
the accumulator count m.  Common sizes are rendered here from the template in
cimotifs.reduce and committed, so repeat runs hit numba's on-disk cache; other
sizes are rendered on demand at runtime from the same template.

Run from the repository root:  python scripts/gen_reductions.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cimotifs.reduce import (  # noqa: E402
    GENERATED_CEILING,
    PARALLEL_ACCUM_LIMIT,
    render_scalar_reduction_source,
)

SIZES = (2, 3, 4, 8, 16, 32, 64, 128, 256)

HEADER = '''"""Scalar-reduction routines specialized per accumulator count m.

Generated by scripts/gen_reductions.py -- do not edit by hand; rerun that
script to regenerate.  Routines with m <= {limit} compile with the parallel
backend; larger m compile single-worker (see cimotifs.reduce for the
measured compile-cost rationale).
"""

import numpy as np
from numba import njit, prange

'''


def main() -> None:
    assert max(SIZES) <= GENERATED_CEILING
    parts = [HEADER.format(limit=PARALLEL_ACCUM_LIMIT)]
    for m in SIZES:
        parallel = m <= PARALLEL_ACCUM_LIMIT
        parts.append(f"# m = {m} ({'parallel' if parallel else 'single-worker'})")
        parts.append(render_scalar_reduction_source(m, parallel))
        parts.append(
            f"reduce_scalars_{m} = njit(parallel={parallel}, cache=True)(reduce_scalars_{m})"
        )
        parts.append("")
    registry = ", ".join(f"{m}: reduce_scalars_{m}" for m in SIZES)
    parts.append(f"REGISTRY = {{{registry}}}")
    out = ROOT / "src" / "cimotifs" / "_reductions_gen.py"
    out.write_text("\n".join(parts) + "\n")
    print(f"wrote {out} ({len(SIZES)} routines)")


if __name__ == "__main__":
    main()
