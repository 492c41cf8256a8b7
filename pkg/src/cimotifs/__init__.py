"""Computational motifs of sparse configuration-interaction matrix builds.

Four motifs, each a module, plus a driver that composes them:

* :mod:`cimotifs.mbstate`  — many-body occupation states and random bases;
* :mod:`cimotifs.sparsity` — counting interacting state pairs;
* :mod:`cimotifs.scan`     — serial and work-efficient parallel prefix sums;
* :mod:`cimotifs.fill`     — count-then-fill construction of shared arrays;
* :mod:`cimotifs.reduce`   — small-array reduction strategies;
* :mod:`cimotifs.pipeline` — desk-scale end-to-end matrix-build driver;
* :mod:`cimotifs.bench`    — rate-measurement harness emitting CSV.
"""

from .bench import (
    BenchConfig,
    BenchRecord,
    MOTIFS,
    emit_csv,
    load_config,
    parse_csv,
    run_suite,
)
from .fill import (
    POLICIES,
    FillStats,
    SparsityFill,
    count_pattern,
    counts_to_offsets,
    fill_pattern,
    fill_rows,
)
from .mbstate import (
    CALIBRATION_BIAS,
    TREND_BIAS,
    Basis,
    ManyBodyState,
    load_basis,
    make_basis,
    make_state,
    random_basis,
    save_basis,
)
from .pipeline import (
    ObservablesInput,
    Orbital,
    PipelineConfig,
    SparseSkeleton,
    Tile,
    build_skeleton,
    contract_observables,
    contract_oracle,
    enumerate_tiles,
    group_orbitals,
    random_coefficients,
    run_pipeline,
)
from .reduce import (
    STRATEGIES,
    ObservableAccumulator,
    agreement_tolerance,
    generate_scalar_reduction,
    reduce_observables,
    reduce_oracle,
)
from .scan import (
    CountsAndOffsets,
    ScanStats,
    scan_parallel,
    scan_parallel_stats,
    scan_queued,
    scan_serial,
)
from .sparsity import (
    COUNT_VARIANTS,
    InteractionRank,
    PairCounts,
    count_difference,
    count_pairs,
    pair_interacts_bitrep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # mbstate
    "ManyBodyState", "Basis", "make_state", "make_basis", "random_basis",
    "save_basis", "load_basis", "CALIBRATION_BIAS", "TREND_BIAS",
    # sparsity
    "InteractionRank", "PairCounts", "COUNT_VARIANTS",
    "count_difference", "pair_interacts_bitrep", "count_pairs",
    # scan
    "CountsAndOffsets", "ScanStats", "scan_serial", "scan_parallel",
    "scan_parallel_stats", "scan_queued",
    # fill
    "POLICIES", "FillStats", "SparsityFill", "counts_to_offsets", "fill_rows",
    "count_pattern", "fill_pattern",
    # reduce
    "STRATEGIES", "ObservableAccumulator", "reduce_observables", "reduce_oracle",
    "agreement_tolerance", "generate_scalar_reduction",
    # pipeline
    "Orbital", "Tile", "SparseSkeleton", "ObservablesInput",
    "group_orbitals", "enumerate_tiles", "build_skeleton",
    "contract_observables", "contract_oracle", "random_coefficients",
    "PipelineConfig", "run_pipeline",
    # bench
    "MOTIFS", "BenchConfig", "BenchRecord", "load_config", "run_suite",
    "emit_csv", "parse_csv",
]
