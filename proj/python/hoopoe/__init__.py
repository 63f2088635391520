"""Hoopoe heuristic and cuckoo search with the four standard test functions."""

from ._hoopoe import (
    Benchmark,
    Bounds,
    Candidate,
    CuckooConfig,
    CuckooVariant,
    HoopoeConfig,
    InvalidArgument,
    IoError,
    LevyParams,
    Mode,
    ProbeParams,
    RadiusPolicy,
    RunResult,
    TraceRecord,
    ackley,
    available,
    benchmark,
    cli_main,
    cuckoo_config,
    de_jong,
    hoopoe_config,
    minimize_cuckoo,
    minimize_hoopoe,
    rastrigin,
    rosenbrock,
    run_cuckoo,
    run_hoopoe,
)

__all__ = [name for name in dir() if not name.startswith("_")]

