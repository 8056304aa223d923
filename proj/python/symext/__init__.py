"""Exact symmetric extension constructions and lower-bound certificates."""

from ._symext import (
    SymextError,
    emit,
    matching_counts,
    matching_counts_restricted,
    run_scenario,
    scenarios,
    solve_interpolation,
    verify,
    zoo_build,
)

__all__ = [
    "SymextError",
    "emit",
    "matching_counts",
    "matching_counts_restricted",
    "run_scenario",
    "scenarios",
    "solve_interpolation",
    "verify",
    "zoo_build",
]
