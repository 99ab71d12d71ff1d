"""Verified invariants and coincidence solvers for finite group actions.

Thin wrapper over the compiled core: structured results cross the boundary
as canonical JSON and are parsed here, so Python sees plain dicts and the
byte-level determinism of the reports is preserved underneath.
"""

import json as _json

try:
    from . import _core
except ImportError:  # build-tree layout: the module sits next to the package
    import _core

InvalidInputError = _core.InvalidInputError
BudgetExhaustedError = _core.BudgetExhaustedError

__version__ = "0.1.0"
__all__ = [
    "homology",
    "cover_check",
    "coincide",
    "knaster_scan",
    "selftest",
    "enumerate_patterns",
    "pattern_fixed_points",
    "admissible_partition_count",
    "InvalidInputError",
    "BudgetExhaustedError",
]


def _scenario_text(scenario):
    if isinstance(scenario, str):
        return scenario
    return _json.dumps(scenario)


def homology(family="k-equal", q=3, k=3, m=2, primes=(2, 3, 5),
             assert_connectivity=False, threads=0):
    """Reduced Betti numbers of the arrangement complement, with the
    Euler and cell-model cross-checks baked into the report."""
    return _json.loads(_core.homology_report(family, q, k, m, list(primes),
                                             assert_connectivity, threads))


def cover_check(q, k, samples=100000, seed=0, rational=True):
    """Randomized classification of scalar orbit tuples into the top-block
    cover; returns the counters, failures must be 0."""
    return _json.loads(_core.cover_check(q, k, samples, seed, rational))


def coincide(scenario, threads=0):
    """Multi-start search for a coincidence witness. scenario is a dict or
    JSON text; returns the solver report."""
    return _json.loads(_core.solve_scenario(_scenario_text(scenario), threads))


def knaster_scan(scenario, grid=4096):
    """One-parameter rotation scan for circle scenarios."""
    return _json.loads(_core.knaster_scan(_scenario_text(scenario), grid))


def selftest(quick=True, seed=0, threads=0):
    """The acceptance matrix as a list of assertion rows."""
    return _json.loads(_core.selftest(quick, seed, threads))


def enumerate_patterns(q, k):
    """All partitions of range(q) into exactly k blocks."""
    return _core.enumerate_patterns(q, k)


def pattern_fixed_points(q, k):
    """k-block patterns fixed by every cyclic translation of range(q)."""
    return _core.pattern_fixed_points(q, k)


def admissible_partition_count(q, k):
    """Partitions of range(q) with every block of size 1 or >= k."""
    return _core.admissible_partition_count(q, k)
