"""Exact Fibonacci identities over Pascal's triangle."""

import json

from ._core import (
    InconsistencyError,
    WeightPattern,
    bench_csv,
    binomial,
    check_binet_from_cosine,
    check_reversal_symmetry,
    classify_weight,
    derive_identity,
    derive_json,
    evaluate_pattern,
    expand_cos_power,
    fib,
    methods,
    pascal_row,
    pattern_csv,
    pattern_from_json,
    pattern_json,
    reduce_to_row,
    render,
    run_cli,
    series_mul,
    substitute_exact,
    synthesize_pattern,
    verify_json,
)


def verify(max_index):
    """Run every cross-check suite over 1..max_index and return the parsed report."""
    return json.loads(verify_json(max_index))


def derive(m):
    """Derivation report for F_m as a dict."""
    return json.loads(derive_json(m))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
