"""Finite involutive BE algebras: axiom checks, classification and model search."""

from ._core import (
    Algebra,
    Error,
    check_axiom,
    check_statement,
    classify,
    center,
    count,
    effect_axioms,
    enumerate_models,
    find_counterexample,
    load,
    to_mbe_product,
)

__all__ = [
    "Algebra",
    "Error",
    "check_axiom",
    "check_statement",
    "classify",
    "center",
    "count",
    "effect_axioms",
    "enumerate_models",
    "find_counterexample",
    "load",
    "to_mbe_product",
]
