"""Exact q-series engine for the monic order-2 MLDE and its classification."""

from mlde2._core import (
    __version__,
    character,
    classify,
    classify_report,
    discrete_series_witness,
    form,
    frobenius,
    indicial_roots,
    pythagorean_pairs,
    reductive_enumerate,
    smatrix,
)

__all__ = [
    "__version__",
    "character",
    "classify",
    "classify_report",
    "discrete_series_witness",
    "form",
    "frobenius",
    "indicial_roots",
    "pythagorean_pairs",
    "reductive_enumerate",
    "smatrix",
]
