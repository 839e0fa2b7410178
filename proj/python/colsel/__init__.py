"""Greedy column subset selection.

Matrices are NumPy arrays of float64; column indices are 0-based and returned
in selection order.
"""

from ._colsel import (
    ColselError,
    DataError,
    DistributedReport,
    DistributedResult,
    NumericalError,
    SelectionResult,
    UsageError,
    css_criterion,
    distributed_select,
    generalized_select,
    greedy_select,
    hybrid_select,
    load_matrix,
    naive_distributed_baseline,
    relative_accuracy,
    save_matrix,
    sketch_matrix,
    sketch_svd_select,
    target_criterion,
    uniform_select,
)

__all__ = [
    "ColselError",
    "DataError",
    "DistributedReport",
    "DistributedResult",
    "NumericalError",
    "SelectionResult",
    "UsageError",
    "css_criterion",
    "distributed_select",
    "generalized_select",
    "greedy_select",
    "hybrid_select",
    "load_matrix",
    "naive_distributed_baseline",
    "relative_accuracy",
    "save_matrix",
    "sketch_matrix",
    "sketch_svd_select",
    "target_criterion",
    "uniform_select",
]
