"""Exact Gromov-Witten invariants of CP^3.

Rational (genus-0) invariants are reconstructed from the WDVV associativity
equations; elliptic (genus-1) invariants from two recursion relations; the
combined column counts elliptic space curves through generic lines/points.
"""

from gwcp3._core import (  # noqa: F401
    Table,
    binom,
    cells_for_degree,
    combined_csv,
    combined_markdown,
    compute,
    cross_check,
    elliptic_count,
    f1_linear_coefficient,
    golden_table,
    multinom,
    relation_a_ledger,
    relation_a_solve,
    relation_b_ledger,
    relation_b_solve,
    verify_golden,
    wdvv_residual,
)

__all__ = [
    "Table",
    "binom",
    "cells_for_degree",
    "combined_csv",
    "combined_markdown",
    "compute",
    "cross_check",
    "elliptic_count",
    "f1_linear_coefficient",
    "golden_table",
    "multinom",
    "relation_a_ledger",
    "relation_a_solve",
    "relation_b_ledger",
    "relation_b_solve",
    "verify_golden",
    "wdvv_residual",
]
