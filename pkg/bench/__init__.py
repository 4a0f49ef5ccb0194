"""
Bench package of the PT-symmetric optical bench.
Contains the matrix bench model and the analysis built on bench runs: probabilities,
the no-signaling violation, the CHSH-like quantity and their maximization.
"""

from bench.analysis import (
    chsh_bound,
    chsh_c,
    chsh_s,
    correlation_closed_form,
    has_closed_form,
    max_violation_closed_form,
    p_single_closed_form,
    probabilities,
    signaling_delta,
    w_closed_form,
    w_half_cross_terms,
)
from bench.matrix import MatrixBench, run_bench
from bench.scan import ScanRow, signaling_scan
from bench.search import ChshMaximum, ViolationMaximum, max_chsh, max_violation

__all__ = [
    "ChshMaximum",
    "MatrixBench",
    "ScanRow",
    "ViolationMaximum",
    "chsh_bound",
    "chsh_c",
    "chsh_s",
    "correlation_closed_form",
    "has_closed_form",
    "max_chsh",
    "max_violation",
    "max_violation_closed_form",
    "p_single_closed_form",
    "probabilities",
    "run_bench",
    "signaling_delta",
    "signaling_scan",
    "w_closed_form",
    "w_half_cross_terms",
]
