"""Scoring kernels with backend selection at import time.

Prefers the compiled Cython extension when it was built; otherwise falls back
to the pure numpy implementation. Both backends produce identical results;
``benchmarks/bench_kernels.py`` compares their speed.
"""

try:
    from ._ccscore import BACKEND, betacc_best_committee, betacc_committee_score
except ImportError:  # extension not built
    from .pure import BACKEND, betacc_best_committee, betacc_committee_score

__all__ = ["BACKEND", "betacc_committee_score", "betacc_best_committee"]
