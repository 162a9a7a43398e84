"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The backend is picked once at import time.  Set ``CUBECYL_PURE_NUMPY=1`` to
force the numpy path; it is also used when numba cannot be imported.  Both
modules stay importable so tests and the benchmark can compare them.
"""
import os

from . import _np as numpy_backend

_FORCE_NUMPY = os.environ.get("CUBECYL_PURE_NUMPY", "").strip().lower() in ("1", "true", "yes")

try:
    from . import _nb as numba_backend
except ImportError:  # pragma: no cover - numba missing
    numba_backend = None

active = numpy_backend if _FORCE_NUMPY or numba_backend is None else numba_backend
BACKEND = "numba" if active is numba_backend else "numpy"

bfs_all_pairs = active.bfs_all_pairs
sort_codes = active.sort_codes
lookup_codes = active.lookup_codes
majority_violation = active.majority_violation
brute_median_violation = active.brute_median_violation
delta4_doubled = active.delta4_doubled
gate_table = active.gate_table
pair_tables = active.pair_tables
sweep_block = active.sweep_block
grid_scan = active.grid_scan

__all__ = [
    "BACKEND", "active", "numpy_backend", "numba_backend",
    "bfs_all_pairs", "sort_codes", "lookup_codes", "majority_violation",
    "brute_median_violation", "delta4_doubled", "gate_table", "pair_tables",
    "sweep_block", "grid_scan",
]
