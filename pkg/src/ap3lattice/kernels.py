"""Backend selection for the hot loops.

The compiled extension is used when it is importable; setting
``AP3_PURE_PYTHON=1`` forces the pure-Python versions.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("AP3_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

ideal_histogram = _impl.ideal_histogram
staircase_histogram = _impl.staircase_histogram
order_mismatches = _impl.order_mismatches
lattice_law_violations = _impl.lattice_law_violations

__all__ = [
    "BACKEND",
    "ideal_histogram",
    "staircase_histogram",
    "order_mismatches",
    "lattice_law_violations",
]
