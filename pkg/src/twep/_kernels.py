"""Kernel backend selection.

Prefers the compiled extension when it was built; falls back to the pure
Python implementations otherwise.  ``TWEP_PURE=1`` in the environment forces
the fallback, which the benchmark uses to compare the two.
"""

from __future__ import annotations

import os

if os.environ.get("TWEP_PURE") == "1":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

min_weight_excluding_span = _impl.min_weight_excluding_span
best_splitter = _impl.best_splitter


def kernel_backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
