"""Backend selection for the hot loops.

The numba kernels are used unless ``MCOLOUR_DISABLE_NUMBA`` is set to a
non-empty value other than ``0`` (or numba is not importable), in which case
the vectorized numpy implementations run instead.  Both backends return
identical results.
"""

import os

_disabled = os.environ.get("MCOLOUR_DISABLE_NUMBA", "") not in ("", "0")

if _disabled:
    from . import _numpy_kernels as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _numba_kernels as _impl

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        from . import _numpy_kernels as _impl

        BACKEND = "numpy"

gamma_table = _impl.gamma_table
relabel_rows = _impl.relabel_rows
rgs_min_spectrum = _impl.rgs_min_spectrum

__all__ = ["BACKEND", "gamma_table", "relabel_rows", "rgs_min_spectrum"]
