"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``TLCOB_PURE_PYTHON=1`` to force the fallback (used by the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("TLCOB_PURE_PYTHON"):
    from . import _kernel_py as impl
else:
    try:
        from . import _kernel_c as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as impl  # type: ignore[no-redef]

splice = impl.splice
count_loops = impl.count_loops
network_loop_counts = impl.network_loop_counts


def implementation() -> str:
    """Name of the active kernel: "c" or "python"."""
    return impl.IMPLEMENTATION
