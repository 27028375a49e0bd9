"""Kernel backend selection.

Prefers the compiled Cython kernels and falls back to the numpy
implementation when the extension is absent.  Set ``TOTSUM_BACKEND`` to
``python`` or ``compiled`` to force a choice (forcing ``compiled`` when
the extension is missing raises at import, which is the right failure
mode for benchmarking).
"""

from __future__ import annotations

import os

_requested = os.environ.get("TOTSUM_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _requested == "compiled":
    from . import _kernels as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return BACKEND
