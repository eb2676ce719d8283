"""Kernel backend selection.

The compiled extension ``gf2q._kernels`` is preferred when it imported
cleanly; otherwise the pure-Python kernels are used. Set GF2Q_BACKEND to
``compiled`` or ``python`` to force one (forcing ``compiled`` on a build
without the extension raises ImportError rather than silently degrading).
"""

from __future__ import annotations

import os

_choice = os.environ.get("GF2Q_BACKEND", "").strip().lower()

if _choice == "python":
    from . import _kernels_py as impl
elif _choice == "compiled":
    from . import _kernels as impl  # type: ignore[no-redef]
elif _choice == "":
    try:
        from . import _kernels as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as impl
else:
    raise ImportError(f"unknown GF2Q_BACKEND value {_choice!r} (use 'compiled' or 'python')")


def backend_name() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return "compiled" if impl.BACKEND == "c" else "python"
