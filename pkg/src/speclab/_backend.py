"""Kernel backend selection.

The compiled extension is used when it imports; ``SPECLAB_PURE=1`` forces the
pure-Python fallback.
"""

import os

from . import _kernels_py as pure

compiled = None
if os.environ.get("SPECLAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled = None

kernels = compiled if compiled is not None else pure
BACKEND = "compiled" if compiled is not None else "python"


def get(name: str):
    """Return the kernel module for ``name`` in {"compiled", "python", "auto"}."""
    if name == "python":
        return pure
    if name == "compiled":
        if compiled is None:
            raise ImportError("compiled kernels are not built")
        return compiled
    return kernels
