"""Kernel backend selection: compiled extension when built, else Python.

Set ``CUTGAME_FORCE_PY=1`` in the environment to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("CUTGAME_FORCE_PY"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
genus_sweep = _impl.genus_sweep
attractor = _impl.attractor
