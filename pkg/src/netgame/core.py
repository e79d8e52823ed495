"""Backend selection for the hot dynamics kernels.

Prefers the compiled extension (netgame._core, built from Cython) and falls
back to the pure numpy implementation when the extension is unavailable.
Set NETGAME_BACKEND=pure or NETGAME_BACKEND=compiled to force a backend;
forcing "compiled" raises if the extension did not build.
"""
from __future__ import annotations

import os

from . import _core_py

_FORCED = os.environ.get("NETGAME_BACKEND", "").strip().lower()

if _FORCED not in ("", "auto", "pure", "compiled"):
    raise ImportError(
        f"NETGAME_BACKEND={_FORCED!r} not recognized; "
        "use 'pure', 'compiled', or 'auto'"
    )

if _FORCED == "pure":
    Engine = _core_py.Engine
    BACKEND = _core_py.BACKEND_NAME
else:
    try:
        from . import _core  # type: ignore[attr-defined]

        Engine = _core.Engine
        BACKEND = _core.BACKEND_NAME
    except ImportError:
        if _FORCED == "compiled":
            raise ImportError(
                "NETGAME_BACKEND=compiled but the netgame._core extension "
                "is not importable; rebuild the package or unset the variable"
            ) from None
        Engine = _core_py.Engine
        BACKEND = _core_py.BACKEND_NAME


def backend_name() -> str:
    """Name of the engine backend selected at import time."""
    return BACKEND
