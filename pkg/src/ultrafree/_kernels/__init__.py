"""Kernel selection: compiled extension when available, else pure Python.

Set ``ULTRAFREE_PURE=1`` to force the pure-Python implementation even when
the compiled one is installed (used by the parity tests and benchmark).
"""

import os

from . import fallback

if os.environ.get("ULTRAFREE_PURE") == "1":
    _impl = fallback
    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = fallback
        BACKEND = "pure"

count_cliques = _impl.count_cliques
list_cliques = _impl.list_cliques
max_clique = _impl.max_clique
chromatic_number = _impl.chromatic_number
enumerate_mis = _impl.enumerate_mis

__all__ = [
    "BACKEND",
    "count_cliques",
    "list_cliques",
    "max_clique",
    "chromatic_number",
    "enumerate_mis",
    "fallback",
]
