"""Selects the backtracking kernel at import time.

The compiled extension is used when it was built; setting the environment
variable ``TRACEFIELDS_PURE`` to a non-empty value forces the pure-Python
kernel.
"""

import os

from ._search_py import search as fallback_search

BACKEND = "python"
search = fallback_search

if not os.environ.get("TRACEFIELDS_PURE"):
    try:
        from ._search import search  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

__all__ = ["BACKEND", "fallback_search", "search"]
