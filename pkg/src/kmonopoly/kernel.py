"""Backend selection for the branch-and-bound kernel.

The compiled ``_csearch`` extension is used when it imports and the instance
fits in 64-bit masks. Setting ``KMONOPOLY_PURE_PYTHON=1`` forces the
pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _search

try:
    from . import _csearch
except ImportError:  # extension not built
    _csearch = None

HAVE_EXTENSION = _csearch is not None
BACKENDS = ("cython", "python") if HAVE_EXTENSION else ("python",)


def default_backend() -> str:
    if HAVE_EXTENSION and not os.environ.get("KMONOPOLY_PURE_PYTHON"):
        return "cython"
    return "python"


def resolve(backend: str | None, n: int) -> str:
    backend = backend or default_backend()
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "cython" and (not HAVE_EXTENSION or n > 64):
        return "python"
    return backend


def search(backend: str, *args):
    impl = _csearch.search if backend == "cython" else _search.search
    return impl(*args)
