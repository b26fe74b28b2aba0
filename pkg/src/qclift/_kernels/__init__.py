"""Hot kernels, compiled when available.

``BACKEND`` is ``"cython"`` when the extension built, ``"python"`` otherwise.
Setting ``QCLIFT_PURE_PYTHON=1`` forces the fallback. Both backends expose
``closed_walks`` and ``bfs_girth`` with identical output.
"""

import os

BACKEND = "python"
if os.environ.get("QCLIFT_PURE_PYTHON", "") in ("", "0"):
    try:
        from ._ckernels import bfs_girth, closed_walks

        BACKEND = "cython"
    except ImportError:  # extension not built
        pass
if BACKEND == "python":
    from ._pykernels import bfs_girth, closed_walks

__all__ = ["BACKEND", "bfs_girth", "closed_walks"]
