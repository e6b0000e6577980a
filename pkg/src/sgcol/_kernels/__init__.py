"""Kernel backend selection.

The hot loops (BFS, exact-distance pair scans, reachability-set
construction) exist twice: a Cython extension (`_cext`) and a pure
Python twin (`pure`) with identical signatures and identical outputs.
The extension is preferred when importable; set SGCOL_PURE=1 to force
the Python implementation, e.g. when debugging or on platforms where
the extension did not build.
"""

import os

from . import pure as _pure

# the layered DReach construction is a correctness reference, not a hot
# loop; it is only ever run from Python
dreach_all_layered = _pure.dreach_all_layered

if os.environ.get("SGCOL_PURE"):
    _impl = _pure
else:
    try:
        from . import _cext as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND_NAME

bfs_all_dists = _impl.bfs_all_dists
exact_distance_pairs = _impl.exact_distance_pairs
wreach_all = _impl.wreach_all
filtered_ball = _impl.filtered_ball
dreach_all = _impl.dreach_all

__all__ = [
    "BACKEND",
    "bfs_all_dists",
    "exact_distance_pairs",
    "wreach_all",
    "filtered_ball",
    "dreach_all",
    "dreach_all_layered",
]
