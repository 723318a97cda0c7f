"""Hot subset-DP kernels with two interchangeable backends.

Three inner loops dominate runtime at the exhaustive limits: the minimum
feedback-arc-set DP over all 2^n vertex subsets, the directed cut-size
profile over all 2^n subsets (exact edge expansion), and the simple-path
reachability DP behind the cycle spectrum.  Each exists twice:

* ``numba_impl``  -- @njit scalar loops (default when numba imports),
* ``numpy_impl``  -- pure-numpy vectorized fallback, no compilation.

Selection: set ``GIRTHCUT_KERNELS=numpy`` or ``GIRTHCUT_KERNELS=numba``;
unset picks numba when available.  Both backends return bit-identical
arrays (asserted in the test suite); ``benchmarks/bench_kernels.py``
compares their speed.
"""
import os

from . import numpy_impl

_BACKEND_ENV = "GIRTHCUT_KERNELS"


def _resolve_backend():
    choice = os.environ.get(_BACKEND_ENV, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{_BACKEND_ENV} must be 'numba' or 'numpy', got {choice!r}"
        )
    if choice == "numpy":
        return numpy_impl, "numpy"
    try:
        from . import numba_impl
        return numba_impl, "numba"
    except ImportError:
        if choice == "numba":
            raise
        return numpy_impl, "numpy"


_impl, _name = _resolve_backend()


def backend_name() -> str:
    return _name


def min_fas_table(out_masks, n):
    """dp over all vertex subsets U: dp[U] = minimum backward-edge count
    over orderings of U (= |edges(U)| - max acyclic subgraph of G[U])."""
    return _impl.min_fas_table(out_masks, n)


def cut_sizes_all_subsets(out_masks, in_masks, n):
    """(e_out, e_in) arrays over all 2^n subsets S: directed cut sizes
    e(S, V\\S) and e(V\\S, S)."""
    return _impl.cut_sizes_all_subsets(out_masks, in_masks, n)


def path_reach_table(out_masks, start_mask, k):
    """Simple-path endpoint table for cycle-spectrum search.

    Universe is 0..k-1 plus an external anchor; start_mask marks the
    anchor's out-neighbours.  reach[U] is the bitmask of w in U such that
    some simple path anchor -> ... -> w visits exactly U.
    """
    return _impl.path_reach_table(out_masks, start_mask, k)
