"""Backend dispatch for the census kernels: numba-compiled or pure Python.

The loop kernels live in cyclepat._census_impl, written so the same source
runs under numba's nopython mode and under plain CPython.  This module
loads that file twice, jit-decorates one copy, and keeps both namespaces
alive so they can be benchmarked and cross-checked against each other in
one process.  Set the environment variable CPL_NO_NUMBA to a truthy value
(or leave numba uninstalled) to make the pure backend the default.
"""

from __future__ import annotations

import importlib.util
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import perms

_IMPL_NAME = "cyclepat._census_impl"

#: Kernel functions in dependency order; decorating in this order lets each
#: jitted function resolve the already-jitted versions of its callees.
_KERNEL_NAMES = (
    "next_permutation",
    "triple_id",
    "cycle_word",
    "pair_counts",
    "census_pair",
    "census_vincular",
    "weight_sweep",
)


def _load_impl():
    spec = importlib.util.find_spec(_IMPL_NAME)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def _env_disables_numba() -> bool:
    return os.environ.get("CPL_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no", "off")


_pure = _load_impl()
_fast = None
_fast_unavailable = "disabled via CPL_NO_NUMBA"
if not _env_disables_numba():
    try:
        from numba import njit
    except ImportError as exc:
        _fast_unavailable = f"numba import failed: {exc}"
    else:
        _fast = _load_impl()
        for _name in _KERNEL_NAMES:
            setattr(_fast, _name, njit(cache=True)(getattr(_fast, _name)))
        _fast_unavailable = ""


def available_backends() -> tuple[str, ...]:
    return ("numba", "python") if _fast is not None else ("python",)


def backend_name() -> str:
    """Name of the default backend for this process."""
    return "numba" if _fast is not None else "python"


def get_backend(name: str | None = None):
    """The kernel namespace for a backend name (None means the default)."""
    if name is None:
        return _fast if _fast is not None else _pure
    if name == "python":
        return _pure
    if name == "numba":
        if _fast is None:
            raise RuntimeError(f"numba backend unavailable: {_fast_unavailable}")
        return _fast
    raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'python'")


def _census_args(n: int, convention: str) -> tuple[int, bool, bool]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    anchor_max, order_desc = perms.convention_flags(convention)
    return n, anchor_max, order_desc


def _pair_chunk(args):
    n, anchor_max, order_desc, first_val, backend = args
    impl = get_backend(backend)
    return impl.census_pair(n, anchor_max, order_desc, first_val)


def pair_census(
    n: int,
    convention: str = perms.STANDARD_CONVENTION,
    *,
    workers: int = 1,
    backend: str | None = None,
) -> np.ndarray:
    """Joint (between, within, cycles) counts for all 144 ordered pattern pairs.

    Entry [a, b, i, j, c] counts permutations of S_n with i between
    occurrences of pattern a, j within occurrences of pattern b, and c
    cycles, in the cycle-word convention given.  workers > 1 splits the
    enumeration by first letter across processes.
    """
    n, anchor_max, order_desc = _census_args(n, convention)
    impl = get_backend(backend)
    if workers <= 1 or n < 2:
        return impl.census_pair(n, anchor_max, order_desc, -1)
    jobs = [(n, anchor_max, order_desc, first, backend) for first in range(n)]
    with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
        parts = list(pool.map(_pair_chunk, jobs))
    return np.sum(parts, axis=0)


def single_census(
    n: int,
    pattern: perms.Pattern,
    convention: str = perms.STANDARD_CONVENTION,
    *,
    backend: str | None = None,
) -> np.ndarray:
    """Joint (total occurrences, cycles) counts of one pattern over S_n.

    Entry [k, c] counts permutations whose between+within total for the
    pattern is k and that have c cycles.
    """
    counts = pair_census(n, convention, backend=backend)
    pid = perms.kernel_index(pattern)
    sub = counts[pid, pid]  # [i, j, c] with i between- and j within-counts
    cap = sub.shape[0] - 1
    out = np.zeros((2 * cap + 1, sub.shape[2]), np.int64)
    for i in range(cap + 1):
        for j in range(cap + 1):
            col = sub[i, j]
            if col.any():
                out[i + j] += col
    return out


def vincular_census(
    n: int, pattern: perms.Pattern, *, backend: str | None = None
) -> np.ndarray:
    """Occurrence counts of one pattern over plain one-line words of S_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    impl = get_backend(backend)
    return impl.census_vincular(n, perms.kernel_index(pattern))


def weight_identity_failures(
    n: int, pattern: str | perms.Pattern = "2-13", *, backend: str | None = None
) -> int:
    """Number of S_n permutations breaking the node-weight product identity."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(pattern, str):
        pattern = perms.parse_pattern(pattern)
    impl = get_backend(backend)
    return int(impl.weight_sweep(n, perms.kernel_index(pattern)))
