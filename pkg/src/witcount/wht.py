"""Exact fast Walsh-Hadamard transform and XOR convolution.

Arrays of length ``2**d`` are transformed with the iterative butterfly
``(a, b) -> (a + b, a - b)``.  Results are always ``object`` arrays holding
Python ints.  When the input is small enough that no intermediate value can
leave the int64 range, the butterflies run in int64, which is exact there.
"""
import numpy as np

from .arith import exact_div
from .errors import ExactnessError

_INT64_SAFE = 1 << 62


def dimension(n):
    if n < 1 or n & (n - 1):
        raise ValueError(f"length {n} is not a power of two")
    return n.bit_length() - 1


def _butterflies(arr, counter=None):
    n = arr.shape[0]
    h = 1
    while h < n:
        view = arr.reshape(-1, 2, h)
        lo = view[:, 0, :].copy()
        view[:, 0, :] += view[:, 1, :]
        view[:, 1, :] = lo - view[:, 1, :]
        h *= 2
        if counter is not None:
            counter.add(n)
    return arr


def _fits_int64(arr):
    if arr.size == 0:
        return True
    peak = max(abs(int(arr.max())), abs(int(arr.min())))
    # every output entry is a signed sum of all n inputs
    return peak * arr.shape[0] < _INT64_SAFE


def fwht_inplace(arr, counter=None):
    """Transform ``arr`` in place and return it.

    ``arr`` must be a one-dimensional ``object`` or ``int64`` array; an int64
    array whose transform could overflow is rejected.
    """
    dimension(arr.shape[0])
    if arr.dtype != object:
        if arr.dtype != np.int64:
            raise TypeError(f"in-place transform needs int64 or object dtype, got {arr.dtype}")
        if not _fits_int64(arr):
            raise OverflowError("int64 transform could overflow; use an object array")
    return _butterflies(arr, counter)


def fwht(values, counter=None):
    """Return ``H_d @ values`` as an ``object`` array of exact ints."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional array")
    dimension(arr.shape[0])
    if arr.dtype != object and not np.issubdtype(arr.dtype, np.integer):
        raise TypeError(f"integer input required, got {arr.dtype}")
    if _fits_int64(arr):
        out = _butterflies(arr.astype(np.int64), counter)
        return out.astype(object)
    return _butterflies(arr.astype(object), counter)


def inverse_fwht(values, counter=None):
    """Invert :func:`fwht`; every entry must divide exactly by ``2**d``."""
    out = fwht(values, counter)
    n = out.shape[0]
    for i, v in enumerate(out):
        out[i] = exact_div(v, n, what=f"inverse transform entry {i}")
    if counter is not None:
        counter.div(n)
    return out


def xor_convolve(f, g, counter=None):
    """``(f * g)(x) = sum over v1 ^ v2 == x of f[v1] * g[v2]``, exactly."""
    f, g = np.asarray(f), np.asarray(g)
    if f.shape != g.shape:
        raise ValueError("convolution operands must have equal length")
    prod = fwht(f, counter) * fwht(g, counter)
    if counter is not None:
        counter.mul(prod.shape[0])
    try:
        return inverse_fwht(prod, counter)
    except ExactnessError as exc:  # pragma: no cover - integer inputs never get here
        raise ExactnessError(f"convolution of integer arrays lost exactness: {exc}") from exc
