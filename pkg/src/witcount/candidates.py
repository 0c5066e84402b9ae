"""Candidate counts |Cand(V, t, i)| for every i <= k.

A candidate is an ordered i-tuple over V (repeats allowed) whose XOR is the
target.  Its count is the i-fold XOR self-convolution of the characteristic
table evaluated at ``t``.  One forward transform is shared by all i; each
value at ``t`` is read off with a signed sum against row ``t`` of the
Hadamard matrix instead of a full inverse transform.
"""
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .arith import exact_div
from .wht import fwht, inverse_fwht


def hadamard_signs(d, t):
    """Boolean mask of the indices x with ``popcount(x & t)`` odd."""
    x = np.arange(1 << d, dtype=np.uint64)
    return (np.bitwise_count(x & np.uint64(t)) & 1).astype(bool)


def _signed_sum(p, negative, threads=1):
    if threads <= 1 or p.shape[0] < 2 * threads:
        return p[~negative].sum() - p[negative].sum()
    bounds = np.linspace(0, p.shape[0], threads + 1).astype(int)
    chunks = list(zip(bounds[:-1], bounds[1:]))
    with ThreadPoolExecutor(threads) as pool:
        parts = pool.map(lambda ab: _signed_sum(p[ab[0]:ab[1]], negative[ab[0]:ab[1]]), chunks)
        return sum(parts, 0)


def count_candidates_profile(char, t, k, counter=None, threads=1, full_inverse=False):
    """Return ``[|Cand(V, t, i)| for i in 0..k]`` as Python ints.

    With ``full_inverse=True`` every value is additionally recomputed by a
    full inverse transform and the two routes must agree.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    d = char.d
    n = 1 << d
    counts = [1 if t == 0 else 0]
    if k == 0:
        return counts
    spectrum = fwht(char.values, counter)
    negative = hadamard_signs(d, t)
    p = spectrum
    for i in range(1, k + 1):
        if i > 1:
            p = p * spectrum
            if counter is not None:
                counter.mul(n)
        total = _signed_sum(p, negative, threads)
        if counter is not None:
            counter.add(n)
            counter.div(1)
        value = exact_div(int(total), n, what=f"candidate count for i={i}")
        if full_inverse:
            full = inverse_fwht(p)
            if full[t] != value:
                raise AssertionError(f"point evaluation {value} != full inverse {full[t]} at i={i}")
        counts.append(value)
    return counts


def candidate_table(char, k):
    """Candidate counts for every target at once: row i holds ``*^i chi_V``.

    Costs a full inverse transform per i; meant for checks at small d.
    """
    spectrum = fwht(char.values)
    rows = [np.array([1] + [0] * ((1 << char.d) - 1), dtype=object)]
    p = np.ones(1 << char.d, dtype=object)
    for _ in range(k):
        p = p * spectrum
        rows.append(inverse_fwht(p))
    return rows
