"""Slow, independent reference implementations used to check the fast paths."""
from itertools import product
from math import factorial

import numpy as np

from .errors import SizeGuardError
from .witness import WitnessProfile

TUPLE_GUARD = 10**7
TABLE_GUARD = 5 * 10**7
PARTITION_GUARD = 10
CONVOLUTION_GUARD = 8


def brute_force_profile(inst):
    """Classify every i-tuple over V, i <= k, straight from the definitions."""
    m, k = inst.m, inst.k
    if sum(m**i for i in range(k + 1)) > TUPLE_GUARD:
        raise SizeGuardError(f"{m}^{k} tuples exceed the enumeration guard {TUPLE_GUARD}")
    cand, fail = [], []
    for i in range(k + 1):
        c = f = 0
        # itertools.product walks index vectors in odometer order
        for tup in product(inst.vectors, repeat=i):
            acc = 0
            for v in tup:
                acc ^= v
            if acc != inst.target:
                continue
            c += 1
            if len(set(tup)) < i:
                f += 1
        cand.append(c)
        fail.append(f)
    return WitnessProfile(cand, fail)


def naive_dp_witnesses(inst):
    """wit[k] from the table C[i][w][v] over increasingly ordered tuples.

    ``C[i][w][v]`` counts ways to write v as a sum of i distinct vectors of V
    listed in increasing order and ending with V[w]; the answer is
    ``k! * sum_w C[k][w][t]``.
    """
    d, k, m = inst.d, inst.k, inst.m
    size = 1 << d
    if k == 0:
        return 1 if inst.target == 0 else 0
    if size * k * m > TABLE_GUARD:
        raise SizeGuardError(f"table of {size * k * m} entries exceeds guard {TABLE_GUARD}")
    vs = sorted(inst.vectors)
    xs = np.arange(size)
    prev = np.zeros((m, size), dtype=object)
    for w, v in enumerate(vs):
        prev[w, v] = 1
    for _ in range(2, k + 1):
        cur = np.zeros((m, size), dtype=object)
        for w, v in enumerate(vs):
            # C[i][w][x] = sum_{w' < w} C[i-1][w'][x ^ v]
            for wp in range(w):
                cur[w] += prev[wp][xs ^ v]
        prev = cur
    return factorial(k) * int(prev[:, inst.target].sum())


def enumerate_partitions(kp):
    """All set partitions of {1..kp}, classes ordered by their smallest element."""
    if kp > PARTITION_GUARD:
        raise SizeGuardError(f"kp={kp} exceeds partition guard {PARTITION_GUARD}")
    out = []

    def grow(i, classes):
        if i > kp:
            out.append(tuple(tuple(c) for c in classes))
            return
        classes.append([i])
        grow(i + 1, classes)
        classes.pop()
        for c in classes:
            c.append(i)
            grow(i + 1, classes)
            c.pop()

    grow(1, [])
    return out


def brute_force_convolution(f, g):
    """Double sum over all pairs (v1, v2) with the result at v1 ^ v2."""
    f, g = [int(v) for v in f], [int(v) for v in g]
    n = len(f)
    if len(g) != n or n & (n - 1):
        raise ValueError("operands must have equal power-of-two length")
    if n > 1 << CONVOLUTION_GUARD:
        raise SizeGuardError(f"length {n} exceeds 2^{CONVOLUTION_GUARD}")
    out = [0] * n
    for v1 in range(n):
        for v2 in range(n):
            out[v1 ^ v2] += f[v1] * g[v2]
    return out
