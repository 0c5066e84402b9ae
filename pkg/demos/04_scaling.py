#!/usr/bin/env python
# Operation counts grow like 2^d d k and barely depend on m.

import numpy as np

from witcount import OpCounter, count_witnesses, random_instance
from witcount.check import bench_rows

k = 4
print(" d        m        ops  /2^d.d.k  growth        ms")
prev = None
for d, m, _, ms, ops in bench_rows(range(12, 20), k, density=0.5, seed=0):
    ratio = "" if prev is None else f"x{ops / prev:.3f}"
    print(f"{d:2d} {m:8d} {ops:10d} {ops / (2**d * d * k):8.3f} {ratio:8s} {ms:8.1f}")
    prev = ops

# Fixed d: the count is the same whether V has a thousand vectors or 128k.
d = 17
for m in (2**10, 2**13, 2**16, 2**17):
    counter = OpCounter()
    count_witnesses(random_instance(np.random.default_rng(m), d, m, k), counter=counter)
    print(f"d={d} m={m:6d} ops={counter.total}")
