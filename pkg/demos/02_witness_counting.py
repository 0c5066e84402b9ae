#!/usr/bin/env python
# Counting ordered k-tuples of distinct vectors that XOR to a target.

import numpy as np

from witcount import Instance, OpCounter, count_witnesses
from witcount.oracle import brute_force_profile, naive_dp_witnesses

# V = {01, 10, 11}, target 00.  Candidates allow repeats, witnesses do not.
inst = Instance(d=2, vectors=[0b01, 0b10, 0b11], target=0b00, k=3)
p = count_witnesses(inst)
print("cand", p.cand)      # [1, 0, 3, 6]: (v, v) pairs hit 00 three times
print("fail", p.fail)      # [0, 0, 3, 0]
print("wit ", p.wit)       # [1, 0, 0, 6]: the 3! orderings of 01 + 10 + 11

# Prefix sums answer the "at most k vectors" variant.
print("at most k'", p.cumulative())

# Both reference implementations agree on a random instance.
rng = np.random.default_rng(0)
inst = Instance(6, rng.choice(64, 12, replace=False).tolist(), 0b101101, 5)
fast = count_witnesses(inst)
print("fast    ", fast.wit)
print("enumerate", brute_force_profile(inst).wit)
print("naive DP k=5", naive_dp_witnesses(inst))

# A large instance: m is about a quarter million, counts exceed 64 bits.
d, k = 19, 5
inst = Instance(d, rng.choice(2**d, 2**18, replace=False).tolist(), 12345, k)
counter = OpCounter()
p = count_witnesses(inst, counter=counter)
print("wit[5] =", p.wit[5])
print("arithmetic operations:", counter.total, " budget 2^d d k + k^4 =", 2**d * d * k + k**4)
