#!/usr/bin/env python
# Walsh-Hadamard transform and XOR convolution on exact integers.

import numpy as np

from witcount import fwht, inverse_fwht, xor_convolve
from witcount.oracle import brute_force_convolution

# A length-2^d array is a function on F_2^d; index x is the bitvector x.
f = np.array([0, 1, 1, 1])          # indicator of {01, 10, 11}
F = fwht(f)
print("fwht(f)        ", F.tolist())   # [3, -1, -1, -1]

# Applying the transform twice scales by 2^d.
print("fwht(fwht(f))  ", fwht(F).tolist())
print("inverse        ", inverse_fwht(F).tolist())

# Convolution: (f*g)(x) = sum over v1 ^ v2 == x of f(v1) g(v2).
# Entry x of f*f counts ordered pairs from the set that XOR to x.
print("f * f          ", xor_convolve(f, f).tolist())
print("double sum     ", brute_force_convolution(f, f))

# Values never pass through floating point, so huge entries stay exact.
big = [2**90, -(3**50), 1, 0, 0, 0, 0, 7]
print("exact roundtrip", inverse_fwht(fwht(big)).tolist() == big)
