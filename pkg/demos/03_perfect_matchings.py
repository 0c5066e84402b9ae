#!/usr/bin/env python
# Perfect matchings of uniform hypergraphs through witness counting.

from math import factorial

from witcount import Hypergraph, brute_force_matchings, count_perfect_matchings, count_witnesses, reduce_to_witness_instance

k4 = Hypergraph.complete(4, 2)
inst = reduce_to_witness_instance(k4)
# Edges become bitvectors, the target is all ones and k = n / l.
print("d, m, t, k =", inst.d, inst.m, bin(inst.target), inst.k)

# Each matching gives k! ordered witnesses.
wit = count_witnesses(inst).wit[inst.k]
print("witnesses", wit, "-> matchings", wit // factorial(inst.k))

for name, g in [
    ("K4", k4),
    ("C4", Hypergraph.cycle(4)),
    ("K3", Hypergraph.complete(3, 2)),
    ("K8", Hypergraph.complete(8, 2)),
    ("complete 3-uniform, n=6", Hypergraph.complete(6, 3)),
    ("complete 4-uniform, n=12", Hypergraph.complete(12, 4)),
]:
    print(f"{name:26s} fast={count_perfect_matchings(g):6d}  backtracking={brute_force_matchings(g):6d}")
