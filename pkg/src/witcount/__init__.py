"""Exact witness counting over F_2^d.

Counts ordered k-tuples of pairwise-distinct vectors from a set V that XOR
to a target t, for every k' <= k, with a Walsh-Hadamard candidate count and
a partition-based failure correction.
"""
from .arith import STATS, OpCounter, exact_div
from .candidates import count_candidates_profile
from .errors import (
    CapacityError,
    DuplicateVectorError,
    ExactnessError,
    ParseError,
    SizeGuardError,
    WitcountError,
)
from .hypergraph import (
    Hypergraph,
    NoInstance,
    brute_force_matchings,
    count_perfect_matchings,
    parse_hypergraph,
    reduce_to_witness_instance,
)
from .instance import CharTable, Instance, build_char_table, format_instance, parse_instance, random_instance
from .parity import ParityTables, build_parity_tables, unordered_parity_count
from .wht import fwht, fwht_inplace, inverse_fwht, xor_convolve
from .witness import WitnessProfile, count_failures, count_witnesses, falling_factorial

__version__ = "0.1.0"
