"""Witness counting: candidates minus failures, by dynamic programming over k.

A failure is a candidate with a repeated entry.  Grouping failures by the
partition of tuple positions into equal entries, and that partition by its
numbers ``e`` of even and ``o`` of odd classes, gives::

    fail[kp] = sum_{e + o < kp} parts(e, o, kp) * (m - o)_e * wit[o]

where ``(n)_e`` is the falling factorial.  Even classes cancel in the XOR,
so only the ``o`` odd-class vectors must hit the target (``wit[o]`` ways)
and the ``e`` remaining vectors are any distinct unused ones.
"""
from dataclasses import dataclass, field
from math import factorial

from .arith import check
from .candidates import count_candidates_profile
from .instance import build_char_table
from .parity import build_parity_tables, unordered_parity_count


@dataclass
class WitnessProfile:
    cand: list
    fail: list
    wit: list = field(init=False)

    def __post_init__(self):
        self.wit = [c - f for c, f in zip(self.cand, self.fail)]

    @property
    def k(self):
        return len(self.wit) - 1

    def cumulative(self):
        out, run = [], 0
        for w in self.wit:
            run += w
            out.append(run)
        return out

    def as_dict(self):
        return {key: [str(v) for v in getattr(self, key)] for key in ("cand", "fail", "wit")}


def falling_factorial(m, o, e):
    """``(m - o) * (m - o - 1) * ... * (m - o - e + 1)``; 1 when e == 0."""
    out = 1
    for j in range(e):
        out *= m - o - j
        if out == 0:
            break
    return out


def count_failures(wit, tables, m, kp, counter=None):
    """Failures among candidates of length ``kp``, given ``wit[0..kp-1]``."""
    total = 0
    for o in range(kp % 2, kp, 2):
        if not wit[o]:
            continue
        for e in range(0, (kp - o) // 2 + 1):
            parts = unordered_parity_count(tables, e, o, kp)
            if parts:
                total += parts * falling_factorial(m, o, e) * wit[o]
                if counter is not None:
                    counter.mul(2 + e)
                    counter.add(1)
    return total


def count_witnesses(inst, counter=None, threads=1):
    """Cand, Fail and Wit for every k' <= inst.k."""
    char = build_char_table(inst)
    cand = count_candidates_profile(char, inst.target, inst.k, counter=counter, threads=threads)
    tables = build_parity_tables(inst.k, counter)
    m = inst.m
    fail, wit = [], []
    for kp in range(inst.k + 1):
        f = count_failures(wit, tables, m, kp, counter) if kp else 0
        w = cand[kp] - f
        if counter is not None:
            counter.add()
        check(w >= 0, f"negative witness count {w} at k={kp}")
        check(w % factorial(kp) == 0, f"witness count {w} at k={kp} not divisible by {kp}!")
        fail.append(f)
        wit.append(w)
    return WitnessProfile(cand, fail)
