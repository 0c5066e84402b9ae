"""Counting set partitions by their numbers of even- and odd-sized classes.

``ordered[s][x][y]`` is the number of ordered partitions of an s-element set
into x classes of even size and y classes of odd size.  It is filled by
adding one class of size p at a time::

    P[s][x][y] = sum_{p=1..s} C(s, p) * ([p even] P[s-p][x-1][y] + [p odd] P[s-p][x][y-1])

Unordered counts follow by dividing by ``(x + y)!``.
"""
from dataclasses import dataclass
from math import factorial

from .arith import exact_div


@dataclass(frozen=True)
class ParityTables:
    k: int
    binom: list
    ordered: list

    def ordered_count(self, s, x, y):
        if not (0 <= s <= self.k and x >= 0 and y >= 0):
            raise IndexError(f"({s}, {x}, {y}) outside tables built for k={self.k}")
        if x > self.k // 2 or y > self.k:
            return 0
        return self.ordered[s][x][y]


def build_binomials(k, counter=None):
    binom = [[1]]
    for s in range(1, k + 1):
        prev = binom[-1]
        row = [1] + [prev[p - 1] + prev[p] for p in range(1, s)] + [1]
        if counter is not None:
            counter.add(s - 1)
        binom.append(row)
    return binom


def build_parity_tables(k, counter=None):
    """Fill the binomial table and the ordered parity table for all s <= k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    binom = build_binomials(k, counter)
    xmax, ymax = k // 2, k
    P = [[[0] * (ymax + 1) for _ in range(xmax + 1)] for _ in range(k + 1)]
    P[0][0][0] = 1
    for s in range(1, k + 1):
        for x in range(min(xmax, s // 2) + 1):
            for y in range(s % 2, s - 2 * x + 1, 2):
                total = 0
                for p in range(1, s + 1):
                    if p % 2 == 0:
                        if x == 0:
                            continue
                        sub = P[s - p][x - 1][y]
                    else:
                        if y == 0:
                            continue
                        sub = P[s - p][x][y - 1]
                    if sub:
                        total += binom[s][p] * sub
                        if counter is not None:
                            counter.mul()
                            counter.add()
                P[s][x][y] = total
    return ParityTables(k, binom, P)


def unordered_parity_count(tables, e, o, kp):
    """Number of unordered partitions of a kp-set with e even and o odd classes."""
    if kp > tables.k:
        raise ValueError(f"kp={kp} exceeds table size k={tables.k}")
    if e < 0 or o < 0:
        return 0
    return exact_div(tables.ordered_count(kp, e, o), factorial(e + o), what=f"parity count ({e}, {o}, {kp})")
