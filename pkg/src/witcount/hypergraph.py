"""Perfect matchings of uniform hypergraphs via witness counting.

Each edge becomes the bitvector of its vertices, the target is the all-ones
vector and k = n / l.  With exactly l ones per vector, k vectors can only XOR
to all-ones if their edges are pairwise disjoint, so every perfect matching
gives k! ordered witnesses and nothing else does.
"""
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .arith import exact_div
from .errors import CapacityError, ParseError, SizeGuardError
from .instance import DEFAULT_MAX_D, Instance
from .witness import count_witnesses

EDGE_GUARD = 512


@dataclass(frozen=True)
class Hypergraph:
    n: int
    l: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0 or self.l < 2:
            raise ValueError("need n >= 0 and uniformity l >= 2")
        for e in edges:
            if len(e) != self.l:
                raise ValueError(f"edge {sorted(e)} does not have exactly {self.l} vertices")
            if not all(0 <= u < self.n for u in e):
                raise ValueError(f"edge {sorted(e)} has a vertex outside [0, {self.n})")
        if len(set(edges)) != len(edges):
            raise ValueError("edges must be pairwise distinct")

    @classmethod
    def complete(cls, n, l):
        return cls(n, l, combinations(range(n), l))

    @classmethod
    def cycle(cls, n):
        return cls(n, 2, [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class NoInstance:
    """Reduction result when l does not divide n: no matching can exist."""

    reason: str


def edge_vector(edge):
    v = 0
    for u in edge:
        v |= 1 << u
    return v


def reduce_to_witness_instance(g, max_d=DEFAULT_MAX_D):
    if g.n % g.l:
        return NoInstance("n not divisible by l")
    if g.n == 0:
        # F_2^0 is not representable; the empty matching is handled by the caller
        return NoInstance("empty vertex set")
    if g.n > max_d:
        raise CapacityError(f"n={g.n} exceeds the dimension cap {max_d}")
    return Instance(g.n, [edge_vector(e) for e in g.edges], (1 << g.n) - 1, g.n // g.l)


def count_perfect_matchings(g, counter=None, max_d=DEFAULT_MAX_D):
    inst = reduce_to_witness_instance(g, max_d=max_d)
    if isinstance(inst, NoInstance):
        return 1 if g.n == 0 else 0
    wit = count_witnesses(inst, counter=counter).wit[inst.k]
    return exact_div(wit, factorial(inst.k), what="witnesses per perfect matching")


def brute_force_matchings(g):
    """Backtracking count of edge sets that are pairwise disjoint and cover all vertices."""
    if len(g.edges) > EDGE_GUARD:
        raise SizeGuardError(f"{len(g.edges)} edges exceed the backtracking guard {EDGE_GUARD}")
    masks = [edge_vector(e) for e in g.edges]
    full = (1 << g.n) - 1

    def extend(covered):
        if covered == full:
            return 1
        # the lowest uncovered vertex must be covered by exactly one chosen edge
        low = ~covered & (covered + 1)
        return sum(extend(covered | e) for e in masks if e & low and not e & covered)

    return extend(0)


def parse_hypergraph(text):
    """Parse ``n=<int> l=<int>`` followed by one edge per line (space-separated vertices)."""
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header n=<int> l=<int>", 1)
    no, header = lines[0]
    fields = {}
    for tok in header.split():
        key, sep, val = tok.partition("=")
        if not sep or key not in ("n", "l"):
            raise ParseError(f"bad header token {tok!r}", no)
        try:
            fields[key] = int(val)
        except ValueError:
            raise ParseError(f"bad integer in {tok!r}", no) from None
    if set(fields) != {"n", "l"}:
        raise ParseError("header needs n=<int> l=<int>", no)
    edges = []
    for no, line in lines[1:]:
        try:
            edges.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ParseError(f"bad vertex list {line!r}", no) from None
    try:
        return Hypergraph(fields["n"], fields["l"], edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
