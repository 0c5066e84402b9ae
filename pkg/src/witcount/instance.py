"""Problem instances, the text file format and the characteristic table.

A vector of F_2^d is stored as a plain ``int`` whose bit ``j`` is coordinate
``j``; vector addition is ``^``.  In files, vectors are written as bitstrings
with the most significant coordinate first, so ``"01"`` is the integer 1.
"""
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DuplicateVectorError, ParseError

DEFAULT_MAX_D = 24


@dataclass(frozen=True)
class Instance:
    d: int
    vectors: tuple
    target: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(int(v) for v in self.vectors))
        object.__setattr__(self, "target", int(self.target))
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got {self.d}")
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        size = 1 << self.d
        for v in self.vectors + (self.target,):
            if not 0 <= v < size:
                raise ValueError(f"vector {v} outside F_2^{self.d}")
        if len(set(self.vectors)) != len(self.vectors):
            raise DuplicateVectorError("vectors must be pairwise distinct")

    @property
    def m(self):
        return len(self.vectors)

    def with_k(self, k):
        return Instance(self.d, self.vectors, self.target, k)


@dataclass(frozen=True)
class CharTable:
    d: int
    values: np.ndarray

    @property
    def m(self):
        return int(self.values.sum())


def to_bits(v, d):
    return format(v, f"0{d}b")


def _parse_bits(token, d, lineno):
    if len(token) != d or any(c not in "01" for c in token):
        raise ParseError(f"expected a bitstring of length {d}, got {token!r}", lineno)
    return int(token, 2)


def parse_instance(text, *, dedupe=False, max_d=DEFAULT_MAX_D):
    """Parse the instance file format.

    ::

        d=<int> k=<int>
        t=<bitstring>
        <bitstring>[,<bitstring>...]
        ...

    ``#`` starts a comment line.  ``k`` defaults to 0 when omitted.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if len(lines) < 2:
        raise ParseError("expected a header line and a target line", lines[0][0] if lines else 1)

    no, header = lines[0]
    fields = {}
    for tok in header.split():
        key, sep, val = tok.partition("=")
        if not sep or key not in ("d", "k") or key in fields:
            raise ParseError(f"bad header token {tok!r}", no)
        try:
            fields[key] = int(val)
        except ValueError:
            raise ParseError(f"bad integer in {tok!r}", no) from None
    if "d" not in fields:
        raise ParseError("header is missing d=<int>", no)
    d, k = fields["d"], fields.get("k", 0)
    if d < 1 or k < 0:
        raise ParseError("d must be positive and k non-negative", no)
    if d > max_d:
        raise CapacityError(f"d={d} exceeds the dimension cap {max_d}")

    no, tline = lines[1]
    if not tline.startswith("t="):
        raise ParseError("expected t=<bitstring>", no)
    target = _parse_bits(tline[2:].strip(), d, no)

    vectors, seen = [], set()
    for no, line in lines[2:]:
        for tok in line.split(","):
            tok = tok.strip()
            if not tok:
                continue
            v = _parse_bits(tok, d, no)
            if v in seen:
                if dedupe:
                    continue
                raise DuplicateVectorError(f"duplicate vector {tok}", no)
            seen.add(v)
            vectors.append(v)
    return Instance(d, vectors, target, k)


def format_instance(inst):
    lines = [f"d={inst.d} k={inst.k}", f"t={to_bits(inst.target, inst.d)}"]
    lines += [to_bits(v, inst.d) for v in inst.vectors]
    return "\n".join(lines) + "\n"


def build_char_table(inst):
    values = np.zeros(1 << inst.d, dtype=np.int64)
    if inst.vectors:
        values[np.fromiter(inst.vectors, dtype=np.int64, count=inst.m)] = 1
    return CharTable(inst.d, values)


def random_instance(rng, d, m, k, max_d=DEFAULT_MAX_D):
    """Draw ``m`` distinct vectors uniformly without replacement and a uniform target.

    ``rng`` is a :class:`numpy.random.Generator`; equal seeds give equal instances.
    """
    if d > max_d:
        raise CapacityError(f"d={d} exceeds the dimension cap {max_d}")
    size = 1 << d
    if not 0 <= m <= size:
        raise ValueError(f"m={m} not in [0, 2^{d}]")
    vectors = rng.choice(size, size=m, replace=False).tolist()
    target = int(rng.integers(size))
    return Instance(d, vectors, target, k)
