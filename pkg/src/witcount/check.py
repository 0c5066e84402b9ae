"""Oracle cross-checks, random instance streams and the scaling benchmark."""
import time
from dataclasses import dataclass

import numpy as np

from .arith import OpCounter
from .errors import SizeGuardError
from .instance import DEFAULT_MAX_D, format_instance, random_instance
from .oracle import brute_force_profile, naive_dp_witnesses
from .witness import count_witnesses

#: per-instance tuple budget used to clamp m in random mode
RANDOM_TUPLE_BUDGET = 10**6


@dataclass
class Mismatch:
    instance: object
    oracle: str
    expected: object
    got: object

    def report(self):
        return (
            f"mismatch against {self.oracle}: expected {self.expected}, got {self.got}\n"
            f"instance:\n{format_instance(self.instance)}"
        )


@dataclass
class CheckResult:
    checked: int = 0
    brute_runs: int = 0
    dp_runs: int = 0
    mismatch: Mismatch = None

    @property
    def passed(self):
        return self.mismatch is None and self.checked > 0


def random_instances(seed, count, dmax, kmax, budget=RANDOM_TUPLE_BUDGET):
    """Reproducible instances with d in [1, dmax], k in [0, kmax] and m clamped so m^k <= budget."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        d = int(rng.integers(1, dmax + 1))
        k = int(rng.integers(0, kmax + 1))
        cap = min(1 << d, int(round(budget ** (1 / max(k, 1)))))
        while cap > 0 and sum(cap**i for i in range(k + 1)) > budget:
            cap -= 1
        m = int(rng.integers(0, cap + 1))
        yield random_instance(rng, d, m, k)


def oracle_check(instances, fast=count_witnesses):
    """Compare ``fast`` against both oracles; stop at the first disagreement."""
    result = CheckResult()
    for inst in instances:
        got = fast(inst)
        try:
            ref = brute_force_profile(inst)
        except SizeGuardError:
            ref = None
        if ref is not None:
            result.brute_runs += 1
            for key in ("cand", "fail", "wit"):
                if list(getattr(ref, key)) != list(getattr(got, key)):
                    result.mismatch = Mismatch(inst, f"brute_force_profile.{key}", getattr(ref, key), getattr(got, key))
                    return result
        try:
            dp = naive_dp_witnesses(inst)
        except SizeGuardError:
            dp = None
        if dp is not None:
            result.dp_runs += 1
            if dp != got.wit[inst.k]:
                result.mismatch = Mismatch(inst, "naive_dp_witnesses", dp, got.wit[inst.k])
                return result
        if ref is None and dp is None:
            raise SizeGuardError("instance too large for both oracles")
        result.checked += 1
    return result


def bench_rows(ds, k, density=0.5, seed=0, threads=1, m=None, max_d=DEFAULT_MAX_D):
    """One row per d: (d, m, k, wall_ms, op_count).

    ``m`` defaults to ``density * 2**d``.  Instance generation is excluded
    from both the timing and the operation count.
    """
    rows = []
    for d in ds:
        rng = np.random.default_rng([seed, d])
        size = int((1 << d) * density) if m is None else m
        inst = random_instance(rng, d, size, k, max_d=max_d)
        counter = OpCounter()
        start = time.perf_counter()
        count_witnesses(inst, counter=counter, threads=threads)
        wall = (time.perf_counter() - start) * 1000
        rows.append((d, inst.m, k, wall, counter.total))
    return rows
