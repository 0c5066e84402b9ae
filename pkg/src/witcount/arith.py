"""Exact-division checks and big-integer operation counting."""
from dataclasses import dataclass

from .errors import ExactnessError


@dataclass
class ExactnessStats:
    checks: int = 0
    violations: int = 0

    def reset(self):
        self.checks = 0
        self.violations = 0


#: process-wide tally of exactness checks performed and failed
STATS = ExactnessStats()


def exact_div(a, b, what="value"):
    """Return ``a // b``, raising :class:`ExactnessError` unless ``b`` divides ``a``."""
    STATS.checks += 1
    q, r = divmod(a, b)
    if r:
        STATS.violations += 1
        raise ExactnessError(f"{what}: {a} is not divisible by {b}")
    return q


def check(condition, message):
    STATS.checks += 1
    if not condition:
        STATS.violations += 1
        raise ExactnessError(message)


@dataclass
class OpCounter:
    """Counts big-integer arithmetic operations, one per element operation.

    Vectorised kernels report the number of element-wise operations they
    performed, so the totals match a scalar implementation of the same loop.
    """

    adds: int = 0
    muls: int = 0
    divs: int = 0

    @property
    def total(self):
        return self.adds + self.muls + self.divs

    def add(self, n=1):
        self.adds += n

    def mul(self, n=1):
        self.muls += n

    def div(self, n=1):
        self.divs += n

    def as_dict(self):
        return {"add": self.adds, "mul": self.muls, "div": self.divs, "total": self.total}
