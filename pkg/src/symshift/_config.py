"""Resource caps shared by the enumeration routines.

Every cap can be overridden at once with the ``SYMSHIFT_BUDGET`` environment
variable, which replaces the partition and fiber budgets (the permutation cap
stays put since it guards factorial blowup rather than a count).
"""

from __future__ import annotations

import os
from dataclasses import dataclass


class SymshiftError(Exception):
    pass


class BudgetExceeded(SymshiftError):
    """An enumeration outgrew its configured cap."""

    def __init__(self, what: str, limit: int, partial=None):
        super().__init__(f"{what} exceeded budget of {limit}")
        self.what = what
        self.limit = limit
        self.partial = partial


class VerificationError(SymshiftError):
    """Two independent computations that must agree did not."""


class NotStronglyShifted(ValueError, SymshiftError):
    pass


class NotShifted(ValueError, SymshiftError):
    pass


class NotEquigenerated(ValueError, SymshiftError):
    pass


@dataclass
class Budget:
    partitions: int = 10**6
    max_perm_n: int = 8
    fibers: int = 2 * 10**5
    lp_columns: int = 4096

    @classmethod
    def from_env(cls) -> "Budget":
        b = cls()
        raw = os.environ.get("SYMSHIFT_BUDGET")
        if raw:
            try:
                val = int(raw)
            except ValueError:
                raise SymshiftError(f"SYMSHIFT_BUDGET must be an integer, got {raw!r}") from None
            if val <= 0:
                raise SymshiftError("SYMSHIFT_BUDGET must be positive")
            b.partitions = val
            b.fibers = val
        return b


BUDGET = Budget.from_env()
