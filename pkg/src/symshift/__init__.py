"""Symmetric shifted monomial ideals, handled through their partition generators."""

from ._config import BUDGET, BudgetExceeded, SymshiftError, VerificationError
from .oracle import MonomialIdeal
from .partitions import delta, dominance_leq, enumerate_dominated, join, meet, part_of, stats, transpose
from .symideal import SymmetricIdeal, compress, expand, ss_closure, sss_closure

__version__ = "0.1.0"
