"""Symmetric monomial ideals stored by one partition per generator orbit.

``SymmetricIdeal(n, gens)`` keeps the minimal partitions only. Membership of
an exponent vector reduces to sorting it and comparing entrywise with some
generator, which is what every routine below leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import partitions as pt
from ._config import BUDGET, BudgetExceeded, NotStronglyShifted
from .oracle import MonomialIdeal, borel_closure, is_strongly_stable

SCHEMA_VERSION = 1


def _plus_minus(lam, i, j):
    v = list(lam)
    v[i] += 1
    v[j] -= 1
    return tuple(v)


@dataclass(frozen=True)
class SymmetricIdeal:
    n: int
    gens: tuple  # minimal partitions, sorted; () is the zero ideal

    # -- construction -----------------------------------------------------

    @classmethod
    def from_partitions(cls, n: int, ps: Iterable[Sequence[int]]) -> "SymmetricIdeal":
        checked = []
        for idx, p in enumerate(ps):
            try:
                checked.append(pt.as_partition(p, n))
            except ValueError as exc:
                raise ValueError(f"generators[{idx}]: {exc}") from None
        return cls(n, tuple(pt.minimal_elements(checked)))

    @classmethod
    def zero(cls, n: int) -> "SymmetricIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "SymmetricIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def veronese(cls, n: int, c: int) -> "SymmetricIdeal":
        """Squarefree Veronese ideal of height c (intersection of height-c primes)."""
        if not 1 <= c <= n:
            raise ValueError(f"height {c} outside 1..{n}")
        return cls(n, ((0,) * (c - 1) + (1,) * (n - c + 1),))

    @classmethod
    def maximal(cls, n: int) -> "SymmetricIdeal":
        return cls.veronese(n, n)

    # -- basic predicates -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def contains(self, e: Sequence[int]) -> bool:
        if len(e) != self.n:
            raise ValueError(f"dimension mismatch: {len(e)} vs {self.n}")
        mu = pt.part_of(e)
        return any(pt.componentwise_leq(lam, mu) for lam in self.gens)

    __contains__ = contains

    def issubset(self, other: "SymmetricIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    @cached_property
    def is_equigenerated(self) -> bool:
        return len({sum(g) for g in self.gens}) <= 1

    @cached_property
    def is_shifted(self) -> bool:
        n = self.n
        for lam in self.gens:
            for i in range(n - 1):
                if lam[i] < lam[-1] and not self.contains(_plus_minus(lam, i, n - 1)):
                    return False
        return True

    @cached_property
    def is_strongly_shifted(self) -> bool:
        n = self.n
        for lam in self.gens:
            for j in range(n):
                for i in range(j):
                    if lam[i] < lam[j] and not self.contains(_plus_minus(lam, i, j)):
                        return False
        return True

    @cached_property
    def borel_generators(self) -> tuple:
        if not self.is_strongly_shifted:
            raise NotStronglyShifted("Borel generators need a strongly shifted ideal")
        by_deg: dict = {}
        for lam in self.gens:
            by_deg.setdefault(sum(lam), []).append(lam)
        out = []
        for group in by_deg.values():
            for lam in group:
                if not any(mu != lam and pt.dominance_leq(lam, mu) for mu in group):
                    out.append(lam)
        return tuple(sorted(out))

    @property
    def is_principal_borel(self) -> bool:
        return (
            not self.is_zero
            and self.is_strongly_shifted
            and len(self.borel_generators) == 1
        )

    def degrees(self) -> list:
        return sorted({sum(g) for g in self.gens})

    # -- serialisation ----------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj) -> "SymmetricIdeal":
        if not isinstance(obj, dict):
            raise ValueError("ideal JSON must be an object with keys 'n' and 'generators'")
        if "n" not in obj:
            raise ValueError("missing field 'n'")
        if "generators" not in obj:
            raise ValueError("missing field 'generators'")
        n = obj["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValueError(f"field 'n' must be a positive integer, got {n!r}")
        gens = obj["generators"]
        if not isinstance(gens, list):
            raise ValueError("field 'generators' must be a list")
        for idx, g in enumerate(gens):
            if not isinstance(g, list):
                raise ValueError(f"generators[{idx}] must be a list of integers")
        return cls.from_partitions(n, gens)

    def __str__(self) -> str:
        if self.is_zero:
            return f"Sym(n={self.n}, zero)"
        return f"Sym(n={self.n}, {list(self.gens)})"


# -- closures ----------------------------------------------------------------


def _common_n(ps) -> int:
    ps = list(ps)
    if not ps:
        raise ValueError("need at least one partition")
    n = len(ps[0])
    for idx, p in enumerate(ps):
        if len(p) != n:
            raise ValueError(f"partition {idx} has {len(p)} parts, expected {n}")
    return n


def sss_closure(B: Iterable[Sequence[int]]) -> SymmetricIdeal:
    """Smallest symmetric strongly shifted ideal containing the given orbits."""
    B = [tuple(b) for b in B]
    n = _common_n(B)
    pool = set()
    for lam in B:
        pool.update(pt.enumerate_dominated(pt.as_partition(lam, n)))
        if len(pool) > BUDGET.partitions:
            raise BudgetExceeded("closure partitions", BUDGET.partitions)
    return SymmetricIdeal(n, tuple(pt.minimal_elements(pool)))


def ss_closure(B: Iterable[Sequence[int]]) -> SymmetricIdeal:
    """Smallest symmetric shifted ideal containing the given orbits.

    Fixed point of 'move one unit off the largest part' on generators.
    """
    B = [tuple(b) for b in B]
    n = _common_n(B)
    cur = SymmetricIdeal.from_partitions(n, B)
    while True:
        extra = []
        for lam in cur.gens:
            for i in range(n - 1):
                if lam[i] < lam[-1]:
                    mu = pt.part_of(_plus_minus(lam, i, n - 1))
                    if not cur.contains(mu):
                        extra.append(mu)
        if not extra:
            return cur
        cur = SymmetricIdeal.from_partitions(n, list(cur.gens) + extra)
        if len(cur.gens) > BUDGET.partitions:
            raise BudgetExceeded("shifted closure", BUDGET.partitions)


def borel_generators(I: SymmetricIdeal) -> tuple:
    return I.borel_generators


def principal_membership(lam: Sequence[int], e: Sequence[int]) -> bool:
    """Prefix-sum test for x^e in the principal Borel ideal of λ."""
    if len(lam) != len(e):
        raise ValueError(f"dimension mismatch: {len(lam)} vs {len(e)}")
    if not any(lam):
        raise ValueError("principal membership needs a nonzero partition")
    return all(a >= b for a, b in zip(pt.prefix_sums(pt.part_of(e)), pt.prefix_sums(lam)))


def prefix_meet(lam: Sequence[int], mu: Sequence[int]) -> tuple:
    """Partition whose prefix sums are the pointwise max of the two.

    Its principal Borel ideal is the intersection of those of λ and μ for any
    sizes; for equal sizes it coincides with the dominance meet.
    """
    top = [max(a, b) for a, b in zip(pt.prefix_sums(lam), pt.prefix_sums(mu))]
    return tuple(b - a for a, b in zip([0] + top[:-1], top))


# -- arithmetic --------------------------------------------------------------


def _match(I: SymmetricIdeal, J: SymmetricIdeal) -> None:
    if I.n != J.n:
        raise ValueError(f"ambient mismatch: {I.n} vs {J.n}")


def _perm_guard(n: int) -> None:
    if n > BUDGET.max_perm_n:
        raise BudgetExceeded(f"permutation enumeration for n={n}", BUDGET.max_perm_n)


def add(I: SymmetricIdeal, J: SymmetricIdeal) -> SymmetricIdeal:
    _match(I, J)
    return SymmetricIdeal(I.n, tuple(pt.minimal_elements(I.gens + J.gens)))


def intersect(I: SymmetricIdeal, J: SymmetricIdeal, fast: bool = True) -> SymmetricIdeal:
    _match(I, J)
    if I.is_zero or J.is_zero:
        return SymmetricIdeal.zero(I.n)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if fast and I.is_strongly_shifted and J.is_strongly_shifted:
        return sss_closure(
            prefix_meet(a, b) for a in I.borel_generators for b in J.borel_generators
        )
    _perm_guard(I.n)
    cands = set()
    for lam in I.gens:
        for s in pt.distinct_permutations(lam):
            for mu in J.gens:
                cands.add(pt.part_of(map(max, s, mu)))
    return SymmetricIdeal(I.n, tuple(pt.minimal_elements(cands)))


def multiply(I: SymmetricIdeal, J: SymmetricIdeal, fast: bool = True) -> SymmetricIdeal:
    _match(I, J)
    if I.is_zero or J.is_zero:
        return SymmetricIdeal.zero(I.n)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if fast and I.is_strongly_shifted and J.is_strongly_shifted:
        return sss_closure(
            tuple(x + y for x, y in zip(a, b))
            for a in I.borel_generators
            for b in J.borel_generators
        )
    _perm_guard(I.n)
    cands = set()
    for lam in I.gens:
        for s in pt.distinct_permutations(lam):
            for mu in J.gens:
                cands.add(pt.part_of(x + y for x, y in zip(s, mu)))
    return SymmetricIdeal(I.n, tuple(pt.minimal_elements(cands)))


def power(I: SymmetricIdeal, k: int, fast: bool = True) -> SymmetricIdeal:
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k == 0 or I.is_unit:
        return SymmetricIdeal.unit(I.n)
    if I.is_zero:
        return I
    if fast and I.is_principal_borel:
        (lam,) = I.borel_generators
        return sss_closure([tuple(k * x for x in lam)])
    out = I
    for _ in range(k - 1):
        out = multiply(out, I, fast=fast)
    return out


# -- saturation, radical, height, symbolic powers ----------------------------


def _require_sssi(I: SymmetricIdeal, what: str) -> None:
    if not I.is_strongly_shifted:
        raise NotStronglyShifted(f"{what} needs a strongly shifted ideal; use the oracle instead")


def saturate_veronese(I: SymmetricIdeal, c: int) -> SymmetricIdeal:
    """I : I_{n,c}^∞ for a strongly shifted I.

    Keep the c-1 smallest parts of every generator and flatten the rest to
    the last kept part.
    """
    if not 1 <= c <= I.n:
        raise ValueError(f"c={c} outside 1..{I.n}")
    if I.is_zero or I.is_unit:
        return I
    _require_sssi(I, "saturation by a squarefree Veronese ideal")
    if c == 1:
        return SymmetricIdeal.unit(I.n)
    n = I.n
    out = [lam[: c - 1] + (lam[c - 2],) * (n - c + 1) for lam in I.gens]
    return SymmetricIdeal(n, tuple(pt.minimal_elements(out)))


def height(I: SymmetricIdeal) -> int:
    if I.is_zero:
        raise ValueError("the zero ideal has height 0 and no radical formula")
    if I.is_unit:
        raise ValueError("the unit ideal has no height")
    return max(pt.min_idx(lam) for lam in I.gens)


def radical(I: SymmetricIdeal) -> SymmetricIdeal:
    if I.is_unit:
        return I
    return SymmetricIdeal.veronese(I.n, height(I))


def ass_heights(I: SymmetricIdeal) -> list:
    """Heights of associated primes of a strongly shifted ideal.

    I : I_{n,c}^∞ keeps exactly the primary components of height < c, so a
    height c occurs iff saturating at c+1 and at c give different ideals.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("need a nonzero proper ideal")
    _require_sssi(I, "associated heights")
    n = I.n
    sats = [saturate_veronese(I, c) for c in range(1, n + 1)] + [I]
    return [c for c in range(1, n + 1) if sats[c] != sats[c - 1]]


def symbolic_power(I: SymmetricIdeal, m: int, mode: str = "min") -> SymmetricIdeal:
    """Symbolic power of a strongly shifted ideal by one Veronese saturation.

    Every height up to the largest relevant one has all of its primes in the
    chosen prime set (by symmetry), so dropping the components above that
    height is a single saturation.
    """
    if m < 1:
        raise ValueError("symbolic exponent must be at least 1")
    _require_sssi(I, "compressed symbolic power")
    if mode == "min":
        top = height(I)
    elif mode == "ass":
        top = max(ass_heights(I))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    Im = power(I, m)
    if top >= I.n:
        return Im
    return saturate_veronese(Im, top + 1)


# -- bridges to and from the oracle --------------------------------------------


def expand(I: SymmetricIdeal) -> MonomialIdeal:
    _perm_guard(I.n)
    gens = set()
    for lam in I.gens:
        gens.update(pt.distinct_permutations(lam))
        if len(gens) > BUDGET.partitions:
            raise BudgetExceeded("orbit expansion", BUDGET.partitions)
    # partition generators are already minimal, and so are their orbits
    return MonomialIdeal(I.n, tuple(sorted(gens)))


def compress(M: MonomialIdeal) -> SymmetricIdeal:
    if not M.is_symmetric():
        raise ValueError("monomial ideal is not symmetric")
    return SymmetricIdeal(M.n, tuple(sorted(g for g in M.gens if list(g) == sorted(g))))


def symmetrize(J: MonomialIdeal) -> SymmetricIdeal:
    """Largest symmetric ideal inside a strongly stable J.

    A minimal generator of the intersection of all permuted copies of J is an
    lcm of permuted generators, so its parts never exceed the largest
    exponent occurring in J; searching that box is exhaustive.
    """
    if not is_strongly_stable(J):
        raise ValueError("symmetrize needs a strongly stable ideal")
    if J.is_zero:
        return SymmetricIdeal.zero(J.n)
    top = max(J.max_exponents())
    hits = [lam for lam in pt.partitions_in_box(J.n, top) if J.contains(lam)]
    return SymmetricIdeal(J.n, tuple(pt.minimal_elements(hits)))


def smallest_sstable(I: SymmetricIdeal) -> MonomialIdeal:
    return borel_closure(I.n, I.borel_generators)
