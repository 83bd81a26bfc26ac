"""Primary decompositions of principal Borel ideals and their powers.

Every power of Sss({λ}) is an intersection of symbolic powers of squarefree
Veronese ideals, one per height j, with exponent k times the j-th prefix sum
of λ. Those symbolic powers are kept symbolic as ``VeroneseSymbolic(n, j, m)``
and only expanded inside verification helpers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from . import partitions as pt
from . import symideal as si
from .oracle import MonomialIdeal, ass
from ._config import VerificationError


@dataclass(frozen=True)
class VeroneseSymbolic:
    n: int
    j: int
    m: int

    def __post_init__(self):
        if not 1 <= self.j <= self.n:
            raise ValueError(f"height {self.j} outside 1..{self.n}")
        if self.m < 0:
            raise ValueError("symbolic exponent must be nonnegative")

    def contains(self, e: Sequence[int]) -> bool:
        return sum(pt.part_of(e)[: self.j]) >= self.m

    def generators(self) -> list:
        if self.m == 0:
            return [(0,) * self.n]
        out = [mu + (mu[-1],) * (self.n - self.j) for mu in pt.partitions_of(self.m, self.j)]
        return pt.minimal_elements(out)

    def ideal(self) -> si.SymmetricIdeal:
        return si.SymmetricIdeal(self.n, tuple(self.generators()))


def veronese_symbolic_contains(V: VeroneseSymbolic, e) -> bool:
    return V.contains(e)


def veronese_symbolic_generators(V: VeroneseSymbolic) -> list:
    return V.generators()


@dataclass(frozen=True)
class Component:
    j: int
    m: int
    redundant: bool
    rule: str


@dataclass(frozen=True)
class PrimaryDecomposition:
    lam: tuple
    k: int
    components: tuple = field(default_factory=tuple)

    @property
    def n(self) -> int:
        return len(self.lam)

    def kept(self) -> list:
        return [(c.j, c.m) for c in self.components if not c.redundant]

    def heights(self) -> list:
        return [c.j for c in self.components if not c.redundant]

    def ideal(self, include_redundant: bool = False) -> si.SymmetricIdeal:
        parts = [
            VeroneseSymbolic(self.n, c.j, c.m).ideal()
            for c in self.components
            if include_redundant or not c.redundant
        ]
        return reduce(si.intersect, parts, si.SymmetricIdeal.unit(self.n))

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "k": self.k,
            "components": [
                {"j": c.j, "m": c.m, "redundant": c.redundant, "rule": c.rule}
                for c in self.components
            ],
        }


def _check_lam(lam) -> tuple:
    lam = pt.as_partition(lam)
    if not any(lam):
        raise ValueError("need a nonzero partition")
    return lam


def principal_decomposition(lam: Sequence[int], k: int = 1) -> PrimaryDecomposition:
    """All n components, none judged; exponents are k times prefix sums."""
    lam = _check_lam(lam)
    if k < 1:
        raise ValueError("k must be at least 1")
    comps = tuple(
        Component(j, k * a, False, "all") for j, a in enumerate(pt.prefix_sums(lam), start=1)
    )
    return PrimaryDecomposition(lam, k, comps)


def _needed_by_search(targets: Sequence[int], j: int) -> bool:
    """Is there a partition meeting every prefix target except the j-th?

    Parts after position j can be made as large as we like, so only the first
    j parts matter: look for a nondecreasing (p_1..p_j) with p_1+..+p_i ≥
    targets[i-1] for i < j but p_1+..+p_j < targets[j-1].
    """
    limit = targets[j - 1] - 1
    if limit < 0:
        return False

    def rec(i, prev, total):
        if i == j:
            return True
        for v in range(prev, limit - total + 1):
            # the remaining j-i-1 parts are at least v each
            if total + v * (j - i) > limit:
                break
            t = total + v
            if i < j - 1 and t < targets[i]:
                continue
            if rec(i + 1, v, t):
                return True
        return False

    return rec(0, 0, 0)


def _witness_mu(lam, k, j, q):
    """The (q+1, ..., q+1, N, ..., N) partition from the redundancy argument."""
    n = len(lam)
    total = k * sum(lam)
    big = max(q + 1, total)
    return (q + 1,) * j + (big,) * (n - j)


def irredundant_components(lam: Sequence[int], k: int = 1) -> PrimaryDecomposition:
    lam = _check_lam(lam)
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(lam)
    jp = pt.min_idx(lam)
    pre = pt.prefix_sums(lam)
    targets = [k * a for a in pre]
    comps = []
    for j in range(1, n + 1):
        m = targets[j - 1]
        lj = lam[j - 1]
        if j < jp:
            comps.append(Component(j, m, True, "below-height"))
        elif j == jp:
            comps.append(Component(j, m, False, "height"))
        elif lam[j - 2] < lj:
            comps.append(Component(j, m, False, "jump"))
        elif lam[0] == lj:
            comps.append(Component(j, m, True, "flat"))
        else:
            # lam[j-2] == lj > lam[0], j > jp
            q, r = divmod(k * pre[j - 2], j - 1)
            if k > j * (j - 1) or k * lj > q + j - r:
                comps.append(Component(j, m, False, "threshold"))
                continue
            mu = _witness_mu(lam, k, j, q)
            others_ok = all(sum(mu[:i]) >= targets[i - 1] for i in range(1, n + 1) if i != j)
            if others_ok and sum(mu[:j]) < m:
                comps.append(Component(j, m, False, "witness"))
                continue
            needed = _needed_by_search(targets, j)
            comps.append(Component(j, m, not needed, "search"))
    return PrimaryDecomposition(lam, k, tuple(comps))


def oracle_heights(lam: Sequence[int], k: int = 1) -> list:
    """Heights of associated primes of expand(Sss({kλ})) from the oracle."""
    I = si.sss_closure([tuple(k * x for x in lam)])
    return sorted({len(p) for p in ass(si.expand(I))})


def verify_decomposition(dec: PrimaryDecomposition, oracle: bool = True) -> dict:
    """Independent checks of one decomposition; each entry is a bool.

    ``equal`` compares the kept intersection with Sss({kλ}) on the compressed
    side; ``oracle_equal`` redoes it with expanded ideals; ``oracle_heights``
    compares kept heights with the oracle's associated primes.
    """
    n = dec.n
    target = si.sss_closure([tuple(dec.k * x for x in dec.lam)])
    kept = dec.ideal()
    out = {"equal": kept == target, "all_equal": dec.ideal(include_redundant=True) == target}
    if oracle:
        parts = [
            si.expand(VeroneseSymbolic(n, j, m).ideal()) for j, m in dec.kept()
        ]
        inter = reduce(MonomialIdeal.intersect, parts)
        E = si.expand(target)
        out["oracle_equal"] = inter == E
        out["oracle_heights"] = sorted({len(p) for p in ass(E)}) == sorted(dec.heights())
    return out


def stable_ass(lam: Sequence[int]) -> dict:
    lam = _check_lam(lam)
    n = len(lam)
    jp = pt.min_idx(lam)
    if jp > 1:
        heights = list(range(jp, n + 1))
    else:
        heights = [1] + [j for j in range(2, n + 1) if lam[j - 1] != lam[0]]
    repeats_above_first = any(
        lam[i] == lam[i - 1] and lam[i] != lam[0] for i in range(1, n)
    )
    constant = len(set(lam)) == 1
    if constant or not repeats_above_first:
        return {
            "heights": heights,
            "certified": True,
            "astab": 1,
            "dstab": 1,
            "astab_bound": 1,
            "dstab_bound": 1,
            "powers_equal_symbolic": True,
        }
    s = max(j for j in range(2, n + 1) if lam[0] < lam[j - 2] == lam[j - 1])
    bound = min(n - 1, s * (s - 1) + 1)
    return {
        "heights": heights,
        "certified": False,
        "s": s,
        "astab_bound": bound,
        "dstab_bound": bound,
    }


def containment_check(lam: Sequence[int], m: int, k: int) -> dict:
    """Is the m-th Min-symbolic power of Sss({λ}) inside its k-th power?"""
    lam = _check_lam(lam)
    if m < 1 or k < 1:
        raise ValueError("m and k must be at least 1")
    n = len(lam)
    c = pt.min_idx(lam)
    d = sum(lam)
    sufficient = m * lam[c - 1] >= d * k
    klam = tuple(k * x for x in lam)
    gens = VeroneseSymbolic(n, c, lam[c - 1] * m).generators()
    exact = all(si.principal_membership(klam, g) for g in gens)
    if sufficient and not exact:
        raise VerificationError(f"ratio test passed but containment fails for {lam}, m={m}, k={k}")
    return {"sufficient": sufficient, "exact": exact}


def _ass_heights_oracle(I: si.SymmetricIdeal) -> list:
    return sorted({len(p) for p in ass(si.expand(I))})


def p_adically_closed(I: si.SymmetricIdeal, heights: Sequence[int] | None = None) -> dict:
    """Compare I with the intersection of Veronese symbolic powers at its own valuations.

    The valuation at height j is the least sum of the j smallest parts over
    the generators. Heights default to those of the oracle's associated
    primes of the expanded ideal.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("need a nonzero proper ideal")
    n = I.n
    if heights is None:
        heights = _ass_heights_oracle(I)
    cert = [(j, min(sum(lam[:j]) for lam in I.gens)) for j in heights]
    hull = reduce(
        si.intersect,
        (VeroneseSymbolic(n, j, v).ideal() for j, v in cert),
        si.SymmetricIdeal.unit(n),
    )
    forward = all(hull.contains(g) for g in I.gens)
    backward = all(I.contains(g) for g in hull.gens)
    return {"verdict": forward and backward, "certificate": cert}
