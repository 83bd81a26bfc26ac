"""Brute-force monomial ideals: the slow but independent reference engine.

Nothing here knows about partitions or symmetry. An ideal is a frozen set of
minimal exponent vectors, and every operation is the textbook one (lcm for
intersections, sums of exponents for products, slicing by a variable for
irreducible decompositions). The compressed code in :mod:`symshift.symideal`
is tested against this module, so it deliberately avoids sharing shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations, combinations_with_replacement, permutations
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from ._config import BUDGET, BudgetExceeded, SymshiftError

_CHUNK = 1 << 18


def _dominated_rows(cands: np.ndarray, kept: np.ndarray) -> np.ndarray:
    """Mask of candidate rows divisible by at least one kept row."""
    if kept.shape[0] == 0 or cands.shape[0] == 0:
        return np.zeros(cands.shape[0], dtype=bool)
    out = np.zeros(cands.shape[0], dtype=bool)
    step = max(1, _CHUNK // max(1, kept.shape[0] * kept.shape[1]))
    for lo in range(0, cands.shape[0], step):
        block = cands[lo : lo + step]
        hit = np.all(kept[None, :, :] <= block[:, None, :], axis=2).any(axis=1)
        out[lo : lo + step] = hit
    return out


def minimalize(gens: Iterable[Sequence[int]]) -> tuple:
    """Minimal elements under divisibility, sorted lexicographically."""
    uniq = sorted(set(map(tuple, gens)))
    if len(uniq) <= 1:
        return tuple(uniq)
    by_deg: dict = {}
    for g in uniq:
        by_deg.setdefault(sum(g), []).append(g)
    n = len(uniq[0])
    kept = np.zeros((0, n), dtype=np.int64)
    result = []
    for d in sorted(by_deg):
        group = by_deg[d]
        arr = np.array(group, dtype=np.int64)
        # distinct monomials of one degree never divide each other
        mask = ~_dominated_rows(arr, kept)
        survivors = [g for g, ok in zip(group, mask) if ok]
        if survivors:
            result.extend(survivors)
            kept = np.vstack([kept, arr[mask]])
    return tuple(sorted(result))


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple  # minimal exponent vectors, lexicographically sorted

    @classmethod
    def of(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(int(x) for x in g) for g in gens]
        for idx, g in enumerate(gens):
            if len(g) != n:
                raise ValueError(f"generator {idx} has {len(g)} entries, expected {n}")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {idx} has a negative exponent")
        return cls(n, minimalize(gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls.of(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.gens

    def contains(self, e: Sequence[int]) -> bool:
        e = tuple(e)
        if len(e) != self.n:
            raise ValueError(f"dimension mismatch: {len(e)} vs {self.n}")
        return any(_divides(g, e) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.n, minimalize(self.gens + other.gens))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.n,
            minimalize(tuple(map(max, a, b)) for a in self.gens for b in other.gens),
        )

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.n,
            minimalize(tuple(x + y for x, y in zip(a, b)) for a in self.gens for b in other.gens),
        )

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative power")
        out = MonomialIdeal.unit(self.n)
        for _ in range(k):
            out = out * self
        return out

    def colon_mono(self, m: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(
            self.n, minimalize(tuple(max(x - y, 0) for x, y in zip(g, m)) for g in self.gens)
        )

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if other.is_zero:
            return MonomialIdeal.unit(self.n)
        parts = [self.colon_mono(g) for g in other.gens]
        return reduce(MonomialIdeal.intersect, parts)

    def saturate(self, other: "MonomialIdeal") -> "MonomialIdeal":
        cur = self
        while True:
            nxt = cur.colon(other)
            if nxt == cur:
                return cur
            cur = nxt

    def localize(self, support: Iterable[int]) -> "MonomialIdeal":
        """Contraction of the extension to R_P, P generated by ``support``.

        For monomial ideals this just forgets the variables outside P.
        ``support`` uses 1-based variable indices.
        """
        keep = {i - 1 for i in support}
        return MonomialIdeal(
            self.n,
            minimalize(tuple(x if i in keep else 0 for i, x in enumerate(g)) for g in self.gens),
        )

    def is_symmetric(self) -> bool:
        gs = set(self.gens)
        return all(tuple(p) in gs for g in self.gens for p in set(permutations(g)))

    def max_exponents(self) -> tuple:
        if not self.gens:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.gens))

    def degrees(self) -> list:
        return sorted({sum(g) for g in self.gens})


def prime(n: int, support: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal.of(n, [tuple(int(j == i - 1) for j in range(n)) for i in support])


def monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


# -- strongly stable ideals -------------------------------------------------


def is_strongly_stable(J: MonomialIdeal) -> bool:
    for g in J.gens:
        for j in range(J.n):
            if g[j] == 0:
                continue
            for i in range(j):
                h = list(g)
                h[i] += 1
                h[j] -= 1
                if not J.contains(h):
                    return False
    return True


def borel_closure(n: int, monos: Iterable[Sequence[int]]) -> MonomialIdeal:
    seen = set(map(tuple, monos))
    stack = list(seen)
    while stack:
        g = stack.pop()
        for j in range(n):
            if g[j] == 0:
                continue
            for i in range(j):
                h = list(g)
                h[i] += 1
                h[j] -= 1
                h = tuple(h)
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
    return MonomialIdeal.of(n, seen)


# -- irreducible decomposition and associated primes -----------------------


def _redundant_free(comps: Iterable[tuple]) -> list:
    """Drop components containing another one. Zero entry = variable absent."""
    comps = sorted(set(comps))

    def inside(small, big):  # small ⊆ big
        return all(b != 0 and b <= s for s, b in zip(small, big) if s != 0)

    keep = []
    for q in comps:
        if any(p != q and inside(p, q) for p in comps):
            continue
        keep.append(q)
    return keep


@lru_cache(maxsize=200_000)
def _irreducibles(gens: tuple, v: int, n: int) -> tuple:
    if not gens:
        return ((0,) * n,)  # the zero ideal, as an empty component
    if (0,) * n in gens:
        return ()
    if v == n:  # pragma: no cover - every variable has been sliced away
        raise AssertionError("unsliced generators left")
    levels = sorted({g[v] for g in gens})
    out = []
    if levels[0] > 0:
        q = [0] * n
        q[v] = levels[0]
        out.append(tuple(q))
    for s, e in enumerate(levels):
        sliced = minimalize(g[:v] + (0,) + g[v + 1 :] for g in gens if g[v] <= e)
        nxt = levels[s + 1] if s + 1 < len(levels) else 0
        for q in _irreducibles(sliced, v + 1, n):
            q = list(q)
            q[v] = nxt
            out.append(tuple(q))
    return tuple(_redundant_free(out))


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components as exponent tuples.

    Entry i is the exponent of the pure power x_i^a in the component, or 0 if
    x_i does not occur. (x^2, xy) gives [(1, 0), (2, 1)], i.e. (x) ∩ (x^2, y).
    """
    if I.is_zero or I.is_unit:
        raise ValueError("decomposition needs a nonzero proper ideal")
    return list(_irreducibles(I.gens, 0, I.n))


def component_ideal(n: int, comp: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal.of(
        n, [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(comp) if a]
    )


def ass(I: MonomialIdeal) -> list:
    """Associated primes, each as a sorted tuple of 1-based variable indices."""
    return sorted(
        {tuple(i + 1 for i, a in enumerate(q) if a) for q in irreducible_decomposition(I)},
        key=lambda s: (len(s), s),
    )


def minimal_primes(I: MonomialIdeal) -> list:
    ps = ass(I)
    return [p for p in ps if not any(set(q) < set(p) for q in ps)]


def height(I: MonomialIdeal) -> int:
    return min(len(p) for p in ass(I))


def is_associated_by_witness(I: MonomialIdeal, support: Sequence[int]) -> bool:
    """Search for a monomial v with I : v equal to the prime on ``support``.

    The search box is bounded by the componentwise maximum exponent.
    """
    target = prime(I.n, support)
    box = I.max_exponents()
    stack = [()]
    while stack:
        cur = stack.pop()
        if len(cur) == I.n:
            if not I.contains(cur) and I.colon_mono(cur) == target:
                return True
            continue
        for a in range(box[len(cur)] + 1):
            stack.append(cur + (a,))
    return False


# -- Hilbert series numerator ----------------------------------------------


def _padd(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _pshift(p, k):
    return [0] * k + list(p)


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _numerator(gens: tuple, memo: dict) -> list:
    if gens in memo:
        return memo[gens]
    n = len(gens[0]) if gens else 0
    if not gens:
        res = [1]
    elif (0,) * n in gens:
        res = [0]
    else:
        counts = [0] * n
        for g in gens:
            for i, a in enumerate(g):
                if a:
                    counts[i] += 1
        if max(counts) <= 1:
            res = [1]
            for g in gens:
                res = _pmul(res, [1] + [0] * (sum(g) - 1) + [-1])
        else:
            v = max(range(n), key=lambda i: (counts[i], -i))
            exps = sorted(g[v] for g in gens if g[v] and sum(g) != g[v])
            if not exps:
                exps = sorted(g[v] for g in gens if g[v])
            e = exps[(len(exps) - 1) // 2]
            piv = tuple(e if i == v else 0 for i in range(n))
            plus = minimalize(gens + (piv,))
            col = minimalize(tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens)
            res = _padd(_numerator(plus, memo), _pshift(_numerator(col, memo), e))
    res = _trim(res)
    memo[gens] = res
    return res


def hilbert_numerator(I: MonomialIdeal) -> list:
    """Coefficients of K(t) with HS(R/I) = K(t) / (1-t)^n, lowest degree first."""
    return _numerator(I.gens, {})


def hilbert_function(I: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials outside I (slow direct count)."""
    return sum(1 for m in monomials_of_degree(I.n, d) if not I.contains(m))


# -- symbolic powers --------------------------------------------------------


def symbolic_power(I: MonomialIdeal, m: int, mode: str = "min") -> MonomialIdeal:
    """Intersection of the localized-and-contracted m-th power over a prime set.

    ``mode="min"`` intersects over the minimal primes, ``"ass"`` over all
    associated primes of I.
    """
    if m < 1:
        raise ValueError("symbolic exponent must be at least 1")
    if I.is_zero or I.is_unit:
        raise ValueError("need a nonzero proper ideal")
    if mode == "min":
        primes = minimal_primes(I)
    elif mode == "ass":
        primes = ass(I)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    Im = I.power(m)
    return reduce(MonomialIdeal.intersect, (Im.localize(p) for p in primes))


def symbolic_power_by_saturation(I: MonomialIdeal, m: int, mode: str = "min", kmax: int = 3):
    """Same symbolic power via saturating I^m by the unwanted primes.

    The unwanted primes come from Ass of I^k for k up to ``kmax``, which is
    only an approximation of the union over all powers; the horizon is
    returned alongside the ideal so callers can surface it.
    """
    stable: set = set()
    for k in range(1, kmax + 1):
        stable.update(ass(I.power(k)))
    base = ass(I)
    if mode == "min":
        keep = set(minimal_primes(I))
        drop = [p for p in stable if p not in keep]
    elif mode == "ass":
        drop = [p for p in stable if not any(set(p) <= set(q) for q in base)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    Im = I.power(m)
    if not drop:
        return Im, kmax
    J = reduce(MonomialIdeal.intersect, (prime(I.n, p) for p in drop))
    return Im.saturate(J), kmax


# -- integral closure -------------------------------------------------------


class LPTooLarge(SymshiftError):
    pass


def _phase_one(cols: list, rhs: list):
    """Exact feasibility of {A w + s = rhs, sum(w) = 1, w, s >= 0}.

    ``cols`` are the columns of A. Bland's rule, Fractions throughout.
    Returns the w vector or None.
    """
    m = len(cols)
    n = len(rhs)
    width = m + n + 1
    rows = []
    for i in range(n):
        r = [Fraction(c[i]) for c in cols] + [Fraction(int(j == i)) for j in range(n)] + [Fraction(0)]
        rows.append(r + [Fraction(rhs[i])])
    rows.append([Fraction(1)] * m + [Fraction(0)] * n + [Fraction(1), Fraction(1)])
    basis = [m + i for i in range(n)] + [m + n]
    # objective: minimise the artificial; reduced costs = -(artificial row)
    obj = [-x for x in rows[n][:width]] + [-rows[n][width]]
    obj[m + n] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # pragma: no cover - phase one is bounded below
            break
        piv = best[1]
        pr = rows[piv]
        f = pr[enter]
        pr = [x / f for x in pr]
        rows[piv] = pr
        for i, r in enumerate(rows):
            if i != piv and r[enter] != 0:
                c = r[enter]
                rows[i] = [a - c * b for a, b in zip(r, pr)]
        c = obj[enter]
        obj = [a - c * b for a, b in zip(obj, pr)]
        basis[piv] = enter
    if obj[width] != 0:
        return None
    w = [Fraction(0)] * m
    for i, b in enumerate(basis):
        if b < m:
            w[b] = rows[i][width]
    return w


def newton_certificate(I: MonomialIdeal, a: Sequence[int]):
    """Convex weights on generators with weighted sum ≤ a, or None."""
    if I.is_zero:
        raise ValueError("zero ideal")
    a = tuple(a)
    if I.contains(a):
        w = [Fraction(0)] * len(I.gens)
        w[next(k for k, g in enumerate(I.gens) if _divides(g, a))] = Fraction(1)
        return w
    # generators exceeding a in total degree can still matter, so keep all
    if len(I.gens) + I.n > BUDGET.lp_columns:
        raise LPTooLarge(f"LP with {len(I.gens)} columns exceeds cap {BUDGET.lp_columns}")
    return _phase_one(list(I.gens), list(a))


def integral_closure_contains(I: MonomialIdeal, a: Sequence[int]) -> bool:
    return newton_certificate(I, a) is not None


def power_witness(I: MonomialIdeal, a: Sequence[int], w) -> tuple:
    """Turn LP weights into an explicit s with x^{s a} ∈ I^s.

    Returns (s, multiset of generator indices) after checking the product.
    """
    s = lcm(*(x.denominator for x in w)) if w else 1
    mult = [int(x * s) for x in w]
    total = [0] * I.n
    picks = []
    for k, c in enumerate(mult):
        for i in range(I.n):
            total[i] += c * I.gens[k][i]
        picks.extend([k] * c)
    if len(picks) != s or any(t > s * x for t, x in zip(total, a)):
        raise AssertionError("LP certificate does not give a power witness")
    return s, tuple(picks)


def power_search_contains(I: MonomialIdeal, a: Sequence[int], s_max: int | None = None):
    """Smallest s ≤ s_max with x^{s a} ∈ I^s, found by direct search, else None."""
    if s_max is None:
        s_max = I.n * max((sum(g) for g in I.gens), default=1)
    a = tuple(a)
    for s in range(1, s_max + 1):
        cap = tuple(s * x for x in a)
        layer = minimalize(g for g in I.gens if _divides(g, cap))
        for _ in range(s - 1):
            if not layer:
                break
            layer = minimalize(
                t
                for p in layer
                for g in I.gens
                for t in [tuple(x + y for x, y in zip(p, g))]
                if _divides(t, cap)
            )
        if layer:
            return s
    return None


def is_integrally_closed_up_to(I: MonomialIdeal, dmax: int) -> bool:
    return not closure_excess(I, dmax, first_only=True)


def closure_excess(I: MonomialIdeal, dmax: int, first_only: bool = False) -> list:
    """Monomials of degree ≤ dmax in the integral closure but not in I."""
    out = []
    for d in range(dmax + 1):
        for m in monomials_of_degree(I.n, d):
            if not I.contains(m) and integral_closure_contains(I, m):
                out.append(m)
                if first_only:
                    return out
    return out


def is_normal_up_to(I: MonomialIdeal, kmax: int, dmax: int) -> bool:
    """Check I^k integrally closed in degrees ≤ dmax for k ≤ kmax."""
    return all(is_integrally_closed_up_to(I.power(k), dmax) for k in range(1, kmax + 1))


def expand_check_budget(count: int) -> None:
    if count > BUDGET.partitions:
        raise BudgetExceeded("expanded generators", BUDGET.partitions)
