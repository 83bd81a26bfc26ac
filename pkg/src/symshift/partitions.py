"""Partitions with a fixed number of parts, listed smallest part first.

A partition here is a plain tuple of nonnegative ints in nondecreasing order,
e.g. ``(0, 1, 2)``. Exponent vectors are tuples too, just unsorted. Keeping
both as tuples means they hash, sort lexicographically and cost nothing to
build; :func:`as_partition` is the validating entry point for outside data.
"""

from __future__ import annotations

import warnings
from collections import deque
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, NamedTuple, Sequence

from ._config import BUDGET, BudgetExceeded

Partition = tuple  # nondecreasing tuple[int, ...]
Exponent = tuple  # tuple[int, ...]


class CrossDegreeWarning(UserWarning):
    """Lattice operation applied to partitions of different sizes."""


def as_partition(parts: Iterable[int], n: int | None = None) -> Partition:
    lam = tuple(parts)
    if n is not None and len(lam) != n:
        raise ValueError(f"expected {n} parts, got {len(lam)}")
    for i, p in enumerate(lam):
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValueError(f"part at index {i} is not an integer: {p!r}")
        if p < 0:
            raise ValueError(f"part at index {i} is negative: {p}")
        if i and p < lam[i - 1]:
            raise ValueError(
                f"parts must be nondecreasing: index {i} has {p} < {lam[i - 1]} at index {i - 1}"
            )
    return lam


def as_exponent(exps: Iterable[int], n: int | None = None) -> Exponent:
    e = tuple(exps)
    if n is not None and len(e) != n:
        raise ValueError(f"expected {n} entries, got {len(e)}")
    for i, p in enumerate(e):
        if isinstance(p, bool) or not isinstance(p, int) or p < 0:
            raise ValueError(f"entry at index {i} is not a nonnegative integer: {p!r}")
    return e


def part_of(e: Sequence[int]) -> Partition:
    return tuple(sorted(e))


def _same_n(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"ambient dimension mismatch: {len(a)} vs {len(b)}")


def suffix_sums(lam: Sequence[int]) -> tuple:
    """(Σ_1, ..., Σ_n) where Σ_k adds the parts from position k to the end."""
    return tuple(accumulate(reversed(lam)))[::-1]


def prefix_sums(lam: Sequence[int]) -> tuple:
    return tuple(accumulate(lam))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    _same_n(mu, lam)
    return all(a <= b for a, b in zip(suffix_sums(mu), suffix_sums(lam)))


def componentwise_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_elements(items: Iterable[Sequence[int]]) -> list:
    """Antichain of componentwise-minimal vectors, sorted lexicographically."""
    pool = sorted(set(map(tuple, items)), key=lambda v: (sum(v), v))
    kept: list = []
    for v in pool:
        if not any(componentwise_leq(k, v) for k in kept):
            kept.append(v)
    return sorted(kept)


def _warn_cross(lam, mu, op):
    if sum(lam) != sum(mu):
        warnings.warn(
            f"{op} of partitions of different sizes {sum(lam)} and {sum(mu)}",
            CrossDegreeWarning,
            stacklevel=3,
        )


def _meet_raw(lam, mu):
    # hat vector: suffix sums read from the last position backwards
    hat = [min(a, b) for a, b in zip(suffix_sums(lam)[::-1], suffix_sums(mu)[::-1])]
    n = len(hat)
    out = [0] * n
    prev = 0
    for k in range(n):
        out[n - 1 - k] = hat[k] - prev
        prev = hat[k]
    return tuple(out)


def meet(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    _same_n(lam, mu)
    _warn_cross(lam, mu, "meet")
    return _meet_raw(lam, mu)


def _conjugate(lam, length=None):
    """Transpose, allowing the zero partition; left-padded to ``length``."""
    top = lam[-1] if lam else 0
    cols = tuple(sum(1 for p in lam if p >= top - i + 1) for i in range(1, top + 1))
    if length is not None:
        if length < top:
            raise ValueError("padding length shorter than transpose")
        cols = (0,) * (length - top) + cols
    return cols


def transpose(lam: Sequence[int]) -> Partition:
    if not any(lam):
        raise ValueError("the zero partition has no transpose")
    return _conjugate(tuple(lam))


def join(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    _same_n(lam, mu)
    _warn_cross(lam, mu, "join")
    n = len(lam)
    width = max(lam[-1] if n else 0, mu[-1] if n else 0)
    if width == 0:
        return (0,) * n
    low = _meet_raw(_conjugate(tuple(lam), width), _conjugate(tuple(mu), width))
    return _conjugate(low, n)


def delta(lam: Sequence[int], i: int = 1) -> tuple:
    n = len(lam)
    if not 0 <= i <= max(n - 1, 0):
        raise ValueError(f"difference order {i} out of range 0..{n - 1}")
    v = list(lam)
    for _ in range(i):
        v = [b - a for a, b in zip(v, v[1:])]
    return tuple(v)


class Stats(NamedTuple):
    min_idx: int | None
    max_idx: int | None
    med: int
    degree: int


def stats(lam: Sequence[int]) -> Stats:
    """1-based first/last positive index, count of parts below the top, size."""
    pos = [i + 1 for i, p in enumerate(lam) if p > 0]
    top = lam[-1] if lam else 0
    return Stats(
        pos[0] if pos else None,
        pos[-1] if pos else None,
        sum(1 for p in lam if p < top),
        sum(lam),
    )


def min_idx(lam: Sequence[int]) -> int:
    s = stats(lam).min_idx
    if s is None:
        raise ValueError("zero partition has no positive part")
    return s


def med(lam: Sequence[int]) -> int:
    return stats(lam).med


@lru_cache(maxsize=4096)
def _dominated(lam: tuple, cap: int) -> tuple:
    seen = {lam}
    queue = deque([lam])
    n = len(lam)
    while queue:
        cur = queue.popleft()
        for i in range(n):
            for j in range(i + 1, n):
                if cur[i] < cur[j] and cur[j] - cur[i] >= 2:
                    nxt = list(cur)
                    nxt[i] += 1
                    nxt[j] -= 1
                    nxt = tuple(sorted(nxt))
                    if nxt not in seen:
                        seen.add(nxt)
                        if len(seen) > cap:
                            raise BudgetExceeded("dominated partitions", cap)
                        queue.append(nxt)
    return tuple(sorted(seen))


def enumerate_dominated(lam: Sequence[int], budget: int | None = None) -> list:
    """All partitions of |λ| with the same number of parts lying below λ.

    Closure under single Borel moves (one unit from a larger part to a smaller
    one); a difference of 1 just swaps the two parts, so it is skipped.
    """
    cap = BUDGET.partitions if budget is None else budget
    return list(_dominated(tuple(lam), cap))


def partitions_of(d: int, n: int, max_part: int | None = None) -> list:
    """Every nondecreasing n-tuple of nonnegative ints summing to d."""
    top = d if max_part is None else min(d, max_part)
    out = []

    def rec(prefix, remaining, slots, lo):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # the remaining slots are all >= lo, so need lo * slots <= remaining
        hi = min(top, remaining // slots) if slots > 1 else remaining
        if slots == 1:
            if lo <= remaining <= top:
                out.append(tuple(prefix) + (remaining,))
            return
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(prefix, remaining - v, slots - 1, v)
            prefix.pop()

    if n == 0:
        return [()] if d == 0 else []
    rec([], d, n, 0)
    return sorted(out)


def partitions_in_box(n: int, max_part: int) -> list:
    """All partitions with n parts each at most ``max_part``."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(lo, max_part + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], 0)
    return out


def distinct_permutations(e: Sequence[int]) -> list:
    """Distinct rearrangements of a multiset, in lexicographic order."""
    items = sorted(e)
    n = len(items)
    out = []
    used = [False] * n
    cur: list = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        prev = None
        for i in range(n):
            if used[i] or items[i] == prev:
                continue
            prev = items[i]
            used[i] = True
            cur.append(items[i])
            rec()
            cur.pop()
            used[i] = False

    rec()
    return out


def orbit_size(lam: Sequence[int]) -> int:
    from math import factorial
    from collections import Counter

    size = factorial(len(lam))
    for mult in Counter(lam).values():
        size //= factorial(mult)
    return size
