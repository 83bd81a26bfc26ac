"""Randomized comparison of the compressed routes against the expanded oracle."""

from __future__ import annotations

import random
from functools import reduce

from . import oracle as O
from . import partitions as pt
from . import symideal as si

OPERATIONS = ("add", "intersect", "multiply", "power", "saturate", "radical", "ass_heights", "symbolic_min", "symbolic_ass", "intersect_general", "multiply_general")


def random_sssi(rng: random.Random, n: int, dmax: int, count: int = 2) -> si.SymmetricIdeal:
    B = []
    for _ in range(rng.randint(1, count)):
        B.append(rng.choice(pt.partitions_of(rng.randint(1, dmax), n)))
    return si.sss_closure(B)


def random_shifted(rng: random.Random, n: int, dmax: int, count: int = 2) -> si.SymmetricIdeal:
    # low degrees are mostly dominance chains, which only give strongly shifted ideals
    lo = max(1, dmax // 2)
    B = [rng.choice(pt.partitions_of(rng.randint(lo, dmax), n)) for _ in range(rng.randint(1, count))]
    return si.ss_closure(B)


def random_symmetric(rng: random.Random, n: int, dmax: int, count: int = 3) -> si.SymmetricIdeal:
    ps = [rng.choice(pt.partitions_of(rng.randint(1, dmax), n)) for _ in range(rng.randint(1, count))]
    return si.SymmetricIdeal.from_partitions(n, ps)


def compare_case(rng: random.Random, nmax: int = 5, dmax: int = 8) -> list:
    """One random case: [(operation, agrees, detail)] over every operation."""
    n = rng.randint(2, nmax)
    I = random_sssi(rng, n, dmax)
    J = random_sssi(rng, n, max(1, dmax - 2))
    EI, EJ = si.expand(I), si.expand(J)
    c = rng.randint(1, n)
    A = random_symmetric(rng, n, min(dmax, 5))
    B = random_symmetric(rng, n, min(dmax, 5))
    rad = reduce(O.MonomialIdeal.intersect, [O.prime(n, p) for p in O.minimal_primes(EI)])
    pairs = {
        "add": lambda: (si.expand(si.add(I, J)), EI + EJ),
        "intersect": lambda: (si.expand(si.intersect(I, J)), EI.intersect(EJ)),
        "multiply": lambda: (si.expand(si.multiply(I, J)), EI * EJ),
        "power": lambda: (si.expand(si.power(I, 2)), EI.power(2)),
        "saturate": lambda: (
            si.expand(si.saturate_veronese(I, c)),
            EI.saturate(si.expand(si.SymmetricIdeal.veronese(n, c))),
        ),
        "radical": lambda: (si.expand(si.radical(I)), rad),
        "ass_heights": lambda: (si.ass_heights(I), sorted({len(p) for p in O.ass(EI)})),
        "symbolic_min": lambda: (si.expand(si.symbolic_power(I, 2, "min")), O.symbolic_power(EI, 2, "min")),
        "symbolic_ass": lambda: (si.expand(si.symbolic_power(I, 2, "ass")), O.symbolic_power(EI, 2, "ass")),
        "intersect_general": lambda: (si.expand(si.intersect(A, B)), si.expand(A).intersect(si.expand(B))),
        "multiply_general": lambda: (si.expand(si.multiply(A, B)), si.expand(A) * si.expand(B)),
    }
    out = []
    for name in OPERATIONS:
        got, want = pairs[name]()
        detail = None if got == want else {"I": str(I), "J": str(J), "c": c, "A": str(A), "B": str(B)}
        out.append((name, got == want, detail))
    return out


def run(cases: int, seed: int = 0, nmax: int = 5, dmax: int = 8) -> dict:
    rng = random.Random(seed)
    tally = {name: [0, 0] for name in OPERATIONS}
    failures = []
    for idx in range(cases):
        for name, ok, detail in compare_case(rng, nmax, dmax):
            tally[name][0 if ok else 1] += 1
            if not ok:
                failures.append({"case": idx, "operation": name, **detail})
    return {
        "cases": cases,
        "seed": seed,
        "operations": {k: {"agree": a, "disagree": b} for k, (a, b) in tally.items()},
        "failures": failures,
    }
