"""Exchange properties of symmetric ideals and the shapes that allow them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import comb
from typing import Sequence

from . import partitions as pt
from . import symideal as si
from ._config import NotEquigenerated, VerificationError
from .oracle import MonomialIdeal, prime


@dataclass(frozen=True)
class ExchangeReport:
    polymatroidal: bool
    witness: tuple | None = None  # (u, v, i) with i 1-based
    symmetric_exchange_pairs: tuple = field(default_factory=tuple)


def _shift(u, plus, minus):
    v = list(u)
    v[plus] += 1
    v[minus] -= 1
    return tuple(v)


def _equi_gens(I: si.SymmetricIdeal) -> list:
    if not I.is_equigenerated:
        raise NotEquigenerated("exchange checks need an equigenerated ideal")
    if I.is_zero:
        raise ValueError("zero ideal")
    return list(si.expand(I).gens)


def is_polymatroidal(I: si.SymmetricIdeal, record_pairs: bool = True) -> ExchangeReport:
    """Exchange property over all ordered pairs of expanded generators.

    The scan runs in lexicographic order of (u, v, i), so the first failure is
    the least one. For each successful exchange a symmetric j is preferred,
    and those are the ones recorded.
    """
    gens = _equi_gens(I)
    G = set(gens)
    n = I.n
    pairs = []
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                choices = [
                    j for j in range(n) if u[j] < v[j] and _shift(u, j, i) in G
                ]
                if not choices:
                    return ExchangeReport(False, (u, v, i + 1), tuple(pairs))
                if record_pairs:
                    sym = [j for j in choices if _shift(v, i, j) in G]
                    if sym:
                        j = sym[0]
                        pairs.append((u, v, i + 1, j + 1, _shift(u, j, i), _shift(v, i, j)))
    return ExchangeReport(True, None, tuple(pairs))


def verify_thmC(I: si.SymmetricIdeal) -> bool:
    """Polymatroidal iff strongly shifted with a single Borel generator."""
    poly = is_polymatroidal(I, record_pairs=False).polymatroidal
    principal = I.is_strongly_shifted and len(I.borel_generators) == 1
    if poly != principal:
        raise VerificationError(
            f"exchange property ({poly}) and principal Borel ({principal}) disagree for {I}"
        )
    return poly


def _blocks(lam):
    out = []
    for p in lam:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return out


def classify_sep(lam: Sequence[int]) -> dict:
    lam = pt.as_partition(lam)
    if not any(lam):
        raise ValueError("need a nonzero partition")
    blocks = _blocks(lam)
    if len(blocks) == 1:
        kind = "constant"
    elif len(blocks) == 2:
        kind = "two-block"
    elif len(blocks) == 3 and blocks[1][1] == 1:
        kind = "pinch"
    else:
        kind = "none"
    return {"has_sep": kind != "none", "type": kind}


def has_sep_bruteforce(I: si.SymmetricIdeal) -> bool:
    gens = _equi_gens(I)
    G = set(gens)
    n = I.n
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                for j in range(n):
                    if u[j] < v[j] and _shift(u, j, i) not in G:
                        return False
    return True


def transversal_classify(lam: Sequence[int]) -> dict:
    """Write λ_i = Σ_j C(i-1, j-1) a_j; transversal iff every a_j ≥ 0.

    Positive a_c means the product of all height-c primes raised to a_c is a
    factor. Also reports the lattice-path shape (constant or a power of the
    maximal ideal).
    """
    lam = pt.as_partition(lam)
    if not any(lam):
        raise ValueError("need a nonzero partition")
    n = len(lam)
    a = []
    for i in range(1, n + 1):
        a.append(lam[i - 1] - sum(comb(i - 1, j - 1) * a[j - 1] for j in range(1, i)))
    diffs = [pt.delta(lam, i)[0] for i in range(n)]
    if diffs != a:
        raise VerificationError(f"binomial solve {a} and iterated differences {diffs} disagree")
    transversal = all(x >= 0 for x in a)
    out = {
        "transversal": transversal,
        "a": a,
        "lattice_path": len(set(lam)) == 1 or all(x == 0 for x in lam[:-1]),
    }
    if transversal:
        out["factors"] = [(c, e) for c, e in enumerate(a, start=1) if e > 0]
    return out


def transversal_product(lam: Sequence[int]) -> MonomialIdeal:
    """Product over c of (all height-c monomial primes)^{a_c}, via the oracle."""
    info = transversal_classify(lam)
    if not info["transversal"]:
        raise ValueError(f"{tuple(lam)} is not transversal")
    n = len(lam)
    out = MonomialIdeal.unit(n)
    for c, e in info["factors"]:
        for S in combinations(range(1, n + 1), c):
            out = out * prime(n, S).power(e)
    return out


def veronese_factorization(lam: Sequence[int]) -> list:
    """[(c, e)]: Sss({λ}) is the product of I_{n,c}^e, zero exponents dropped."""
    lam = pt.as_partition(lam)
    if not any(lam):
        raise ValueError("need a nonzero partition")
    prev = (0,) + lam[:-1]
    return [(c, b - a) for c, (a, b) in enumerate(zip(prev, lam), start=1) if b > a]


def factorization_product(lam: Sequence[int]) -> MonomialIdeal:
    n = len(lam)
    factors = [
        si.expand(si.SymmetricIdeal.veronese(n, c)).power(e) for c, e in veronese_factorization(lam)
    ]
    return reduce(MonomialIdeal.__mul__, factors, MonomialIdeal.unit(n))
