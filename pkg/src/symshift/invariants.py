"""Betti numbers, projective dimension, analytic spread and depth of powers."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import partitions as pt
from . import symideal as si
from ._config import NotEquigenerated, NotShifted, NotStronglyShifted, VerificationError
from .oracle import MonomialIdeal, ass


def cu_size(u: Sequence[int], lam_n: int | None = None) -> int:
    """Number of variables in the colon of the earlier generators by u.

    Counts variables whose exponent in u is below top-1, plus those sitting
    exactly at top-1 with index smaller than the last variable at the top.
    """
    if not any(u):
        raise ValueError("u must be a nonconstant monomial")
    top = max(u) if lam_n is None else lam_n
    last_top = max(j for j, a in enumerate(u) if a == top)
    low = sum(1 for a in u if a < top - 1)
    edge = sum(1 for j, a in enumerate(u) if a == top - 1 and j < last_top)
    return low + edge


@dataclass(frozen=True)
class BettiTable:
    entries: dict  # (i, j) -> beta_{i,j}

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    @property
    def top_index(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=-1)

    def numerator(self) -> list:
        """K(t) = 1 + Σ_i (-1)^{i+1} Σ_j β_{i,j} t^j as a coefficient list."""
        deg = max((j for _, j in self.entries), default=0)
        K = [0] * (deg + 1)
        K[0] = 1
        for (i, j), v in self.entries.items():
            K[j] += (-1) ** (i + 1) * v
        while len(K) > 1 and K[-1] == 0:
            K.pop()
        return K

    def to_json(self) -> list:
        return [[i, j, v] for (i, j), v in sorted(self.entries.items())]


def _require_shifted(I):
    if not I.is_shifted:
        raise NotShifted("this invariant needs a symmetric shifted ideal")


def betti(I: si.SymmetricIdeal) -> BettiTable:
    _require_shifted(I)
    table: dict = defaultdict(int)
    for lam in I.gens:
        top = lam[-1]
        for u in pt.distinct_permutations(lam):
            c = cu_size(u, top)
            d = sum(u)
            for i in range(c + 1):
                table[(i, d + i)] += comb(c, i)
    return BettiTable(dict(table))


def proj_dim(I: si.SymmetricIdeal) -> int:
    """Projective dimension of R/I."""
    _require_shifted(I)
    if I.is_zero:
        return 0
    if I.is_unit:
        raise ValueError("R/R is zero")
    return max(pt.med(lam) for lam in I.gens) + 1


def depth_quotient(I: si.SymmetricIdeal) -> int:
    return I.n - proj_dim(I)


def predecessor_colon_sizes(I: si.SymmetricIdeal) -> dict:
    """|G(J : u)| with J the generators before u, via the oracle.

    Generators are ordered by (degree, antilex on partitions, antilex on the
    monomial); used to check :func:`cu_size` against its definition.
    """
    gens = [u for lam in I.gens for u in pt.distinct_permutations(lam)]
    gens.sort(key=lambda u: (sum(u), tuple(-x for x in sorted(u)), tuple(-x for x in u)))
    out = {}
    for idx, u in enumerate(gens):
        J = MonomialIdeal.of(I.n, gens[:idx]) if idx else MonomialIdeal.zero(I.n)
        col = J.colon_mono(u) if idx else J
        if col.is_zero:
            out[u] = 0
            continue
        if any(sum(g) != 1 for g in col.gens):
            raise VerificationError(f"colon at {u} is not generated by variables: {col.gens}")
        out[u] = len(col.gens)
    return out


# -- relation graph and analytic spread ---------------------------------------


@dataclass(frozen=True)
class RelationGraph:
    vertices: tuple  # 1-based
    edges: tuple  # sorted pairs (i, j), i < j

    def components(self) -> int:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        return len({find(v) for v in self.vertices})


def _require_equi(I):
    if not I.is_equigenerated:
        raise NotEquigenerated("needs an equigenerated ideal")


def relation_graph(I: si.SymmetricIdeal) -> RelationGraph:
    _require_equi(I)
    G = set(si.expand(I).gens)
    n = I.n
    edges = set()
    for u in G:
        for j in range(n):
            if u[j] == 0:
                continue
            for i in range(n):
                if i == j:
                    continue
                v = list(u)
                v[i] += 1
                v[j] -= 1
                # x_i * u == x_j * v' with v' = u + e_i - e_j
                if tuple(v) in G:
                    edges.add((min(i, j) + 1, max(i, j) + 1))
    verts = sorted({v for e in edges for v in e})
    return RelationGraph(tuple(verts), tuple(sorted(edges)))


def exact_rank(rows) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    rank = 0
    cols = len(mat[0])
    for c in range(cols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                f = mat[r][c] / p[c]
                mat[r] = [a - f * b for a, b in zip(mat[r], p)]
        rank += 1
    return rank


def analytic_spread(I: si.SymmetricIdeal) -> dict:
    _require_equi(I)
    if I.is_zero:
        raise ValueError("zero ideal")
    n = I.n
    closed = 1 if len(I.gens) == 1 and len(set(I.gens[0])) == 1 else n
    rank = exact_rank(si.expand(I).gens)
    methods = {"closed_form": closed, "rank": rank}
    if I.is_shifted:
        g = relation_graph(I)
        methods["graph"] = len(g.vertices) - g.components() + 1
    values = set(methods.values())
    if len(values) != 1:
        raise VerificationError(f"analytic spread methods disagree: {methods}")
    return {"value": closed, "methods": methods}


# -- depth and associated primes of powers ------------------------------------


def _require_equi_sssi(I):
    _require_equi(I)
    if not I.is_strongly_shifted:
        raise NotStronglyShifted("needs an equigenerated strongly shifted ideal")


def _ass_heights(P: si.SymmetricIdeal, route: str) -> list:
    if route == "decomp" and P.is_principal_borel:
        from .decomp import irredundant_components

        (lam,) = P.borel_generators
        return irredundant_components(lam, 1).heights()
    return sorted({len(p) for p in ass(si.expand(P))})


def depth_powers(I: si.SymmetricIdeal, kmax: int) -> list:
    """Rows {k, pd, depth, ass_heights, source} for k = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    _require_equi_sssi(I)
    n = I.n
    principal = I.is_principal_borel
    rows = []
    for k in range(1, kmax + 1):
        if principal:
            from .decomp import irredundant_components

            (lam,) = I.borel_generators
            dec = irredundant_components(lam, k)
            heights, source = dec.heights(), "decomp"
        else:
            heights, source = _ass_heights(si.power(I, k), "oracle"), "oracle"
        Pk = si.power(I, k)
        pd = proj_dim(Pk)
        rows.append({"k": k, "pd": pd, "depth": n - pd, "ass_heights": heights, "source": source})
    depths = [r["depth"] for r in rows]
    if any(a < b for a, b in zip(depths, depths[1:])):
        raise VerificationError(f"depth of powers increased: {depths}")
    constant = len(I.gens) == 1 and len(set(I.gens[0])) == 1
    for r in rows:
        if constant and r["depth"] != n - 1:
            raise VerificationError("principal power has depth other than n-1")
        if not constant and r["k"] <= n - 1 and r["depth"] > n - r["k"] - 1:
            raise VerificationError(f"depth bound n-k-1 violated at k={r['k']}")
    return rows


def _first_stable(values) -> int:
    k = len(values)
    while k > 1 and values[k - 2] == values[-1]:
        k -= 1
    return k


def stab_report(I: si.SymmetricIdeal, kmax: int) -> dict:
    rows = depth_powers(I, kmax)
    n = I.n
    depths = [r["depth"] for r in rows]
    asses = [tuple(r["ass_heights"]) for r in rows]
    report = {
        "horizon": kmax,
        "dstab_observed": _first_stable(depths),
        "astab_observed": _first_stable(asses),
        "depth_settled": _first_stable(depths) < kmax,
        "ass_settled": _first_stable(asses) < kmax,
        "certified": False,
        "bounds": {},
    }
    constant = len(I.gens) == 1 and len(set(I.gens[0])) == 1
    if constant:
        report["certified"] = True
        report["bounds"] = {"dstab": 1, "astab": 1}
    elif I.is_principal_borel:
        from .decomp import stable_ass

        (lam,) = I.borel_generators
        sa = stable_ass(lam)
        report["certified"] = sa["certified"]
        report["bounds"] = {"dstab": sa["dstab_bound"], "astab": sa["astab_bound"]}
        report["stable_heights"] = sa["heights"]
    else:
        report["bounds"] = {"dstab": max(n - 1, 1)}
    if report["certified"] and (report["dstab_observed"] != 1 or report["astab_observed"] != 1):
        raise VerificationError("certified stabilisation contradicts observed table")
    return report


def ratliff_check(I: si.SymmetricIdeal, kmax: int) -> list:
    """For each k ≤ kmax: (k, holds, witness) for I^{k+1} : I == I^k via the oracle."""
    _require_equi_sssi(I)
    E = si.expand(I)
    out = []
    for k in range(1, kmax + 1):
        Pk = si.expand(si.power(I, k))
        Pk1 = si.expand(si.power(I, k + 1))
        col = Pk1.colon(E)
        extra = [g for g in col.gens if not Pk.contains(g)]
        out.append((k, not extra and Pk.issubset(col), extra[0] if extra else None))
    return out
