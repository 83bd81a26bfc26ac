import itertools
from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symshift import oracle as O
from symshift import symideal as si
from symshift.oracle import MonomialIdeal

gens_st = st.integers(2, 3).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 3), min_size=n, max_size=n).map(tuple), min_size=1, max_size=4
    ).map(lambda gs: MonomialIdeal.of(n, gs)).filter(lambda I: not I.is_unit)
)


def naive_contains(gens, e):
    return any(all(g[i] <= e[i] for i in range(len(e))) for g in gens)


def series_from_numerator(K, n, upto):
    # coefficients of K(t) / (1-t)^n
    out = []
    for d in range(upto + 1):
        out.append(sum(K[j] * _binom(d - j + n - 1, n - 1) for j in range(min(d, len(K) - 1) + 1)))
    return out


def _binom(a, b):
    from math import comb

    return comb(a, b) if a >= 0 else 0


def test_small_operations():
    x2, y2 = MonomialIdeal.of(2, [(2, 0)]), MonomialIdeal.of(2, [(0, 2)])
    assert x2.intersect(y2) == MonomialIdeal.of(2, [(2, 2)])
    I = MonomialIdeal.of(2, [(2, 0), (1, 1)])
    assert I.colon(I).is_unit
    assert MonomialIdeal.of(2, [(2, 0), (1, 0)]).gens == ((1, 0),)


def test_saturation_by_maximal_ideal():
    I = si.expand(si.SymmetricIdeal.from_partitions(3, [(1, 2, 2), (0, 2, 3)]))
    sat = I.saturate(MonomialIdeal.maximal(3))
    assert sat == MonomialIdeal.of(3, [(2, 2, 0), (2, 0, 2), (0, 2, 2)])
    assert not si.compress(sat).is_shifted


def test_min_symbolic_square_three_vars():
    I = si.expand(si.SymmetricIdeal.from_partitions(3, [(1, 2, 2), (0, 2, 3)]))
    S = O.symbolic_power(I, 2, "min")
    assert S == MonomialIdeal.of(3, [(2, 2, 2), (4, 4, 0), (4, 0, 4), (0, 4, 4)])
    assert not si.compress(S).is_shifted
    T, horizon = O.symbolic_power_by_saturation(I, 2, "min", kmax=2)
    assert T == S and horizon == 2


def test_borel_closure_and_stability():
    assert O.borel_closure(3, [(0, 1, 1)]).gens == ((0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0))
    assert O.is_strongly_stable(MonomialIdeal.maximal(3).power(3))
    for lam in [(0, 1, 2), (1, 1, 2), (0, 0, 2), (1, 2, 2)]:
        E = si.expand(si.sss_closure([lam]))
        assert O.is_strongly_stable(E) == (E == MonomialIdeal.maximal(3).power(sum(lam)))


def test_decomposition_examples():
    I = MonomialIdeal.of(2, [(2, 0), (1, 1)])
    assert O.irreducible_decomposition(I) == [(1, 0), (2, 1)]
    assert O.ass(I) == [(1,), (1, 2)]
    assert O.ass(si.expand(si.SymmetricIdeal.veronese(3, 2))) == [(1, 2), (1, 3), (2, 3)]
    E = si.expand(si.sss_closure([(1, 2, 2, 4, 4)]))
    assert sorted({len(p) for p in O.ass(E)}) == [1, 2, 4, 5]


@given(gens_st)
def test_decomposition_soundness(I):
    comps = O.irreducible_decomposition(I)
    assert reduce(MonomialIdeal.intersect, [O.component_ideal(I.n, c) for c in comps]) == I
    for p in O.ass(I):
        assert O.is_associated_by_witness(I, p)


@given(gens_st)
def test_witness_search_finds_nothing_extra(I):
    found = [
        p
        for r in range(1, I.n + 1)
        for p in itertools.combinations(range(1, I.n + 1), r)
        if O.is_associated_by_witness(I, p)
    ]
    assert sorted(found) == sorted(O.ass(I))


@given(st.integers(1, 3).flatmap(lambda n: st.permutations(list(range(n))).map(lambda s: (n, s))), st.data())
def test_ass_of_symmetric_is_orbit_closed(ns, data):
    n, _ = ns
    lam = tuple(sorted(data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))))
    if not any(lam):
        return
    A = set(O.ass(si.expand(si.sss_closure([lam]))))
    for p in A:
        for q in itertools.combinations(range(1, n + 1), len(p)):
            assert q in A


def test_hilbert_examples():
    assert O.hilbert_numerator(si.expand(si.SymmetricIdeal.veronese(3, 2))) == [1, 0, -3, 2]
    assert O.hilbert_numerator(MonomialIdeal.maximal(1)) == [1, -1]
    assert O.hilbert_numerator(MonomialIdeal.unit(2)) == [0]
    V = si.expand(si.SymmetricIdeal.veronese(3, 2))
    assert [O.hilbert_function(V, d) for d in range(5)] == [1, 3, 3, 3, 3]


@given(gens_st)
def test_hilbert_numerator_counts(I):
    K = O.hilbert_numerator(I)
    top = sum(I.max_exponents()) + 2
    assert len(K) - 1 <= sum(I.max_exponents())
    assert series_from_numerator(K, I.n, top) == [O.hilbert_function(I, d) for d in range(top + 1)]


def test_closure_membership_counterexample():
    E = si.expand(si.sss_closure([(2, 2, 8), (0, 6, 6)]))
    assert not E.contains((1, 4, 7))
    w = O.newton_certificate(E, (1, 4, 7))
    assert w is not None and sum(w) == 1
    s, picks = O.power_witness(E, (1, 4, 7), w)
    assert s == 2 and O.power_search_contains(E, (1, 4, 7)) == 2
    prod = [sum(E.gens[k][i] for k in picks) for i in range(3)]
    assert all(p <= 2 * a for p, a in zip(prod, (1, 4, 7)))


def test_closure_trivial_cases():
    E = si.expand(si.sss_closure([(0, 1, 2)]))
    for g in E.gens:
        assert O.integral_closure_contains(E, g)
    assert not O.integral_closure_contains(E, (1, 1, 0))
    assert O.integral_closure_contains(E, (1, 1, 1))


@given(gens_st)
def test_lp_agrees_with_power_search(I):
    for a in itertools.product(range(4), repeat=I.n):
        lp = O.integral_closure_contains(I, a)
        ps = O.power_search_contains(I, a)
        assert lp == (ps is not None)


@given(gens_st)
def test_closure_is_a_closure_operator(I):
    dmax = max(sum(g) for g in I.gens) + 1
    extra = O.closure_excess(I, dmax)
    bar = I + MonomialIdeal.of(I.n, extra) if extra else I
    assert I.issubset(bar)
    for m in O.closure_excess(bar, dmax):
        # anything bar's closure adds must already lie in I's closure
        assert O.integral_closure_contains(I, m)


@given(gens_st)
def test_symbolic_first_power(I):
    assert O.symbolic_power(I, 1, "ass") == I


def test_veronese_symbolic_square():
    V = si.expand(si.SymmetricIdeal.veronese(3, 2))
    S = O.symbolic_power(V, 2)
    assert si.compress(S).gens == ((0, 2, 2), (1, 1, 1))
    direct = reduce(MonomialIdeal.intersect, [O.prime(3, p).power(2) for p in O.ass(V)])
    assert S == direct


def test_lp_cap():
    from symshift._config import BUDGET

    E = si.expand(si.sss_closure([(2, 2, 8), (0, 6, 6)]))
    old = BUDGET.lp_columns
    BUDGET.lp_columns = 5
    try:
        with pytest.raises(O.LPTooLarge):
            O.newton_certificate(E, (1, 4, 7))
    finally:
        BUDGET.lp_columns = old


def test_phase_one_exact_fraction():
    w = O._phase_one([(0, 2), (2, 0)], [1, 1])
    assert w == [Fraction(1, 2), Fraction(1, 2)]
    assert O._phase_one([(0, 2), (2, 0)], [0, 1]) is None
