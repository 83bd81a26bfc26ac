import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symshift import partitions as pt
from symshift import symideal as si
from symshift import toric as T
from symshift._config import BUDGET, NotStronglyShifted

from conftest import nonzero_partitions

FOUR_VAR = [(1, 1, 2, 2), (0, 2, 2, 2), (0, 1, 2, 3)]


def descents_count(m, k):
    """Permutations of m letters with exactly k descents, by enumeration."""
    return sum(
        1
        for p in itertools.permutations(range(m))
        if sum(1 for a, b in zip(p, p[1:]) if a > b) == k
    )


def test_vertices():
    assert len(T.permutohedron_vertices((0, 1, 2))) == 6
    assert len(T.permutohedron_vertices((0, 1, 1))) == 3
    pts = T.lattice_points((0, 1, 2))
    assert len(pts) == 7
    assert set(pts) == set(si.expand(si.sss_closure([(0, 1, 2)])).gens)


def test_contains_fractions():
    assert T.permutohedron_contains((0, 1, 2), (Fraction(1, 2), 1, Fraction(3, 2)))
    assert not T.permutohedron_contains((0, 1, 2), (0, 0, 3))


@given(nonzero_partitions(nmax=4, dmax=3), st.data())
def test_rado_triple(lam, data):
    n = len(lam)
    I = si.sss_closure([lam])
    for _ in range(10):
        e = data.draw(st.lists(st.integers(0, sum(lam)), min_size=n, max_size=n))
        if sum(e) != sum(lam):
            e[-1] += sum(lam) - sum(e)
            if e[-1] < 0:
                continue
        a = T.permutohedron_contains(lam, e)
        assert a == si.principal_membership(lam, e) == I.contains(e)


def test_ehrhart_and_volume():
    assert T.normalized_volume((0, 0, 1, 1)) == 4 == descents_count(3, 1)
    assert T.normalized_volume((2, 2, 2)) == 0
    coeffs = T.ehrhart((0, 1, 2), 5)
    assert coeffs[0] == 1


def test_ehrhart_matches_closure_counts():
    lam = (0, 1, 2)
    for k in range(1, 4):
        assert len(T.lattice_points(lam, k)) == len(si.expand(si.sss_closure([tuple(k * x for x in lam)])).gens)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_volume_is_eulerian(n):
    for d in range(2, n):
        assert T.normalized_volume(T.hypersimplex(n, d)) == descents_count(n - 1, d - 1)


def test_normality_small():
    for lam in [(0, 1, 2), (0, 1, 1), (1, 2, 2)]:
        base = T.lattice_points(lam, 1)
        reach = {(0,) * len(lam)}
        for k in range(1, 4):
            reach = {tuple(a + b for a, b in zip(r, p)) for r in reach for p in base}
            assert reach == set(T.lattice_points(lam, k))


def test_minimal_reduction():
    L = T.minimal_monomial_reduction((0, 1, 2))
    assert len(L.gens) == 6 and not L.contains((1, 1, 1))
    assert T.verify_reduction((0, 1, 2))
    assert T.minimal_monomial_reduction((0, 0, 1)).gens == si.expand(si.SymmetricIdeal.maximal(3)).gens
    assert T.minimal_monomial_reduction((0, 1, 1)) == si.expand(si.SymmetricIdeal.veronese(3, 2))


def test_exchange_quadrics():
    V = si.SymmetricIdeal.veronese(3, 2)
    assert T.exchange_quadrics(V) == []
    assert T.exchange_quadrics(si.SymmetricIdeal.maximal(2)) == []
    I = si.sss_closure([(0, 1, 2)])
    mm = T.MonomialMap.of_ideal(I)
    q = T.exchange_quadrics(I)
    assert q
    for a, b in q:
        assert mm.image(a) == mm.image(b)
    idx = {g: k for k, g in enumerate(mm.targets)}
    want = tuple(sorted((idx[(1, 2, 0)], idx[(0, 1, 2)])))
    assert any(want in pair for pair in q)


def test_quadratic_generation_four_var():
    rep = T.check_quadratic_generation(si.SymmetricIdeal.from_partitions(4, FOUR_VAR), 3)
    assert rep["generators"] == 34
    assert rep["minimal_relation_counts"][3] == 28
    assert not rep["truncated"]


def test_quadratic_generation_principal_small():
    for lam in [(0, 1, 2), (1, 2, 2), (0, 1, 1, 2)]:
        rep = T.check_quadratic_generation(si.sss_closure([lam]), 3)
        assert rep["generated_by_quadrics_up_to"] == 3
        assert rep["minimal_relation_counts"][3] == 0
    rep = T.check_quadratic_generation(si.sss_closure([(2, 2, 2)]), 3)
    assert rep["minimal_relation_counts"] == {2: 0, 3: 0}


def test_quadratic_generation_budget():
    rep = T.check_quadratic_generation(si.sss_closure([(0, 1, 2)]), 3, budget=10)
    assert rep["truncated"] and rep["degrees"] == {}


def test_relation_counts_monotone_in_budget():
    I = si.SymmetricIdeal.from_partitions(4, FOUR_VAR)
    small = T.check_quadratic_generation(I, 3, budget=3000)
    big = T.check_quadratic_generation(I, 3)
    for k, v in small["minimal_relation_counts"].items():
        assert big["minimal_relation_counts"][k] == v


def test_fiber_type():
    assert T.fiber_type_check(si.SymmetricIdeal.veronese(3, 2), 2, 2)["certified"]
    I = si.sss_closure([(0, 1, 2)])
    assert T.fiber_type_check(I, 2, 3)["certified"]
    assert T.fiber_type_check(I, 2, 3, moves="quadrics")["certified"]
    with pytest.raises(NotStronglyShifted):
        T.fiber_type_check(si.SymmetricIdeal.from_partitions(4, FOUR_VAR), 1, 1)


def test_fiber_type_needs_equigenerated():
    from symshift._config import NotEquigenerated

    with pytest.raises(NotEquigenerated):
        T.fiber_type_check(si.sss_closure([(1, 1, 1), (0, 2, 2)]), 1, 1)


def test_syzygy_relations_in_kernel():
    I = si.sss_closure([(1, 2, 2)])
    mm = T.MonomialMap.of_ideal(I)
    for i, ku, umax, kv in T.syzygy_relations(I, mm):
        x1 = [0] * 3
        x1[i] = 1
        x2 = [0] * 3
        x2[umax] = 1
        assert mm.image([ku], x1) == mm.image([kv], x2)


def test_fiber_hilbert():
    assert T.fiber_hilbert(si.sss_closure([(0, 1, 2)]), 1) == 7
    assert T.fiber_hilbert(si.sss_closure([(0, 1, 2)]), 0) == 1
    assert T.fiber_hilbert(si.SymmetricIdeal.veronese(3, 2), 2) == 6 == len(T.lattice_points((0, 1, 1), 2))
