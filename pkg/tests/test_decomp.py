import pytest
from hypothesis import given
from hypothesis import strategies as st

from symshift import decomp as D
from symshift import oracle as O
from symshift import partitions as pt
from symshift import symideal as si
from symshift.decomp import VeroneseSymbolic

from conftest import nonzero_partitions

LAM54 = (1, 2, 2, 4, 4)


def oracle_veronese_symbolic(n, j, m):
    from functools import reduce
    from itertools import combinations

    return reduce(O.MonomialIdeal.intersect, [O.prime(n, S).power(m) for S in combinations(range(1, n + 1), j)])


def test_veronese_symbolic_generators():
    V = VeroneseSymbolic(3, 2, 2)
    assert sorted(V.generators()) == [(0, 2, 2), (1, 1, 1)]
    assert si.expand(V.ideal()) == oracle_veronese_symbolic(3, 2, 2)
    assert VeroneseSymbolic(4, 1, 5).generators() == [(5, 5, 5, 5)]
    assert D.veronese_symbolic_contains(VeroneseSymbolic(5, 4, 9), LAM54)
    assert not D.veronese_symbolic_contains(VeroneseSymbolic(5, 4, 10), LAM54)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(1, 4))))
def test_veronese_symbolic_matches_oracle(njm):
    n, j, m = njm
    V = VeroneseSymbolic(n, j, m)
    assert si.expand(V.ideal()) == oracle_veronese_symbolic(n, j, m)


def test_principal_decomposition_exponents():
    dec = D.principal_decomposition(LAM54)
    assert [c.m for c in dec.components] == [1, 3, 5, 9, 13]
    dec = D.principal_decomposition((0, 1, 2), 2)
    assert [c.m for c in dec.components] == [0, 2, 6]
    assert D.verify_decomposition(dec)["oracle_equal"]


def test_principal_decomposition_power_of_max():
    dec = D.irredundant_components((0, 0, 0, 3))
    assert dec.kept() == [(4, 3)]


def test_components_of_12244():
    d1 = D.irredundant_components(LAM54, 1)
    assert d1.kept() == [(1, 1), (2, 3), (4, 9), (5, 13)]
    d2 = D.irredundant_components(LAM54, 2)
    assert d2.kept() == [(1, 2), (2, 6), (3, 10), (4, 18), (5, 26)]
    checks = D.verify_decomposition(d1)
    assert all(checks.values()), checks


def test_constant_partition_keeps_only_height_one():
    assert D.irredundant_components((2, 2, 2)).kept() == [(1, 2)]


@given(nonzero_partitions(nmin=2, nmax=4, dmax=3), st.integers(1, 2))
def test_rules_against_oracle(lam, k):
    dec = D.irredundant_components(lam, k)
    checks = D.verify_decomposition(dec)
    assert all(checks.values()), (lam, k, checks)


def test_rules_against_oracle_cube_small():
    for lam in [(0, 1, 2), (1, 2, 2), (1, 1, 2), (0, 2, 2), (1, 2, 3)]:
        checks = D.verify_decomposition(D.irredundant_components(lam, 3))
        assert all(checks.values()), (lam, checks)


@given(nonzero_partitions(nmin=2, nmax=6, dmax=6), st.integers(1, 8), st.data())
def test_kept_components_cut_out_the_power(lam, k, data):
    dec = D.irredundant_components(lam, k)
    n = len(lam)
    klam = tuple(k * x for x in lam)
    for _ in range(20):
        e = data.draw(st.lists(st.integers(0, klam[-1] + 1), min_size=n, max_size=n))
        kept = all(VeroneseSymbolic(n, j, m).contains(e) for j, m in dec.kept())
        assert kept == si.principal_membership(klam, e)
    # each kept component is needed: some partition meets every other target
    targets = [k * a for a in pt.prefix_sums(lam)]
    for c in dec.components:
        if not c.redundant and c.m > 0:
            assert D._needed_by_search(targets, c.j) or c.rule in ("height", "jump", "threshold", "witness")


def test_persistence_on_principal():
    for lam in [(0, 1, 2), (1, 2, 2), (1, 1, 2, 2), (0, 1, 1, 3), LAM54]:
        prev = None
        for k in range(1, 4):
            hs = set(D.irredundant_components(lam, k).heights())
            if prev is not None:
                assert prev <= hs
            prev = hs


def test_stable_ass():
    s = D.stable_ass(LAM54)
    assert s["heights"] == [1, 2, 3, 4, 5] and s["astab_bound"] == 4 and s["s"] == 5
    s = D.stable_ass((0, 1, 2))
    assert s["certified"] and s["astab"] == 1
    assert set(D.oracle_heights((0, 1, 2), 1)) == set(D.oracle_heights((0, 1, 2), 2))
    s = D.stable_ass((3, 3, 3))
    assert s["heights"] == [1] and s["dstab"] == 1


def test_stable_heights_reached_by_horizon():
    for lam in [(1, 2, 2), (1, 1, 2, 2), LAM54]:
        s = D.stable_ass(lam)
        k = s.get("astab_bound", 1)
        assert D.irredundant_components(lam, k).heights() == s["heights"]


def test_containment_examples():
    assert D.containment_check((1, 2, 2), 5, 1) == {"sufficient": True, "exact": True}
    r = D.containment_check((1, 2, 2), 1, 1)
    I = si.expand(si.sss_closure([(1, 2, 2)]))
    assert r["exact"] == O.symbolic_power(I, 1).issubset(I)
    # the Min-mode power is just the height-one part, so m = k fails here
    assert not D.containment_check((1, 2, 3), 2, 2)["exact"]
    # while the Ass-mode power does coincide with the ordinary power
    E = si.expand(si.sss_closure([(1, 2, 3)]))
    assert O.symbolic_power(E, 2, "ass") == E.power(2)


@given(nonzero_partitions(nmin=2, nmax=4, dmax=4), st.integers(1, 6), st.integers(1, 4))
def test_containment_sufficient_implies_exact(lam, m, k):
    r = D.containment_check(lam, m, k)
    if r["sufficient"]:
        assert r["exact"]


def test_padic_examples():
    I = si.intersect(si.SymmetricIdeal.veronese(5, 1), VeroneseSymbolic(5, 3, 5).ideal())
    res = D.p_adically_closed(I)
    assert res["verdict"] and I.borel_generators == ((1, 1, 3, 3, 3), (1, 2, 2, 2, 2))
    for lam in [(0, 1, 2), LAM54, (1, 1, 3)]:
        assert D.p_adically_closed(si.sss_closure([lam]))["verdict"]
    res = D.p_adically_closed(si.SymmetricIdeal.from_partitions(3, [(1, 2, 2), (0, 2, 3)]))
    assert isinstance(res["verdict"], bool)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        D.irredundant_components((0, 0, 0))
    with pytest.raises(ValueError):
        VeroneseSymbolic(3, 4, 1)
