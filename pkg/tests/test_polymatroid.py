import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symshift import polymatroid as PM
from symshift import symideal as si
from symshift import toric
from symshift._config import NotEquigenerated

from conftest import nonzero_partitions

FOUR_VAR = [(1, 1, 2, 2), (0, 2, 2, 2), (0, 1, 2, 3)]


def test_exchange_examples():
    assert PM.is_polymatroidal(si.sss_closure([(1, 3, 4, 5)])).polymatroidal
    rep = PM.is_polymatroidal(si.SymmetricIdeal.from_partitions(4, FOUR_VAR))
    assert not rep.polymatroidal and rep.witness == ((0, 1, 2, 3), (2, 0, 1, 3), 3)
    assert PM.is_polymatroidal(si.sss_closure([(0, 0, 3)])).polymatroidal


def test_exchange_pairs_are_valid():
    I = si.sss_closure([(0, 1, 2)])
    G = set(si.expand(I).gens)
    rep = PM.is_polymatroidal(I)
    assert rep.witness is None and rep.symmetric_exchange_pairs
    for u, v, i, j, t, w in rep.symmetric_exchange_pairs:
        assert t in G and w in G
        assert u[i - 1] > v[i - 1] and u[j - 1] < v[j - 1]
        assert tuple(a + b for a, b in zip(u, v)) == tuple(a + b for a, b in zip(t, w))


def test_thm_examples():
    assert PM.verify_thmC(si.sss_closure([(0, 1, 2)]))
    # degree-2 partitions in three parts form a chain, so this sum stays principal
    chain = si.add(si.sss_closure([(0, 0, 2)]), si.sss_closure([(0, 1, 1)]))
    assert chain.borel_generators == ((0, 0, 2),) and PM.verify_thmC(chain)
    two = si.sss_closure([(1, 1, 4), (0, 3, 3)])
    assert len(two.borel_generators) == 2
    assert not PM.verify_thmC(two)
    assert PM.is_polymatroidal(two).witness is not None
    assert PM.verify_thmC(si.sss_closure([(0, 0, 4)]))


@given(st.integers(2, 4).flatmap(lambda n: st.lists(nonzero_partitions(n=n, dmax=3), min_size=1, max_size=3)))
def test_biconditional_random(ps):
    d = max(sum(p) for p in ps)
    ps = [p for p in ps if sum(p) == d]
    for I in (si.SymmetricIdeal.from_partitions(len(ps[0]), ps), si.sss_closure(ps)):
        PM.verify_thmC(I)


def test_requires_equigenerated():
    with pytest.raises(NotEquigenerated):
        PM.is_polymatroidal(si.SymmetricIdeal.from_partitions(3, [(0, 0, 4), (1, 1, 1)]))


def test_sep_examples():
    assert PM.classify_sep((1, 3, 4, 5)) == {"has_sep": False, "type": "none"}
    assert not PM.has_sep_bruteforce(si.sss_closure([(1, 3, 4, 5)]))
    assert PM.classify_sep((0, 0, 1, 1))["type"] == "two-block"
    assert PM.has_sep_bruteforce(si.sss_closure([(0, 0, 1, 1)]))
    assert PM.classify_sep((1, 2, 4, 4))["type"] == "pinch"
    assert PM.has_sep_bruteforce(si.sss_closure([(1, 2, 4, 4)]))
    assert PM.classify_sep((3, 3))["type"] == "constant"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sep_syntactic_matches_brute_force(n):
    from symshift.partitions import partitions_of

    for d in range(1, 8 if n < 4 else 7):
        for lam in partitions_of(d, n):
            assert PM.classify_sep(lam)["has_sep"] == PM.has_sep_bruteforce(si.sss_closure([lam])), lam


def test_transversal_examples():
    r = PM.transversal_classify((1, 3, 4, 5))
    assert not r["transversal"]
    r = PM.transversal_classify((2, 2, 2))
    assert r["transversal"] and r["a"] == [2, 0, 0]
    r = PM.transversal_classify((0, 1, 2))
    assert r["a"] == [0, 1, 0] and r["factors"] == [(2, 1)]
    assert PM.transversal_product((0, 1, 2)) == si.expand(si.sss_closure([(0, 1, 2)]))


@given(nonzero_partitions(nmin=1, nmax=4, dmax=4))
def test_transversal_criteria(lam):
    r = PM.transversal_classify(lam)  # raises if the two criteria disagree
    if r["transversal"]:
        assert PM.transversal_product(lam) == si.expand(si.sss_closure([lam]))
    assert r["lattice_path"] == (len(set(lam)) == 1 or not any(lam[:-1]))


def test_veronese_factorization_examples():
    assert PM.veronese_factorization((0, 1, 2)) == [(2, 1), (3, 1)]
    assert PM.veronese_factorization((0, 0, 0, 3)) == [(4, 3)]
    assert PM.veronese_factorization((1, 2, 2, 4, 4)) == [(1, 1), (2, 1), (4, 2)]
    assert PM.factorization_product((1, 2, 2, 4, 4)) == si.expand(si.sss_closure([(1, 2, 2, 4, 4)]))


@given(nonzero_partitions(nmin=1, nmax=4, dmax=4))
def test_factorization_and_minkowski(lam):
    n = len(lam)
    assert PM.factorization_product(lam) == si.expand(si.sss_closure([lam]))
    sums = {(0,) * n}
    for c, e in PM.veronese_factorization(lam):
        pts = toric.lattice_points(toric.hypersimplex(n, n - c + 1), e)
        sums = {tuple(a + b for a, b in zip(s, p)) for s in sums for p in pts}
    assert sums == set(toric.lattice_points(lam, 1))
