"""Fiber-graph counts for the toric ring of a few ideals, plus Ehrhart data of hypersimplices."""
from symshift import SymmetricIdeal, sss_closure
from symshift import toric as T

I = SymmetricIdeal.from_partitions(4, [(1, 1, 2, 2), (0, 2, 2, 2), (0, 1, 2, 3)])
rep = T.check_quadratic_generation(I, kmax=3)
print("new minimal relations by degree:", rep["minimal_relation_counts"])
print("quadrics generate up to degree:", rep["generated_by_quadrics_up_to"])

P = sss_closure([(0, 1, 2, 2)])
print("principal:", T.check_quadratic_generation(P, kmax=3)["minimal_relation_counts"])

for n, d in [(4, 2), (5, 2), (6, 3)]:
    lam = T.hypersimplex(n, d)
    print(f"hypersimplex({n},{d}) volume", T.normalized_volume(lam), " ehrhart", [str(c) for c in T.ehrhart(lam, n + 2)])
