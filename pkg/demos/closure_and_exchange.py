from symshift import oracle as O
from symshift import polymatroid as PM
from symshift import expand, sss_closure

# a two-generator strongly shifted ideal that isn't integrally closed
I = sss_closure([(2, 2, 8), (0, 6, 6)])
E = expand(I)
a = (1, 4, 7)
print(a, "in I:", E.contains(a), " in closure:", O.integral_closure_contains(E, a))
print("power search exponent:", O.power_search_contains(E, a))

for lam in [(1, 1, 1, 1), (0, 0, 2, 2), (0, 1, 1, 3), (0, 1, 2, 3)]:
    print(lam, PM.classify_sep(lam), "factors", PM.veronese_factorization(lam))

J = sss_closure([(1, 1, 4), (0, 3, 3)])
print("exchange property:", PM.is_polymatroidal(J, record_pairs=False))
