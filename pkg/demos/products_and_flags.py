"""Walk through a small four-variable ideal: flags, product with the maximal ideal, memberships."""
from symshift import SymmetricIdeal, expand
from symshift import symideal as si

I = SymmetricIdeal.from_partitions(4, [(1, 1, 2, 2), (0, 2, 2, 2), (0, 1, 2, 3)])
print("I            ", I)
print("shifted      ", I.is_shifted)
print("strongly     ", I.is_strongly_shifted)

m = SymmetricIdeal.maximal(4)
Im = si.multiply(I, m)
print("I*m gens     ", Im.gens)

# expanded side agrees, it's just much bigger
E = expand(Im)
print("expanded gens", len(E.gens), "vs", len(Im.gens), "partitions")

for lam in [(0, 1, 2, 4), (1, 1, 1, 4)]:
    print(lam, "in I*m:", Im.contains(lam))
print("I*m shifted  ", Im.is_shifted, " strongly:", Im.is_strongly_shifted)
