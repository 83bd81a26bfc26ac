# irredundant components of powers of a principal Borel ideal, then a stability check
from symshift import decomp as D
from symshift import invariants as inv
from symshift import sss_closure

lam = (1, 2, 2, 4, 4)
for k in (1, 2, 3):
    dec = D.irredundant_components(lam, k)
    print(f"k={k}", "kept:", dec.kept())
    print("     heights:", dec.heights())

print(inv.stab_report(sss_closure([lam]), 3))

# oracle check for k=1, slow-ish but exact
ok = D.verify_decomposition(D.irredundant_components(lam, 1), oracle=True)
print("oracle agrees:", all(ok.values()))
