# Which knot families can produce a given lens space?
#
# Run with:  python demos/which_families.py

from lensknots import LensSpace, classify, fig8_predicate, represent_form, trefoil_predicate

# L(37,10) is reached four ways. The report keeps one witness per family and lambda.

report = classify(LensSpace(37, 10))
for w in report.witnesses:
    print(f"{w.family.value:<11} {w.descriptor.params_str():<28} lambda={w.lam}")

# The fiber families have closed-form tests. p is m^2 + mn + n^2 for coprime
# m, n exactly when p is odd, 9 does not divide it, and every other prime
# factor is 1 mod 6.

for p in (19, 27, 91, 133, 9, 25):
    ok, qs = trefoil_predicate(p)
    print(f"p={p:<4} trefoil form: {ok!s:<5} q in {sorted(qs)}  reps={represent_form('trefoil', p)[:3]}")

# The figure-eight form |n^2 - mn - m^2| wants primes that are +-1 mod 5.

for p in (11, 31, 55, 25, 7):
    ok, qs = fig8_predicate(p)
    print(f"p={p:<4} fig8 form:    {ok!s:<5} q in {sorted(qs)}")

# Some spaces have no witness at all.

print("L(5,2):", classify(LensSpace(5, 2)).witnesses or "no witnesses")
