"""
Searching for separating examples
=================================

Exhaustive search over small structures for combinations of predicates.
"""

# %%
from pogamma import EnumerationSpec, check_theorem2, search_witness, serialize

report = search_witness(EnumerationSpec(2, 1, where="leftRegular & !leftDuo"))
print(report.outcome, report.stats)
print(serialize(report.structure))

# %%
# With two gammas the aggregate ("weak") form of intra-regularity no longer
# matches the per-gamma form, and the principal filter formula fails on the
# separating structure.
report = search_witness(EnumerationSpec(2, 2, where="intraRegularWeak & !intraRegular"))
print(report.outcome, report.stats)
print(serialize(report.structure))
t2 = check_theorem2(report.structure)
print("T2 sides:", t2.lhs, t2.rhs, "witnesses:", t2.witnesses)

# %%
# Nothing in these bounds is intra-regular without being left or right regular.
for spec in (EnumerationSpec(3, 1, where="intraRegular & !leftRegular & !rightRegular"),
             EnumerationSpec(2, 3, where="intraRegular & !leftRegular & !rightRegular")):
    r = search_witness(spec)
    print(spec.max_m, spec.max_gamma, r.outcome, r.stats)

# %%
# Orbit representatives under relabeling of elements and gammas.
from pogamma import enumerate_structures

full = list(enumerate_structures(EnumerationSpec(3, 1)))
reps = list(enumerate_structures(EnumerationSpec(3, 1, dedup=True)))
print(len(full), "labeled structures,", len(reps), "representatives")
