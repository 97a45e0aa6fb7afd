"""
Principal filters and ideals
============================

Principal filters computed as a closure fixpoint, compared with the brute-force
intersection of all filters, and the semiprime test on ideals.
"""

# %%
from pogamma import (
    enumerate_filters,
    enumerate_ideals,
    fixture,
    generated_ideal,
    is_semiprime,
    principal_filter,
    principal_filter_oracle,
)

for name in ("LZ2", "RZ2", "N2"):
    S = fixture(name)
    for x in range(S.n):
        print(name, f"N({x}) =", principal_filter(S, x), "oracle:", principal_filter_oracle(S, x))

# %%
# The only filter of the left-zero structure is the whole carrier: 0 c 1 = 0
# forces 1 into any filter containing 0, and symmetrically.
print([str(F) for F in enumerate_filters(fixture("LZ2"))])

# %%
# In N2 the ideal {0} contains 1 c 1 = 0 but not 1, so it is not semiprime.
N2 = fixture("N2")
for A in enumerate_ideals(N2, "two-sided"):
    print(A, "semiprime:", is_semiprime(N2, A))

# %%
# The fast semiprime criterion only needs the ideal generated by each square.
for x in range(N2.n):
    sq = N2.op(x, 0, x)
    print(f"x={x}: ideal generated by {x}*{x}={sq} is", generated_ideal(N2, sq), "contains x:", x in generated_ideal(N2, sq))
