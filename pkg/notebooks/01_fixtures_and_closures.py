"""
Fixtures, products and down-closures
====================================

A tour of the four bundled structures and the two primitive operators every
other computation is built from.
"""

# %%
# The bundled structures: trivial, left-zero, right-zero and the ordered null
# semigroup on {0, 1} with 0 <= 1.
from pogamma import down_closure, fixture, gamma_product, serialize, up_closure

for name in ("S1", "LZ2", "RZ2", "N2"):
    S = fixture(name)
    print(name, f"n={S.n} g={S.g}", "order pairs:", S.order_pairs())

# %%
# Structures serialize to a small line-oriented text format.
print(serialize(fixture("RZ2")))

# %%
# Products of subsets. In the left-zero structure a c b = a, so the product
# keeps the left factor; in the right-zero structure it keeps the right one.
LZ2, RZ2 = fixture("LZ2"), fixture("RZ2")
print(gamma_product(LZ2, LZ2.whole, LZ2.subset([1])))
print(gamma_product(RZ2, RZ2.whole, RZ2.subset([1])))

# %%
# Closures follow the order. In N2 the top element pulls 0 into its
# down-closure and the bottom element pulls 1 into its up-closure.
N2 = fixture("N2")
print(down_closure(N2, N2.subset([1])), up_closure(N2, N2.subset([0])))

# %%
# The closure identities hold for every pair of subsets; here is a spot check
# of ((A] Gamma (B]] = (A Gamma B] on N2.
for A in (N2.empty, N2.subset([0]), N2.subset([1]), N2.whole):
    for B in (N2.subset([1]), N2.whole):
        lhs = down_closure(N2, gamma_product(N2, down_closure(N2, A), down_closure(N2, B)))
        rhs = down_closure(N2, gamma_product(N2, A, B))
        print(A, B, lhs, rhs, lhs == rhs)
