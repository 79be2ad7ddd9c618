"""
Exact integer linear algebra
============================

Everything above rests on a sparse Smith normal form with recorded
unimodular transforms.
"""
# %%
from rmac.intlinalg import IntMatrix, chain_homology, smith_normal_form

A = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
res = smith_normal_form(A)
print("invariant factors:", res.invariant_factors)
print("U·A·V == D:", res.U @ A @ res.V == res.D)

# %%
# Homology of a two-term complex with torsion.
print(chain_homology(IntMatrix.zeros(1, 1), IntMatrix([[2]])))
