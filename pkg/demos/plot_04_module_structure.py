"""
H_1 as a Z[Z_n]-module
======================

Each Lyndon word class contributes either copies of the regular module or
a module induced from a subgroup. We assemble the decomposition and check
it against the cellular action through characteristic polynomials.
"""
# %%
from rmac.cellcomplex import sigma_on_h1
from rmac.intlinalg import finite_order_charpoly
from rmac.modrep import action_matrix, decompose_h1, predicted_charpoly

dec = decompose_h1(8)
print(dec)
print(dec.table())

# %%
# The generator of Z_{n/d} acting on a small summand.
print(action_matrix(8, 2, 1).M.tolist())

# %%
# The cellular action on H_1 has order n, so its characteristic polynomial
# is fixed by the traces of its powers. It matches the prediction.
for n in range(4, 8):
    A = sigma_on_h1(n)
    same = finite_order_charpoly(A, n) == predicted_charpoly(decompose_h1(n))
    print(f"n={n}: H_1 rank {A.rows}, charpoly agrees: {same}")
