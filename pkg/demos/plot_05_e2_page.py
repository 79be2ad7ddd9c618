"""
The E² page of the Borel construction
=====================================

Group homology of Z_n with coefficients in H_q of the surface gives the
E² page. Shapiro's lemma reduces each induced summand to a small cyclic
group computation.
"""
# %%
from rmac.spectral import cyclic_group_homology, e2_page, poincare_series, summand_homology
from rmac.modrep import cycle_matrix

print(cyclic_group_homology(6, cycle_matrix(6)))
print(summand_homology(8, 2, 1).sage_str())

# %%
print(e2_page(6).grid())

# %%
print(e2_page(8).grid())

# %%
# Over a field only column p = 0 survives.
for n in (6, 8, 10):
    print(n, poincare_series(n))
