"""
The rotation action and its quotient
====================================

Rotating the polygon's vertices by one step acts cellularly on the surface.
The quotient by this Z_n action is again a closed surface, and the
Riemann-Hurwitz formula predicts its genus from the fixed-point data.
"""
# %%
from rmac import build_rmac, polygon_boundary, surface_report
from rmac.cellcomplex import fixed_point_census, quotient_complex, rotation_action
from rmac.polygon import quotient_genus, riemann_hurwitz_audit

n = 6
X = build_rmac(polygon_boundary(n))
sigma = rotation_action(X)
print("the action commutes with the boundary maps:", sigma.verify())
print("order of the action:", sigma.order)

# %%
# Vertices with nontrivial stabilizers are the branch points.
for row in fixed_point_census(n):
    print(row)

# %%
# The cellular quotient and the formula agree.
Q = quotient_complex(X, sigma)
print("quotient genus (cellular):", surface_report(Q).genus)
print("quotient genus (formula): ", quotient_genus(n))
audit = riemann_hurwitz_audit(n)
print("χ(X) =", audit.euler_total, " χ(X/Z_n) =", audit.euler_quotient)
