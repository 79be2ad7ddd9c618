"""
Cubical cones, subdivision and symmetry
=======================================

The cube complex cc(K) realizes the cone on the barycentric subdivision of
K inside the unit cube. We also compute automorphism groups and check
homology spheres.
"""
# %%
from rmac import build_cc, polygon_boundary
from rmac.cellcomplex import homology
from rmac.simplicial import (
    automorphism_group,
    barycentric_subdivision,
    homology_sphere_report,
)

K = polygon_boundary(3)
C, audit = build_cc(K)
print("cc(K) cells:", C.cell_counts(), "reflection audit ok:", audit["ok"])
print("H_*(cc(K)) =", [str(g) for g in homology(C)])

# %%
sd = barycentric_subdivision(K)
report = homology_sphere_report(sd, 2)
print("subdivision has", sd.m, "vertices")
print("homology of a circle:", report.matches_sphere, " polygon boundary:", report.polygon_criterion)

# %%
for n in range(3, 8):
    print(f"|Aut(K_{n})| = {len(automorphism_group(polygon_boundary(n)))}")
