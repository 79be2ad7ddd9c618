"""Cubical cell models of real moment-angle complexes and related complexes.

A cell of Z_K(D¹,S⁰) is a pair (σ, ε) with σ a face of K (possibly empty)
and ε a choice of endpoint ±1 for each coordinate outside σ. The cell is
the cube [−1,1]^σ × {ε}, so its dimension is |σ|.

Sign convention for boundaries: for σ = (i_1 < ... < i_k), the face that
pins i_j (1-based j) to the endpoint t ∈ {+1, −1} enters with coefficient
(−1)^(j−1)·t.
"""
from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass, field
from itertools import product

from .errors import ContractViolation, InvalidArgument, ResourceLimit, UnsupportedCase, VerificationFailure
from .intlinalg import FGAbelianGroup, IntMatrix, chain_homology, induced_map_on_homology
from .simplicial import SimplicialComplex, VertexPermutation, polygon_boundary
from . import words

__all__ = [
    "Cell",
    "CellComplex",
    "CellAction",
    "SurfaceReport",
    "CELL_CAP",
    "SIGMA_CAP",
    "build_rmac",
    "build_cc",
    "reflection_audit",
    "homology",
    "surface_report",
    "permutation_action",
    "rotation_action",
    "fixed_point_census",
    "quotient_complex",
    "sigma_on_h1",
    "rmac_cell_count",
]

CELL_CAP = 2_000_000
SIGMA_CAP = 9


@dataclass(frozen=True, order=True)
class Cell:
    """(σ, ε): ``eps`` lists the endpoints of the coordinates outside σ, ascending."""

    sigma: tuple
    eps: tuple

    @property
    def dim(self):
        return len(self.sigma)

    def coords(self, m):
        """Length-m tuple: 0 on σ, the endpoint elsewhere."""
        out, it = [], iter(self.eps)
        s = set(self.sigma)
        for i in range(1, m + 1):
            out.append(0 if i in s else next(it))
        return tuple(out)

    @classmethod
    def from_coords(cls, coords):
        sigma = tuple(i for i, c in enumerate(coords, start=1) if c == 0)
        eps = tuple(c for c in coords if c != 0)
        return cls(sigma, eps)

    @property
    def label(self):
        return ",".join(map(str, self.sigma)) + "|" + "".join("+" if e > 0 else "-" for e in self.eps)

    def __str__(self):
        return self.label


def _sort_key(cell):
    # (dim, sigma, eps read as a binary word with + before -)
    return (cell.dim, cell.sigma, tuple(0 if e > 0 else 1 for e in cell.eps))


class CellComplex:
    """Graded cells with integer boundary matrices ``D_k: C_k → C_{k-1}``.

    ``cells[k]`` is the ordered list of k-cells (any hashable labels) and
    ``boundaries[k]`` the matrix D_k, with D_0 the 0×c_0 zero matrix.
    """

    def __init__(self, cells, boundaries, kind="generic", source=None, cubical=False):
        self.cells = tuple(tuple(c) for c in cells)
        self.boundaries = tuple(boundaries)
        self.kind = kind
        self.source = source
        self.index = tuple({c: i for i, c in enumerate(cs)} for cs in self.cells)
        self._validate(cubical)

    def _validate(self, cubical):
        if len(self.boundaries) != len(self.cells):
            raise InvalidArgument("need one boundary matrix per dimension")
        for k, D in enumerate(self.boundaries):
            prev = len(self.cells[k - 1]) if k else 0
            if D.shape != (prev, len(self.cells[k])):
                raise InvalidArgument(f"D_{k} has shape {D.shape}, expected {(prev, len(self.cells[k]))}")
        for k in range(1, len(self.boundaries)):
            if not (self.boundaries[k - 1] @ self.boundaries[k]).is_zero():
                raise VerificationFailure(f"D_{k-1}·D_{k} is not zero")
        if cubical:
            for k, D in enumerate(self.boundaries):
                for col in D.columns():
                    if len(col) != 2 * k or any(abs(v) != 1 for v in col.values()):
                        raise VerificationFailure(f"a {k}-cell does not have 2k unit incidences")

    @property
    def dim(self):
        return len(self.cells) - 1

    def cell_counts(self):
        return tuple(len(c) for c in self.cells)

    def euler(self):
        return sum((-1) ** k * len(c) for k, c in enumerate(self.cells))

    def boundary(self, k):
        """D_k for any k; zero maps outside 0..dim."""
        if 0 <= k <= self.dim:
            return self.boundaries[k]
        rows = len(self.cells[k - 1]) if 0 <= k - 1 <= self.dim else 0
        cols = len(self.cells[k]) if 0 <= k <= self.dim else 0
        return IntMatrix.zeros(rows, cols)

    def homology(self):
        return homology(self)

    def label(self, k, i):
        c = self.cells[k][i]
        return c.label if hasattr(c, "label") else str(c)

    def to_json(self):
        return {
            "kind": self.kind,
            "cells": [[self.label(k, i) for i in range(len(cs))] for k, cs in enumerate(self.cells)],
            "boundaries": [
                {"rows": D.rows, "cols": D.cols, "entries": [list(t) for t in D.entries()]}
                for D in self.boundaries
            ],
        }

    def dumps(self, **kw):
        return json.dumps(self.to_json(), **kw)

    def __repr__(self):
        return f"CellComplex(kind={self.kind!r}, counts={self.cell_counts()})"


def rmac_cell_count(K):
    """Cells per dimension of Z_K(D¹,S⁰): f_{k-1}·2^(m−k)."""
    f = K.f_vector()
    return tuple(f[k] * 2 ** (K.m - k) for k in range(len(f)))


def _check_cap(total, cap):
    if total > cap:
        raise ResourceLimit(f"{total} cells exceed the cap of {cap}", cap=cap)


def build_rmac(K, cap=CELL_CAP):
    """The cubical complex Z_K(D¹,S⁰)."""
    counts = rmac_cell_count(K)
    _check_cap(sum(counts), cap)
    m = K.m
    cells = []
    for k in range(len(counts)):
        faces = [()] if k == 0 else K.faces_of_dim(k - 1)
        layer = [Cell(s, e) for s in faces for e in product((1, -1), repeat=m - k)]
        cells.append(layer)
    index = [{c: i for i, c in enumerate(layer)} for layer in cells]
    boundaries = [IntMatrix.zeros(0, len(cells[0]))]
    for k in range(1, len(cells)):
        entries = []
        for col, c in enumerate(cells[k]):
            coords = list(c.coords(m))
            for j, i in enumerate(c.sigma):
                for t in (1, -1):
                    coords[i - 1] = t
                    face = Cell.from_coords(coords)
                    entries.append((index[k - 1][face], col, (-1) ** j * t))
                coords[i - 1] = 0
        boundaries.append(IntMatrix.from_entries(len(cells[k - 1]), len(cells[k]), entries))
    return CellComplex(cells, boundaries, kind="rmac", source=K, cubical=True)


@dataclass(frozen=True, order=True)
class CubeFace:
    """C_{J⊂I}: coordinates 0 on J, 1 off I, free on I∖J, inside [0,1]^m."""

    I: tuple
    J: tuple

    @property
    def dim(self):
        return len(self.I) - len(self.J)

    @property
    def free(self):
        return tuple(i for i in self.I if i not in self.J)

    def label_for(self, m):
        s = set(self.I)
        z = set(self.J)
        return "".join("0" if i in z else "*" if i in s else "1" for i in range(1, m + 1))


def build_cc(K, cap=CELL_CAP):
    """The cubical complex cc(K) ⊂ [0,1]^m and its reflection audit."""
    total = sum(2 ** len(f) for f in K.faces) + 1
    _check_cap(total, cap)
    m = K.m
    by_dim = {}
    for I in [()] + list(K.faces):
        for mask in range(2 ** len(I)):
            J = tuple(v for b, v in enumerate(I) if mask >> b & 1)
            f = CubeFace(I, J)
            by_dim.setdefault(f.dim, []).append(f)
    cells = [sorted(by_dim[k], key=lambda f: (f.I, f.J)) for k in range(len(by_dim))]
    index = [{c: i for i, c in enumerate(layer)} for layer in cells]
    boundaries = [IntMatrix.zeros(0, len(cells[0]))]
    for k in range(1, len(cells)):
        entries = []
        for col, c in enumerate(cells[k]):
            for j, f in enumerate(c.free):
                sign = (-1) ** j
                top = CubeFace(tuple(v for v in c.I if v != f), c.J)
                bottom = CubeFace(c.I, tuple(sorted(c.J + (f,))))
                entries.append((index[k - 1][top], col, sign))
                entries.append((index[k - 1][bottom], col, -sign))
        boundaries.append(IntMatrix.from_entries(len(cells[k - 1]), len(cells[k]), entries))
    labelled = [[_Labelled(c, c.label_for(m)) for c in layer] for layer in cells]
    cc = CellComplex(labelled, boundaries, kind="cc", source=K, cubical=True)
    return cc, reflection_audit(K, cc)


@dataclass(frozen=True)
class _Labelled:
    face: CubeFace
    label: str

    def __str__(self):
        return self.label


def reflection_audit(K, cc=None):
    """Match each rmac cell (I, ε) with the cc cube C_{∅⊂I} it folds onto.

    Returns a summary dict; raises VerificationFailure if some cube does
    not receive exactly 2^(m−|I|) cells.
    """
    if cc is None:
        cc, _ = build_cc(K)
    m = K.m
    tops = {c.face.I for layer in cc.cells for c in layer if not c.face.J}
    preimages = {}
    for k, n_cells in enumerate(rmac_cell_count(K)):
        faces = [()] if k == 0 else K.faces_of_dim(k - 1)
        for s in faces:
            preimages[s] = preimages.get(s, 0) + 2 ** (m - k)
    bad = {I: preimages.get(I, 0) for I in tops if preimages.get(I, 0) != 2 ** (m - len(I))}
    if bad or set(preimages) != tops:
        raise VerificationFailure("reflection audit failed", mismatches=bad)
    return {
        "cubes": len(tops),
        "rmac_cells": sum(preimages.values()),
        "preimages_per_dim": {len(I): 2 ** (m - len(I)) for I in tops},
        "ok": True,
    }


def homology(C):
    """H_0, ..., H_dim of a cell complex."""
    return [chain_homology(C.boundary(k), C.boundary(k + 1)) for k in range(C.dim + 1)]


@dataclass(frozen=True)
class SurfaceReport:
    euler: int
    closed_orientable_surface: bool
    genus: int | None
    homology: tuple = field(default=(), compare=False)

    def to_json(self):
        return {
            "euler": self.euler,
            "closed_orientable_surface": self.closed_orientable_surface,
            "genus": self.genus,
            "homology": [g.to_json() for g in self.homology],
        }


def surface_report(C):
    H = homology(C)
    chi = C.euler()
    Z = FGAbelianGroup(1)
    ok = (
        C.dim == 2
        and H[0] == Z
        and H[2] == Z
        and H[1].is_free
        and H[1].rank % 2 == 0
        and chi == 2 - H[1].rank
    )
    return SurfaceReport(chi, ok, H[1].rank // 2 if ok else None, tuple(H))


# --------------------------------------------------------------------------
# group actions


class CellAction:
    """A cellular action of a cyclic group, given by its generator.

    ``maps[k][i] = (j, s)`` means the generator sends k-cell i to s times
    k-cell j.
    """

    def __init__(self, complex_, maps, order):
        self.complex = complex_
        self.maps = tuple(tuple(m) for m in maps)
        self.order = order

    def matrix(self, k):
        """Chain map F_k as a square matrix (zero-size outside 0..dim)."""
        if not 0 <= k <= self.complex.dim:
            return IntMatrix.zeros(0, 0)
        m = self.maps[k]
        return IntMatrix.from_entries(len(m), len(m), [(j, i, s) for i, (j, s) in enumerate(m)])

    def power(self, t):
        out = []
        for layer in self.maps:
            cur = [(i, 1) for i in range(len(layer))]
            for _ in range(t):
                cur = [(layer[j][0], s * layer[j][1]) for j, s in cur]
            out.append(cur)
        return CellAction(self.complex, out, self.order)

    def verify(self):
        """Check the chain-map identity and that the order-th power is the identity."""
        C = self.complex
        for k in range(1, C.dim + 1):
            if C.boundary(k) @ self.matrix(k) != self.matrix(k - 1) @ C.boundary(k):
                raise ContractViolation(f"action does not commute with D_{k}")
        top = self.power(self.order)
        for layer in top.maps:
            if any(j != i or s != 1 for i, (j, s) in enumerate(layer)):
                raise VerificationFailure("the generator's order-th power is not the identity")
        return True


def _parity(seq):
    seq = list(seq)
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


def permutation_action(C, perm):
    """The action of a vertex permutation preserving K on Z_K(D¹,S⁰).

    A cell (σ, ε) goes to (π(σ), ε∘π⁻¹); the sign is the parity of the
    reordering of the free coordinates.
    """
    K = C.source
    if C.kind != "rmac" or not isinstance(K, SimplicialComplex):
        raise InvalidArgument("permutation actions need a complex built by build_rmac")
    if not isinstance(perm, VertexPermutation):
        perm = VertexPermutation(tuple(perm))
    if not perm.preserves(K):
        raise InvalidArgument(f"{list(perm.image)} is not an automorphism of {K}")
    m = K.m
    maps = []
    for k, layer in enumerate(C.cells):
        out = []
        for c in layer:
            old = c.coords(m)
            new = [0] * m
            for i in range(1, m + 1):
                new[perm(i) - 1] = old[i - 1]
            image = Cell.from_coords(new)
            out.append((C.index[k][image], _parity(perm(i) for i in c.sigma)))
        maps.append(out)
    action = CellAction(C, maps, perm.order())
    action.verify()
    return action


def rotation_action(C, n=None):
    """The Z_n rotation i ↦ i+1 (mod n) on Z_K for a rotation-symmetric K on n vertices."""
    K = C.source
    if not isinstance(K, SimplicialComplex):
        raise InvalidArgument("rotation needs a complex built by build_rmac")
    n = K.m if n is None else n
    if n != K.m:
        raise InvalidArgument(f"n = {n} does not match the {K.m} vertices of K")
    return permutation_action(C, VertexPermutation.rotation(n))


def fixed_point_census(n):
    """Group the 2^n vertices of Z_{K_n} by their minimal rotation period."""
    if n < 3:
        raise InvalidArgument("census needs n ≥ 3")
    periods = {}
    for bits in product((1, -1), repeat=n):
        d = next(d for d in words.divisors(n) if bits[d:] + bits[:d] == bits)
        periods[d] = periods.get(d, 0) + 1
    out = []
    for d in sorted(periods):
        vertices = periods[d]
        orbits = vertices // d
        if orbits * d != vertices or orbits != words.moreau_count(d):
            raise VerificationFailure(f"period-{d} census disagrees with the Lyndon count",
                                      vertices=vertices, expected=words.moreau_count(d))
        out.append({"period": d, "vertices": vertices, "orbits": orbits, "stabilizer_order": n // d})
    return out


@dataclass(frozen=True)
class _Orbit:
    rep: object
    size: int

    @property
    def label(self):
        r = self.rep
        return "[" + (r.label if hasattr(r, "label") else str(r)) + "]"


def quotient_complex(C, action):
    """Orbit complex for an action that is free on cells of positive dimension.

    Each orbit is represented by its least-index cell; boundaries are the
    representative's incidences pushed to orbit classes with their signs.
    """
    reps, rel = [], []
    for k, layer in enumerate(action.maps):
        seen = [None] * len(layer)
        layer_reps = []
        for i in range(len(layer)):
            if seen[i] is not None:
                continue
            r = len(layer_reps)
            j, s, size = i, 1, 0
            while seen[j] is None:
                seen[j] = (r, s)
                size += 1
                j, t = layer[j]
                s *= t
            if j != i or (s != 1 and k == 0):
                raise VerificationFailure("orbit did not close up")
            if k > 0 and (size != action.order or s != 1):
                raise UnsupportedCase(f"a {k}-cell has a nontrivial stabilizer")
            layer_reps.append((i, size))
        reps.append(layer_reps)
        rel.append(seen)
    cells = [[_Orbit(C.cells[k][i], size) for i, size in layer] for k, layer in enumerate(reps)]
    boundaries = [IntMatrix.zeros(0, len(cells[0]))]
    for k in range(1, len(cells)):
        cols = C.boundary(k).columns()
        entries = []
        for col, (i, _) in enumerate(reps[k]):
            for f, a in cols[i].items():
                r, s = rel[k - 1][f]
                entries.append((r, col, a * s))
        boundaries.append(IntMatrix.from_entries(len(cells[k - 1]), len(cells[k]), entries))
    return CellComplex(cells, boundaries, kind="quotient", source=C.source)


@lru_cache(maxsize=16)
def sigma_on_h1(n, cap=SIGMA_CAP):
    """Matrix of the rotation on H_1(Z_{K_n}) in the fixed homology basis."""
    if n < 3:
        raise InvalidArgument("need n ≥ 3")
    if n > cap:
        raise ResourceLimit(f"sigma_on_h1 is capped at n ≤ {cap}", cap=cap)
    C = build_rmac(polygon_boundary(n))
    act = rotation_action(C)
    F = [act.matrix(k) for k in range(3)]
    D = [C.boundary(k) for k in range(4)]
    for k in (0, 2):
        Ak = induced_map_on_homology(D[k], D[k + 1], F[k], act.matrix(k - 1), act.matrix(k + 1))
        if Ak != IntMatrix.identity(1):
            raise VerificationFailure(f"rotation is not trivial on H_{k}", matrix=Ak.tolist())
    A = induced_map_on_homology(D[1], D[2], F[1], F[0], F[2])
    if A**n != IntMatrix.identity(A.rows):
        raise VerificationFailure("A^n is not the identity")
    # A^n = I forces det A = ±1 over the integers.
    return A
