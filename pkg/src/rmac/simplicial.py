"""Abstract simplicial complexes on the vertex set {1, ..., m}."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations

from .errors import InvalidArgument, ResourceLimit
from .intlinalg import FGAbelianGroup, IntMatrix, chain_homology

__all__ = [
    "SimplicialComplex",
    "VertexPermutation",
    "polygon_boundary",
    "discrete_complex",
    "full_subcomplex",
    "automorphism_group",
    "barycentric_subdivision",
    "homology_sphere_report",
    "SphereReport",
    "AUTOMORPHISM_CAP",
]

AUTOMORPHISM_CAP = 10


def _canonical_faces(vertex_count, faces):
    faces = {tuple(sorted(set(f))) for f in faces}
    for f in faces:
        if not f:
            raise InvalidArgument("maximal faces must be non-empty")
        if f[0] < 1 or f[-1] > vertex_count:
            raise InvalidArgument(f"face {list(f)} not inside [1..{vertex_count}]")
    sets = {f: frozenset(f) for f in faces}
    maximal = [f for f in faces if not any(sets[f] < sets[g] for g in faces)]
    return tuple(sorted(maximal, key=lambda f: (len(f), f)))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its maximal faces; ∅ is implicit.

    ``labels[i-1]`` records which vertex of a parent complex vertex ``i``
    came from when the complex was produced by :func:`full_subcomplex`.
    """

    vertex_count: int
    maximal_faces: tuple
    labels: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 1:
            raise InvalidArgument("vertex_count must be a positive integer")
        faces = _canonical_faces(self.vertex_count, self.maximal_faces)
        covered = {v for f in faces for v in f}
        missing = set(range(1, self.vertex_count + 1)) - covered
        if missing:
            raise InvalidArgument(f"vertices {sorted(missing)} lie in no face; declare them as singletons")
        object.__setattr__(self, "maximal_faces", faces)
        labels = self.labels
        if labels is None:
            labels = tuple(range(1, self.vertex_count + 1))
        elif len(labels) != self.vertex_count:
            raise InvalidArgument("labels must name every vertex")
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def m(self):
        return self.vertex_count

    @cached_property
    def faces(self):
        """All non-empty faces, sorted by dimension then lexicographically."""
        out = set()
        for f in self.maximal_faces:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return tuple(sorted(out, key=lambda f: (len(f), f)))

    @cached_property
    def _face_set(self):
        return frozenset(self.faces)

    def __contains__(self, face):
        face = tuple(sorted(face))
        return not face or face in self._face_set

    @property
    def dimension(self):
        return max(len(f) for f in self.maximal_faces) - 1

    def f_vector(self):
        """(f_{-1}, f_0, f_1, ...) with f_{-1} = 1 for the empty face."""
        counts = [1] + [0] * (self.dimension + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def faces_of_dim(self, k):
        return [f for f in self.faces if len(f) == k + 1]

    def degree(self, v):
        return sum(1 for f in self.faces if len(f) == 2 and v in f)

    def is_connected(self):
        parent = list(range(self.m + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.maximal_faces:
            for v in f[1:]:
                parent[find(v)] = find(f[0])
        return len({find(v) for v in range(1, self.m + 1)}) == 1

    def boundary_matrix(self, k):
        """Simplicial boundary C_k → C_{k-1} over ordered faces (k ≥ 0)."""
        cols = self.faces_of_dim(k)
        if k == 0:
            return IntMatrix.zeros(0, len(cols))
        rows = self.faces_of_dim(k - 1)
        index = {f: i for i, f in enumerate(rows)}
        entries = []
        for j, f in enumerate(cols):
            for t in range(len(f)):
                entries.append((index[f[:t] + f[t + 1:]], j, (-1) ** t))
        return IntMatrix.from_entries(len(rows), len(cols), entries)

    def homology(self):
        """Non-reduced integral homology H_0 ... H_dim."""
        top = self.dimension
        return [chain_homology(self.boundary_matrix(k), self.boundary_matrix(k + 1)) for k in range(top + 1)]

    def to_json(self):
        return {"vertices": self.m, "maximal_faces": [list(f) for f in self.maximal_faces]}

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise InvalidArgument(f"not valid JSON: {exc}") from exc
        if not isinstance(obj, dict) or set(obj) != {"vertices", "maximal_faces"}:
            raise InvalidArgument('expected {"vertices": m, "maximal_faces": [...]}')
        m, faces = obj["vertices"], obj["maximal_faces"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InvalidArgument("vertices must be a positive integer")
        if not isinstance(faces, list):
            raise InvalidArgument("maximal_faces must be a list")
        seen = set()
        for f in faces:
            if not isinstance(f, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
                raise InvalidArgument(f"face {f!r} is not a list of integers")
            if len(set(f)) != len(f):
                raise InvalidArgument(f"face {f} repeats a vertex")
            if any(v < 1 or v > m for v in f):
                raise InvalidArgument(f"face {f} has a vertex outside 1..{m}")
            key = tuple(sorted(f))
            if key in seen:
                raise InvalidArgument(f"face {f} listed twice")
            seen.add(key)
        return cls(m, tuple(tuple(f) for f in faces))

    def __str__(self):
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.maximal_faces)
        return f"K(m={self.m}: {body})"


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection of {1..m}; ``image[i-1]`` is the image of vertex i."""

    image: tuple

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InvalidArgument(f"{list(image)} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, m):
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def rotation(cls, n, shift=1):
        return cls(tuple((i - 1 + shift) % n + 1 for i in range(1, n + 1)))

    @property
    def m(self):
        return len(self.image)

    def __call__(self, v):
        return self.image[v - 1]

    def __matmul__(self, other):
        """Composition: (self @ other)(v) = self(other(v))."""
        return VertexPermutation(tuple(self(other(v)) for v in range(1, self.m + 1)))

    def inverse(self):
        inv = [0] * self.m
        for i, v in enumerate(self.image, start=1):
            inv[v - 1] = i
        return VertexPermutation(tuple(inv))

    def order(self):
        k, p, e = 1, self, VertexPermutation.identity(self.m)
        while p != e:
            p = p @ self
            k += 1
        return k

    def apply_face(self, face):
        return tuple(sorted(self(v) for v in face))

    def preserves(self, K):
        faces = set(K.maximal_faces)
        return self.m == K.m and all(self.apply_face(f) in faces for f in faces)


def polygon_boundary(n):
    """The boundary of an n-gon, K_n."""
    if not isinstance(n, int) or n < 3:
        raise InvalidArgument(f"a polygon needs n ≥ 3 vertices, got {n}")
    return SimplicialComplex(n, tuple(tuple(sorted((i, i % n + 1))) for i in range(1, n + 1)))


def discrete_complex(n):
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"need at least one point, got {n}")
    return SimplicialComplex(n, tuple((i,) for i in range(1, n + 1)))


def full_subcomplex(K, I):
    """K_I, re-indexed onto 1..|I|; ``labels`` keeps the original vertex names."""
    I = tuple(sorted(set(I)))
    if not I:
        raise InvalidArgument("the vertex subset must be non-empty")
    if I[0] < 1 or I[-1] > K.m:
        raise InvalidArgument(f"{list(I)} is not a subset of 1..{K.m}")
    new = {v: k for k, v in enumerate(I, start=1)}
    faces = {tuple(new[v] for v in f if v in new) for f in K.maximal_faces}
    faces.discard(())
    return SimplicialComplex(len(I), tuple(faces), labels=tuple(K.labels[v - 1] for v in I))


def _vertex_signature(K, v):
    sizes = sorted(len(f) for f in K.maximal_faces if v in f)
    return (K.degree(v), tuple(sizes))


def automorphism_group(K, cap=AUTOMORPHISM_CAP):
    """All vertex permutations carrying the maximal faces onto themselves.

    Backtracking search that only maps vertices to vertices with the same
    local signature and prunes as soon as an edge-adjacency fails.
    """
    if K.m > cap:
        raise ResourceLimit(f"automorphism search is capped at m ≤ {cap}; got m = {K.m}", cap=cap)
    m = K.m
    sig = {v: _vertex_signature(K, v) for v in range(1, m + 1)}
    adj = {v: set() for v in range(1, m + 1)}
    for f in K.faces:
        if len(f) == 2:
            adj[f[0]].add(f[1])
            adj[f[1]].add(f[0])
    faces = set(K.maximal_faces)
    out = []
    image = [0] * (m + 1)
    used = [False] * (m + 1)

    def extend(v):
        if v > m:
            perm = VertexPermutation(tuple(image[1:]))
            if all(perm.apply_face(f) in faces for f in faces):
                out.append(perm)
            return
        for w in range(1, m + 1):
            if used[w] or sig[w] != sig[v]:
                continue
            if any((image[u] in adj[w]) != (u in adj[v]) for u in range(1, v)):
                continue
            image[v], used[w] = w, True
            extend(v + 1)
            used[w] = False

    extend(1)
    return sorted(out, key=lambda p: p.image)


def barycentric_subdivision(K):
    """Vertices are the non-empty faces of K (in ``K.faces`` order); simplices are chains."""
    index = {f: i for i, f in enumerate(K.faces, start=1)}
    chains = set()
    for top in K.maximal_faces:
        for order in permutations(top):
            chains.add(tuple(sorted(index[tuple(sorted(order[:k]))] for k in range(1, len(top) + 1))))
    labels = tuple("{" + ",".join(map(str, f)) + "}" for f in K.faces)
    return SimplicialComplex(len(index), tuple(chains), labels=labels)


@dataclass(frozen=True)
class SphereReport:
    is_connected: bool
    homology: tuple
    matches_sphere: bool
    polygon_criterion: bool | None = None

    def to_json(self):
        out = {
            "is_connected": self.is_connected,
            "homology": [g.to_json() for g in self.homology],
            "matches_sphere": self.matches_sphere,
        }
        if self.polygon_criterion is not None:
            out["polygon_criterion"] = self.polygon_criterion
        return out


def homology_sphere_report(K, n):
    """Does K have the homology of S^{n-1}? For n = 2 also test the polygon shape."""
    if n < 1:
        raise InvalidArgument("sphere dimension index n must be at least 1")
    H = K.homology()
    expected = [FGAbelianGroup() for _ in range(max(len(H), n))]
    if n == 1:
        expected[0] = FGAbelianGroup(2)
    else:
        expected[0] = FGAbelianGroup(1)
        expected[n - 1] = FGAbelianGroup(1)
    padded = list(H) + [FGAbelianGroup()] * (len(expected) - len(H))
    matches = padded == expected
    polygon = None
    if n == 2:
        polygon = K.is_connected() and all(K.degree(v) == 2 for v in range(1, K.m + 1)) \
            and K.dimension == 1
        matches = matches and polygon
    return SphereReport(K.is_connected(), tuple(H), matches, polygon)
