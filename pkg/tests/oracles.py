"""Brute-force reference computations that share no code with the package.

Each function here is deliberately naive: dense lists, sympy for
integer normal forms, exhaustive enumeration for combinatorics.
"""
from itertools import combinations, permutations, product

import sympy
from sympy.matrices.normalforms import invariant_factors as _sympy_invariants


def snf_diagonal(rows):
    """Nonzero invariant factors (including 1s) via sympy."""
    if not rows or not rows[0]:
        return []
    M = sympy.Matrix(rows)
    return sorted(abs(int(x)) for x in _sympy_invariants(M, domain=sympy.ZZ) if x != 0)


def rank_q(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def homology_from_dense(d_k, d_k1, c_k):
    """(betti, torsion) of ker d_k / im d_k1 given dense boundary lists."""
    r_k = rank_q(d_k) if d_k else 0
    r_k1 = rank_q(d_k1) if d_k1 else 0
    tors = [d for d in snf_diagonal(d_k1) if d > 1] if d_k1 else []
    return c_k - r_k - r_k1, sorted(tors)


def all_faces(maximal):
    out = set()
    for f in maximal:
        for k in range(1, len(f) + 1):
            out.update(combinations(sorted(f), k))
    return out


def automorphisms(m, maximal):
    faces = {tuple(sorted(f)) for f in maximal}
    out = []
    for p in permutations(range(1, m + 1)):
        if {tuple(sorted(p[v - 1] for v in f)) for f in faces} == faces:
            out.append(p)
    return out


def simplicial_homology(m, maximal):
    """Betti numbers and torsion of |K| from the ordered-simplex chain complex."""
    faces = sorted(all_faces(maximal), key=lambda f: (len(f), f))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    idx = {k: {f: i for i, f in enumerate(v)} for k, v in by_dim.items()}

    def bd(k):
        if k == 0 or k > top:
            return None
        rows = [[0] * len(by_dim[k]) for _ in by_dim[k - 1]]
        for j, f in enumerate(by_dim[k]):
            for t in range(len(f)):
                rows[idx[k - 1][f[:t] + f[t + 1:]]][j] = (-1) ** t
        return rows

    return [homology_from_dense(bd(k), bd(k + 1), len(by_dim[k])) for k in range(top + 1)]


def is_lyndon(s):
    return all(s < s[i:] + s[:i] for i in range(1, len(s)))


def lyndon_bruteforce(d):
    return ["".join(b) for b in product("01", repeat=d) if is_lyndon("".join(b))]


def necklaces_bruteforce(n):
    return len({min("".join(b)[i:] + "".join(b)[:i] for i in range(n)) for b in product("01", repeat=n)})


def polygon_rmac_counts(n):
    """Cells of Z_{K_n} counted straight from the ±1/free coordinate description."""
    edges = {frozenset((i, i % n + 1)) for i in range(1, n + 1)}
    counts = [0, 0, 0]
    for coords in product((1, -1, 0), repeat=n):
        free = frozenset(i + 1 for i, c in enumerate(coords) if c == 0)
        if len(free) <= 1 or free in edges:
            counts[len(free)] += 1
    return counts


def cycle_action_charpoly(M):
    return sympy.Matrix(M).charpoly().all_coeffs()[::-1]
