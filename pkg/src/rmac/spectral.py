"""Group homology of cyclic groups and the E²-page of X → EZ_n ×_{Z_n} X → BZ_n.

X = Z_{K_n}(D¹,S⁰). With σ the generator acting by a matrix M, the
periodic resolution gives

    H_0 = coker(I − M),   H_odd = ker(I − M)/im N,   H_even = ker N/im(I − M),

where N = I + M + ... + M^(m−1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors
from .errors import InvalidArgument, VerificationFailure
from .intlinalg import FGAbelianGroup, IntMatrix, chain_homology, smith_normal_form
from .modrep import action_matrix, regular_module
from .polygon import quotient_genus
from .words import count_L, grouped_representatives, lyndon_words, necklace_count

__all__ = [
    "CyclicHomology",
    "E2Page",
    "cyclic_group_homology",
    "summand_homology",
    "summand_closed_form",
    "e2_page",
    "poincare_series",
    "identity_audit",
    "r_count",
    "R_count",
    "smith_pattern",
    "torsion_prediction",
]

Z = FGAbelianGroup(1)
ZERO = FGAbelianGroup()


def _sage(g):
    if g.is_trivial:
        return "0"
    return " x ".join(["Z"] * g.rank + [f"C{d}" for d in g.invariant_factors])


@dataclass(frozen=True)
class CyclicHomology:
    h0: FGAbelianGroup
    h_odd: FGAbelianGroup
    h_even: FGAbelianGroup

    def degree(self, p):
        if p < 0:
            return ZERO
        if p == 0:
            return self.h0
        return self.h_odd if p % 2 else self.h_even

    def direct_sum(self, *others):
        return CyclicHomology(
            self.h0.direct_sum(*(o.h0 for o in others)),
            self.h_odd.direct_sum(*(o.h_odd for o in others)),
            self.h_even.direct_sum(*(o.h_even for o in others)),
        )

    def to_json(self):
        return {"zero": self.h0.to_json(), "odd": self.h_odd.to_json(), "even": self.h_even.to_json()}

    def sage_str(self):
        """Rendering in the ``{'zero': Z x C2, 'odd': 0, 'even': C2}`` style."""
        return f"{{'zero': {_sage(self.h0)}, 'odd': {_sage(self.h_odd)}, 'even': {_sage(self.h_even)}}}"

    def __str__(self):
        return f"(H_0 = {self.h0}, H_odd = {self.h_odd}, H_even = {self.h_even})"


def cyclic_group_homology(m, M):
    """H_*(Z_m; Z^r) for the module where the generator acts by ``M``."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix(M)
    if M.rows != M.cols:
        raise InvalidArgument("the action matrix must be square")
    if m < 1:
        raise InvalidArgument("group order must be positive")
    r = M.rows
    I = IntMatrix.identity(r)
    powers, P = [], I
    for _ in range(m):
        powers.append(P)
        P = P @ M
    if P != I:
        raise InvalidArgument(f"M^{m} is not the identity")
    T = I - M
    N = IntMatrix.zeros(r, r)
    for Pk in powers:
        N = N + Pk
    h0 = chain_homology(IntMatrix.zeros(0, r), T)
    h1 = chain_homology(T, N)
    h2 = chain_homology(N, T)
    # one more period of the resolution, computed rather than assumed
    h3 = chain_homology(T, N)
    h4 = chain_homology(N, T)
    if (h3, h4) != (h1, h2):
        raise VerificationFailure("periodic complex is not periodic", h1=h1, h2=h2, h3=h3, h4=h4)
    return CyclicHomology(h0, h1, h2)


def summand_closed_form(n, d, iota):
    if d < n:
        tors = FGAbelianGroup.cyclic(n // d)
        return CyclicHomology(FGAbelianGroup(iota - 1).direct_sum(tors), ZERO, tors)
    return CyclicHomology(FGAbelianGroup(iota - 1), ZERO, ZERO)


def summand_homology(n, d, iota):
    """H_*(Z_n; summand of a word class), closed form checked against the periodic complex.

    For d < n Shapiro's lemma reduces to Z_{n/d} acting on N_w.
    """
    if d <= 1 or n % d:
        raise InvalidArgument(f"need d | n with d > 1, got n={n}, d={d}")
    closed = summand_closed_form(n, d, iota)
    if d < n:
        a = action_matrix(n, d, iota)
    elif iota >= 2:
        a = regular_module(n, iota)
    else:
        return closed
    direct = cyclic_group_homology(a.group_order, a.M)
    if direct != closed:
        raise VerificationFailure(f"summand ({n},{d},{iota}) disagrees with its closed form",
                                  closed=str(closed), direct=str(direct))
    return direct


def r_count(d):
    """r_d = Σ_k (k − 1)·L(d, k)."""
    return sum((k - 1) * count_L(d, k) for k in range(1, d // 2 + 1))


def R_count(n):
    """R_n = Σ_{d | n, d > 1} r_d."""
    return sum(r_count(d) for d in divisors(n) if d > 1)


@dataclass(frozen=True)
class E2Page:
    n: int
    max_p: int
    entries: dict
    field: bool = False

    def __getitem__(self, pq):
        return self.entries.get(pq, ZERO)

    def to_json(self):
        return {
            "n": self.n,
            "max_p": self.max_p,
            "field": self.field,
            "entries": {f"{p},{q}": g.to_json() for (p, q), g in sorted(self.entries.items())},
        }

    def grid(self, primary=True):
        """Rows q = 2, 1, 0 top to bottom, columns p = 0..max_p."""
        show = (lambda g: g.primary_str()) if primary else str
        cells = {pq: show(g) for pq, g in self.entries.items()}
        width = max(len(s) for s in cells.values())
        lines = []
        for q in (2, 1, 0):
            row = [cells[(p, q)].ljust(width) for p in range(self.max_p + 1)]
            lines.append(f"q={q} | " + " | ".join(row))
        lines.append("      " + " | ".join(f"p={p}".ljust(width) for p in range(self.max_p + 1)))
        return "\n".join(lines)


def _row_term(q, p, n):
    if p == 0:
        return Z
    return FGAbelianGroup.cyclic(n) if p % 2 else ZERO


def e2_page(n, max_p=4, field=False):
    """E²_{p,q} = H_p(Z_n; H_q(X)) for 0 ≤ q ≤ 2 and 0 ≤ p ≤ max_p.

    With ``field=True`` coefficients are a field of characteristic 0 or
    prime to n; entries are then vector spaces recorded by their dimension.
    """
    if not 3 <= n <= 16:
        raise InvalidArgument("e2_page supports 3 ≤ n ≤ 16")
    if max_p < 2:
        raise InvalidArgument("max_p must be at least 2")
    parts = []
    for (d, iota), classes in grouped_representatives(n).items():
        h = summand_homology(n, d, iota)
        parts.extend([h] * len(classes))
    row1 = CyclicHomology(ZERO, ZERO, ZERO).direct_sum(*parts)
    if not row1.h_odd.is_trivial:
        raise VerificationFailure("E²_{1,1} is not zero", value=str(row1.h_odd))
    entries = {}
    for p in range(max_p + 1):
        if field:
            entries[(p, 0)] = entries[(p, 2)] = Z if p == 0 else ZERO
            entries[(p, 1)] = FGAbelianGroup(row1.h0.rank) if p == 0 else ZERO
        else:
            entries[(p, 0)] = entries[(p, 2)] = _row_term(0, p, n)
            entries[(p, 1)] = row1.degree(p)
    return E2Page(n, max_p, entries, field)


def poincare_series(n):
    """Coefficients (1, R_n, 1) of the Hilbert–Poincaré polynomial over a field."""
    R = e2_page(n, 2, field=True)[(0, 1)].rank
    if R != R_count(n):
        raise VerificationFailure("free rank of E²_{0,1} differs from R_n", page=R, formula=R_count(n))
    return (1, R, 1)


def identity_audit(n, cellular=None):
    """R_n = 2 + 2^(n−2) − necklace(n) = 2·quotient_genus(n), plus the cellular quotient for n ≤ 8."""
    if not 3 <= n <= 16:
        raise InvalidArgument("identity_audit supports 3 ≤ n ≤ 16")
    R = R_count(n)
    necklace_side = 2 + 2 ** (n - 2) - necklace_count(n)
    genus_side = 2 * quotient_genus(n)
    report = {"n": n, "R_n": R, "necklace_form": necklace_side, "twice_quotient_genus": genus_side}
    if cellular is None:
        cellular = n <= 8
    if cellular:
        from .cellcomplex import build_rmac, homology, quotient_complex, rotation_action
        from .simplicial import polygon_boundary

        C = build_rmac(polygon_boundary(n))
        report["quotient_h1_rank"] = homology(quotient_complex(C, rotation_action(C)))[1].rank
    values = {k: v for k, v in report.items() if k != "n"}
    if len(set(values.values())) != 1:
        raise VerificationFailure(f"identity audit failed for n={n}", **values)
    report["ok"] = True
    return report


def smith_pattern(n, d, iota):
    """Diagonal of SNF(M − I) for the action matrix and the expected 1…1, n/d, 0…0 pattern."""
    a = action_matrix(n, d, iota)
    res = smith_normal_form(a.M - IntMatrix.identity(a.dim))
    got = list(res.diagonal) + [0] * (a.dim - res.rank)
    ones = iota * (n // d - 1) - 1
    expected = [1] * ones + [n // d] + [0] * (iota - 1)
    return got, expected


def torsion_prediction(n):
    """⊕_{d | n, 1 < d < n} (Z_{n/d})^{|𝔏_d|}."""
    orders = []
    for d in divisors(n):
        if 1 < d < n:
            orders.extend([n // d] * len(lyndon_words(d)))
    return FGAbelianGroup.from_orders(orders)
