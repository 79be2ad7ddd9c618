"""Genus formulas for Z_{K_n}, its rotation quotient and the hypercube graph."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors, totient
from .errors import InvalidArgument, VerificationFailure
from .simplicial import discrete_complex, polygon_boundary

__all__ = [
    "GenusReport",
    "genus_closed_form",
    "genus_recursion",
    "quotient_genus",
    "riemann_hurwitz_audit",
    "hypercube_report",
    "hypercube_inclusion_check",
]


def _need_polygon(n):
    if not isinstance(n, int) or n < 3:
        raise InvalidArgument(f"need an integer n ≥ 3, got {n!r}")


def genus_closed_form(n):
    """Genus of Z_{K_n}: 1 + (n−4)·2^(n−3)."""
    _need_polygon(n)
    return 1 + (n - 4) * 2 ** (n - 3)


def genus_recursion(n):
    """Same genus from g_3 = 0 and g_{m+1} = 2·g_m + 2^(m−2) − 1."""
    _need_polygon(n)
    g = 0
    for m in range(3, n):
        g = 2 * g + 2 ** (m - 2) - 1
    return g


def quotient_genus(n):
    """Genus of Z_{K_n}/Z_n: 1 + 2^(n−3) − (1/2n)·Σ_{d|n} φ(d)·2^(n/d)."""
    _need_polygon(n)
    s = sum(totient(d) * 2 ** (n // d) for d in divisors(n))
    if s % (2 * n):
        raise VerificationFailure("necklace sum is not divisible by 2n", n=n, total=s)
    return 1 + 2 ** (n - 3) - s // (2 * n)


@dataclass(frozen=True)
class GenusReport:
    n: int
    genus_total: int
    genus_quotient: int
    euler_total: int
    euler_quotient: int
    branch_terms: tuple
    cellular_quotient_genus: int | None = None

    def to_json(self):
        out = {
            "n": self.n,
            "genus_total": self.genus_total,
            "genus_quotient": self.genus_quotient,
            "euler_total": self.euler_total,
            "euler_quotient": self.euler_quotient,
            "branch_terms": [dict(t) for t in self.branch_terms],
        }
        if self.cellular_quotient_genus is not None:
            out["cellular_quotient_genus"] = self.cellular_quotient_genus
        return out


def riemann_hurwitz_audit(n, cellular=None):
    """χ(X) = n·χ(X/G) − Σ_x (n − n/n_x), solved for χ(X/G) and compared.

    Branch points are the vertices with nontrivial stabilizer, taken from
    the fixed-point census. With ``cellular`` (default: n ≤ 8) the quotient
    complex is also built and its genus compared.
    """
    from .cellcomplex import build_rmac, fixed_point_census, quotient_complex, rotation_action, surface_report

    if not 3 <= n <= 12:
        raise InvalidArgument("the audit covers 3 ≤ n ≤ 12")
    census = fixed_point_census(n)
    chi_total = (4 - n) * 2 ** (n - 2)
    g_total = genus_closed_form(n)
    if chi_total != 2 - 2 * g_total:
        raise VerificationFailure("Euler characteristic and genus disagree", euler=chi_total, genus=g_total)
    terms = []
    branch = 0
    for row in census:
        stab = row["stabilizer_order"]
        contrib = row["orbits"] * (n - n // stab)
        branch += contrib
        terms.append({**row, "branch_contribution": contrib})
    num = chi_total + branch
    if num % n:
        raise VerificationFailure("n does not divide χ(X) + branch sum", n=n, value=num)
    chi_q = num // n
    g_q = quotient_genus(n)
    if chi_q != 2 - 2 * g_q:
        raise VerificationFailure("Riemann–Hurwitz disagrees with the quotient-genus formula",
                                  euler_quotient=chi_q, formula_genus=g_q)
    cell_g = None
    if cellular is None:
        cellular = n <= 8
    if cellular:
        C = build_rmac(polygon_boundary(n))
        rep = surface_report(quotient_complex(C, rotation_action(C)))
        cell_g = rep.genus
        if not rep.closed_orientable_surface or cell_g != g_q or rep.euler != chi_q:
            raise VerificationFailure("cellular quotient disagrees with the formula",
                                      cellular_genus=cell_g, formula_genus=g_q)
    return GenusReport(n, g_total, g_q, chi_total, chi_q, tuple(terms), cell_g)


def hypercube_report(n):
    """Counts for the 2-cell embedding of the hypercube graph Q_n in Z_{K_n}."""
    _need_polygon(n)
    V, E, F = 2**n, n * 2 ** (n - 1), n * 2 ** (n - 2)
    euler = V - E + F
    g = genus_closed_form(n)
    if euler != 2 - 2 * g or 2 * E != 4 * F:
        raise VerificationFailure("hypercube counts are inconsistent", V=V, E=E, F=F)
    return {
        "n": n,
        "V": V,
        "E": E,
        "F": F,
        "euler": euler,
        "genus": g,
        "genus_lower_bound": 1 + (n - 4) * 2 ** (n - 3),
        "quotient_upper_bound": quotient_genus(n),
    }


def hypercube_inclusion_check(n):
    """Z_{L_n} (the graph Q_n) equals the 1-skeleton of Z_{K_n}, boundaries included."""
    from .cellcomplex import build_rmac

    _need_polygon(n)
    L = build_rmac(discrete_complex(n))
    K = build_rmac(polygon_boundary(n))
    return L.cells[:2] == K.cells[:2] and L.boundaries[:2] == K.boundaries[:2]
