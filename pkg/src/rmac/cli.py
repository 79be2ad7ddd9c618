"""Command-line front end: ``rmac <verb> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
errors (bad flags, out-of-range arguments, exceeded caps).
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import cellcomplex as cc
from . import modrep, polygon, simplicial, spectral, words
from .errors import InvalidArgument, ResourceLimit, RmacError, VerificationFailure
from .intlinalg import FGAbelianGroup, finite_order_charpoly

__all__ = ["execute", "main", "verify"]

# Reference E² entries at (0,1) and (2,1), as rendered by primary_str.
_REFERENCE_PAGES = {
    6: ("Z^4 ⊕ (Z/2)^2 ⊕ Z/3", "(Z/2)^2 ⊕ Z/3"),
    8: ("Z^30 ⊕ (Z/2)^3 ⊕ Z/4", "(Z/2)^3 ⊕ Z/4"),
}


def _emit(obj):
    print(json.dumps(obj, sort_keys=False))


def _load_complex(args):
    if getattr(args, "complex", None):
        try:
            with open(args.complex, encoding="utf-8") as fh:
                return simplicial.SimplicialComplex.from_json(fh.read())
        except OSError as exc:
            raise InvalidArgument(f"cannot read {args.complex}: {exc}") from exc
    if args.n is None:
        raise InvalidArgument("give --n or --complex")
    return simplicial.polygon_boundary(args.n)


def _need_n(args):
    if args.n is None:
        raise InvalidArgument("--n is required")
    return args.n


# -- verbs -------------------------------------------------------------------


def cmd_genus(args):
    n = _need_n(args)
    if args.audit:
        _emit(polygon.riemann_hurwitz_audit(n).to_json())
        return 0
    out = {"n": n, "genus": polygon.genus_closed_form(n)}
    if args.quotient:
        out["quotient_genus"] = polygon.quotient_genus(n)
    print(json.dumps(out, separators=(",", ":")))
    return 0


def _groups_table(groups):
    return "\n".join(f"H_{k} = {g}" for k, g in enumerate(groups))


def cmd_homology(args):
    K = _load_complex(args)
    C = cc.build_rmac(K, cap=args.cell_cap)
    if args.quotient:
        C = cc.quotient_complex(C, cc.rotation_action(C))
    H = cc.homology(C)
    if args.json:
        _emit({"cells": list(C.cell_counts()), "homology": [g.to_json() for g in H]})
    else:
        print(f"cells per dimension: {', '.join(map(str, C.cell_counts()))}")
        print(_groups_table(H))
    return 0


def cmd_quotient(args):
    K = _load_complex(args)
    C = cc.build_rmac(K, cap=args.cell_cap)
    Q = cc.quotient_complex(C, cc.rotation_action(C))
    rep = cc.surface_report(Q)
    out = {"n": K.m, "cells": list(Q.cell_counts()), **rep.to_json()}
    if K == simplicial.polygon_boundary(K.m):
        out["formula_genus"] = polygon.quotient_genus(K.m)
    if args.json:
        _emit(out)
    else:
        print(f"quotient cells: {', '.join(map(str, Q.cell_counts()))}")
        print(_groups_table(rep.homology))
        print(f"euler characteristic: {rep.euler}")
        print(f"closed orientable surface: {'yes' if rep.closed_orientable_surface else 'no'}")
        if rep.genus is not None:
            print(f"genus: {rep.genus}")
    return 0


def cmd_words(args):
    n = _need_n(args)
    if args.json:
        _emit({
            "n": n,
            "classes": [
                {"d": d, "iota": i, "count": len(cl), "orbit_size": d, "gap_number": i * n // d,
                 "faces": [list(c.face) for c in cl], "basis": len(cl) * d * (i * n // d - 1)}
                for (d, i), cl in words.grouped_representatives(n).items()
            ],
            "total": 2 * polygon.genus_closed_form(n),
        })
    else:
        print(words.appendix_listing(n))
    return 0


def cmd_decompose(args):
    dec = modrep.decompose_h1(_need_n(args))
    if args.json:
        _emit(dec.to_json())
    else:
        print(dec.table())
    return 0


def cmd_e2(args):
    page = spectral.e2_page(_need_n(args), args.max_p, field=args.field)
    if args.json:
        _emit(page.to_json())
    else:
        print(page.grid())
    return 0


def cmd_poincare(args):
    n = _need_n(args)
    coeffs = spectral.poincare_series(n)
    if args.json:
        _emit({"n": n, "coefficients": list(coeffs)})
    else:
        print(f"{coeffs[0]} + {coeffs[1]}·t + {coeffs[2]}·t^2")
    return 0


def cmd_aut(args):
    K = _load_complex(args)
    group = simplicial.automorphism_group(K, cap=args.perm_cap)
    if args.json:
        _emit({"order": len(group), "permutations": [list(p.image) for p in group]})
    else:
        print(f"|Aut(K)| = {len(group)}")
        for p in group:
            print("  " + " ".join(map(str, p.image)))
    return 0


def cmd_dump(args):
    K = _load_complex(args)
    C = cc.build_cc(K, cap=args.cell_cap)[0] if args.cc else cc.build_rmac(K, cap=args.cell_cap)
    print(C.dumps())
    return 0


# -- verification driver -----------------------------------------------------


def _leg_genus(n, full):
    if not full:
        return None
    g = cc.surface_report(cc.build_rmac(simplicial.polygon_boundary(n))).genus
    want = polygon.genus_closed_form(n)
    if g != want or polygon.genus_recursion(n) != want:
        raise VerificationFailure("genus mismatch", cellular=g, formula=want)
    return f"genus {g}"


def _leg_quotient(n, full):
    if not full:
        return None
    C = cc.build_rmac(simplicial.polygon_boundary(n))
    g = cc.surface_report(cc.quotient_complex(C, cc.rotation_action(C))).genus
    want = polygon.quotient_genus(n)
    if g != want:
        raise VerificationFailure("quotient genus mismatch", cellular=g, formula=want)
    return f"quotient genus {g}"


def _leg_rh(n, full):
    rep = polygon.riemann_hurwitz_audit(n, cellular=full)
    return f"χ(X)={rep.euler_total}, χ(X/Z_{n})={rep.euler_quotient}"


def _leg_decomposition(n, full):
    dec = modrep.decompose_h1(n)
    if dec.total_rank != 2 * polygon.genus_closed_form(n):
        raise VerificationFailure("rank mismatch")
    if full:
        A = cc.sigma_on_h1(n)
        if finite_order_charpoly(A, n) != modrep.predicted_charpoly(dec):
            raise VerificationFailure("characteristic polynomials differ")
    return str(dec)


def _leg_group_homology(n, full):
    if not full:
        return None
    A = cc.sigma_on_h1(n)
    got = spectral.cyclic_group_homology(n, A)
    parts = [spectral.summand_homology(n, s.word_class.d, s.word_class.iota)
             for s in modrep.decompose_h1(n).summands]
    want = spectral.CyclicHomology(FGAbelianGroup(), FGAbelianGroup(), FGAbelianGroup()).direct_sum(*parts)
    if got != want:
        raise VerificationFailure("group homology mismatch", cellular=str(got), predicted=str(want))
    return str(got)


def _leg_e2(n, full):
    page = spectral.e2_page(n, 4)
    tors = spectral.torsion_prediction(n)
    expect01 = FGAbelianGroup(spectral.R_count(n)).direct_sum(tors)
    if page[(0, 1)] != expect01 or page[(2, 1)] != tors or not page[(1, 1)].is_trivial:
        raise VerificationFailure("E² row q=1 differs from its prediction")
    if n in _REFERENCE_PAGES:
        ref = _REFERENCE_PAGES[n]
        if (page[(0, 1)].primary_str(), page[(2, 1)].primary_str()) != ref:
            raise VerificationFailure("E² page differs from the reference page")
    return f"E²_(0,1) = {page[(0, 1)].primary_str()}"


def _leg_identity(n, full):
    rep = spectral.identity_audit(n, cellular=full)
    return f"R_n = {rep['R_n']}"


_LEGS = (
    ("genus oracle", _leg_genus),
    ("quotient oracle", _leg_quotient),
    ("Riemann-Hurwitz audit", _leg_rh),
    ("decomposition rank and charpoly", _leg_decomposition),
    ("group homology agreement", _leg_group_homology),
    ("E2 page comparison", _leg_e2),
    ("identity audit", _leg_identity),
)


def verify(n, depth="quick"):
    """Run every cross-check; returns a list of ``(name, status, detail, seconds)``."""
    if depth not in ("quick", "full"):
        raise InvalidArgument("depth must be quick or full")
    lo, hi = (3, 12) if depth == "quick" else (3, 8)
    if not lo <= n <= hi:
        raise InvalidArgument(f"{depth} verification supports {lo} ≤ n ≤ {hi}")
    full = depth == "full"
    out = []
    for name, leg in _LEGS:
        t0 = time.perf_counter()
        try:
            detail = leg(n, full)
            status = "SKIPPED" if detail is None else "PASS"
            detail = detail or "needs --depth full"
        except VerificationFailure as exc:
            status, detail = "FAIL", f"{exc} {exc.values}"
        out.append((name, status, detail, time.perf_counter() - t0))
    return out


def cmd_verify(args):
    n = _need_n(args)
    if args.depth is None:
        args.depth = "full" if n <= 8 else "quick"
    results = verify(n, args.depth)
    failed = any(r[1] == "FAIL" for r in results)
    # timings go to stderr so stdout stays byte-for-byte reproducible
    for i, (name, _, _, secs) in enumerate(results, 1):
        print(f"leg {i} ({name}): {secs:.2f}s", file=sys.stderr)
    if args.json:
        _emit({
            "n": n,
            "depth": args.depth,
            "legs": [{"name": r[0], "status": r[1], "detail": r[2]} for r in results],
            "passed": not failed,
        })
    else:
        width = max(len(r[0]) for r in results)
        for i, (name, status, detail, _) in enumerate(results, 1):
            print(f"{i}. {name.ljust(width)}  {status:<7}  {detail}")
        passed = sum(r[1] == "PASS" for r in results)
        skipped = sum(r[1] == "SKIPPED" for r in results)
        tail = f", {skipped} skipped" if skipped else ""
        print(f"{passed}/{len(results)} PASS{tail}" + (" (FAILURES)" if failed else ""))
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="polygon size / ring size")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    cplx = argparse.ArgumentParser(add_help=False)
    cplx.add_argument("--complex", metavar="PATH", help="simplicial complex JSON instead of the n-gon")
    cplx.add_argument("--cell-cap", type=int, default=cc.CELL_CAP, help="maximum number of cells")

    p = argparse.ArgumentParser(prog="rmac", description="Topology of real moment-angle complexes.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    s = sub.add_parser("genus", parents=[common], help="genus of Z_{K_n} and its quotient")
    s.add_argument("--quotient", action="store_true")
    s.add_argument("--audit", action="store_true", help="full Riemann-Hurwitz report")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("homology", parents=[common, cplx], help="cellular homology of Z_K")
    s.add_argument("--quotient", action="store_true", help="homology of the rotation quotient")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("quotient", parents=[common, cplx], help="surface report of Z_K/Z_n")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("words", parents=[common], help="Lyndon word classes and basis counts")
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("decompose", parents=[common], help="Z[Z_n]-module structure of H_1")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("e2-page", parents=[common], help="E2 page of the Borel fibration")
    s.add_argument("--max-p", type=int, default=4)
    s.add_argument("--field", action="store_true", help="field coefficients of characteristic prime to n")
    s.set_defaults(func=cmd_e2)

    s = sub.add_parser("poincare", parents=[common], help="Hilbert-Poincaré coefficients")
    s.set_defaults(func=cmd_poincare)

    s = sub.add_parser("aut", parents=[common, cplx], help="automorphism group of K")
    s.add_argument("--perm-cap", type=int, default=simplicial.AUTOMORPHISM_CAP)
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("verify", parents=[common], help="run all cross-checks")
    s.add_argument("--depth", choices=("quick", "full"), help="default: full for n ≤ 8, else quick")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("dump", parents=[common, cplx], help="cell complex as JSON")
    s.add_argument("--cc", action="store_true", help="dump cc(K) instead of Z_K")
    s.set_defaults(func=cmd_dump)
    return p


def execute(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (InvalidArgument, ResourceLimit) as exc:
        print(f"rmac {args.verb}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except RmacError as exc:
        print(f"rmac {args.verb}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(execute())
