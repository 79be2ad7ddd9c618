"""One test per acceptance criterion, each under its stated wall-clock budget."""
import random
import time
from contextlib import contextmanager

from rmac import cellcomplex as cc
from rmac.arith import divisors
from rmac.intlinalg import FGAbelianGroup, IntMatrix, charpoly, finite_order_charpoly, smith_normal_form
from rmac.modrep import action_matrix, decompose_h1, predicted_charpoly
from rmac.polygon import quotient_genus
from rmac.simplicial import (
    SimplicialComplex,
    automorphism_group,
    barycentric_subdivision,
    discrete_complex,
    polygon_boundary,
)
from rmac.spectral import R_count, cyclic_group_homology, e2_page, poincare_series, summand_homology
from rmac.words import count_L, lyndon_words, necklace_count, representatives

Z = FGAbelianGroup(1)
ZERO = FGAbelianGroup()


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


def polygon(n):
    return cc.build_rmac(polygon_boundary(n))


def test_c01_genus_oracle():
    with budget(30):
        for n in range(3, 9):
            report = cc.surface_report(polygon(n))
            assert report.closed_orientable_surface
            # 1 + (n-4)2^(n-3), doubled so n=3 stays integral
            assert 2 * report.genus == 2 + (n - 4) * 2 ** (n - 2)
    with budget(300):
        report = cc.surface_report(polygon(9))
        assert report.closed_orientable_surface and report.genus == 1 + 5 * 2**6


def test_c02_quotient_oracle():
    with budget(60):
        for n in range(3, 9):
            C = polygon(n)
            report = cc.surface_report(cc.quotient_complex(C, cc.rotation_action(C)))
            assert report.closed_orientable_surface
            assert report.genus == quotient_genus(n)
            if n == 6:
                assert report.genus == 2


def test_c03_homology_tables():
    with budget(10):
        assert cc.homology(polygon(5)) == [Z, FGAbelianGroup(10), Z]
        assert cc.homology(polygon(6)) == [Z, FGAbelianGroup(34), Z]


def test_c04_word_combinatorics():
    with budget(1):
        assert [str(w) for w in lyndon_words(6)] == [
            "000001", "000011", "000101", "000111", "001011",
            "001101", "001111", "010111", "011111",
        ]
        assert count_L(6, 2) == 4
        assert necklace_count(6) == 14
        for n in range(1, 17):
            assert sum(d * len(lyndon_words(d)) for d in divisors(n)) == 2**n


def test_c05_decomposition_tables():
    expected = {
        5: ({"Z[Z_5]": 2}, 10),
        6: ({"Ind_{Z_3}^{Z_6} Z^2": 1, "Ind_{Z_2}^{Z_6} sign": 2, "Z[Z_6]": 4}, 34),
        7: ({"Z[Z_7]": 14}, 98),
        8: ({"Ind_{Z_4}^{Z_8} Z^3": 1, "Ind_{Z_2}^{Z_8} sign": 3, "Z[Z_8]": 30}, 258),
        9: ({"Ind_{Z_3}^{Z_9} Z^2": 2, "Z[Z_9]": 70}, 642),
        10: ({"Ind_{Z_5}^{Z_10} Z^4": 1, "Ind_{Z_2}^{Z_10} sign": 4,
              "Ind_{Z_2}^{Z_10} Z^3": 2, "Z[Z_10]": 148}, 1538),
    }
    with budget(5):
        for n, (mult, rank) in expected.items():
            dec = decompose_h1(n)
            assert dec.multiplicities() == mult
            assert dec.total_rank == rank == 2 * (1 + (n - 4) * 2 ** (n - 3))


def test_c06_summand_homology_listing():
    expected = {
        8: {"{'zero': C4, 'odd': 0, 'even': C4}": 1,
            "{'zero': C2, 'odd': 0, 'even': C2}": 3,
            "{'zero': Z, 'odd': 0, 'even': 0}": 16,
            "{'zero': Z x Z, 'odd': 0, 'even': 0}": 7},
        10: {"{'zero': C5, 'odd': 0, 'even': C5}": 1,
             "{'zero': C2, 'odd': 0, 'even': C2}": 4,
             "{'zero': Z x C2, 'odd': 0, 'even': C2}": 2,
             "{'zero': Z, 'odd': 0, 'even': 0}": 40,
             "{'zero': Z x Z, 'odd': 0, 'even': 0}": 42,
             "{'zero': Z x Z x Z, 'odd': 0, 'even': 0}": 8},
    }
    with budget(5):
        for n, table in expected.items():
            got = {}
            for w in representatives(n):
                key = summand_homology(n, w.d, w.iota).sage_str()
                got[key] = got.get(key, 0) + 1
            assert got == table


def test_c07_e2_pages():
    def g(rank=0, *orders):
        return FGAbelianGroup.from_orders(orders, rank)

    pages = {
        6: {0: (Z, g(4, 2, 2, 3), Z), 1: (g(0, 6), ZERO, g(0, 6)),
            2: (ZERO, g(0, 2, 2, 3), ZERO), 3: (g(0, 6), ZERO, g(0, 6)),
            4: (ZERO, g(0, 2, 2, 3), ZERO)},
        8: {0: (Z, g(30, 2, 2, 2, 4), Z), 1: (g(0, 8), ZERO, g(0, 8)),
            2: (ZERO, g(0, 2, 2, 2, 4), ZERO), 3: (g(0, 8), ZERO, g(0, 8)),
            4: (ZERO, g(0, 2, 2, 2, 4), ZERO)},
    }
    with budget(10):
        for n, columns in pages.items():
            page = e2_page(n, max_p=4)
            for p, column in columns.items():
                assert tuple(page[p, q] for q in range(3)) == column
        assert e2_page(6)[0, 1].primary_str() == "Z^4 ⊕ (Z/2)^2 ⊕ Z/3"
        assert e2_page(8)[0, 1].primary_str() == "Z^30 ⊕ (Z/2)^3 ⊕ Z/4"
        for n in range(3, 13):
            assert e2_page(n, max_p=2)[1, 1] == ZERO


def test_c08_cross_action_agreement():
    cc.sigma_on_h1.cache_clear()
    with budget(120):
        for n in range(3, 9):
            A = cc.sigma_on_h1(n)
            dec = decompose_h1(n)
            assert finite_order_charpoly(A, n) == predicted_charpoly(dec)
            if n <= 6:
                assert charpoly(A) == predicted_charpoly(dec)
            total = cyclic_group_homology(n, IntMatrix.identity(0))
            for w in representatives(n):
                total = total.direct_sum(summand_homology(n, w.d, w.iota))
            assert cyclic_group_homology(n, A) == total


def test_c09_identity_audit():
    with budget(1):
        for n in range(3, 17):
            assert R_count(n) == 2 + 2 ** (n - 2) - necklace_count(n) == 2 * quotient_genus(n)
        assert poincare_series(6) == (1, 4, 1)
        assert poincare_series(8) == (1, 30, 1)


def test_c10_property_suites():
    with budget(120):
        complexes = [polygon_boundary(n) for n in range(3, 8)] + [
            discrete_complex(4),
            SimplicialComplex(4, ((1, 2), (2, 3), (1, 3), (3, 4))),
            SimplicialComplex(5, ((1, 2, 3), (3, 4), (4, 5))),
            barycentric_subdivision(polygon_boundary(3)),
        ]
        for K in complexes:
            built = [cc.build_rmac(K), cc.build_cc(K)[0]]
            for C in built:
                for k in range(1, C.dim + 1):
                    assert (C.boundary(k - 1) @ C.boundary(k)).is_zero()

        rng = random.Random(20261017)
        for _ in range(1000):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            A = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
            res = smith_normal_form(A)
            assert res.U @ A @ res.V == res.D
            assert abs(res.U.det()) == 1 and abs(res.V.det()) == 1
            diag = res.diagonal
            assert all(b % a == 0 for a, b in zip(diag, diag[1:]))

        for n in range(4, 13):
            for w in representatives(n):
                if w.d == n:
                    continue
                a = action_matrix(n, w.d, w.iota)
                res = smith_normal_form(a.M - IntMatrix.identity(a.dim))
                assert list(res.diagonal) == [1] * (a.dim - w.iota) + [n // w.d]
                assert res.rank == a.dim - (w.iota - 1)

        for n in range(3, 9):
            assert len(automorphism_group(polygon_boundary(n))) == 2 * n
