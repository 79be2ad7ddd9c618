import pytest

from rmac import cellcomplex as cc
from rmac.arith import divisors, totient
from rmac.errors import InvalidArgument
from rmac.polygon import (
    genus_closed_form,
    genus_recursion,
    hypercube_inclusion_check,
    hypercube_report,
    quotient_genus,
    riemann_hurwitz_audit,
)
from rmac.simplicial import polygon_boundary
from rmac.words import necklace_count


def test_genus_examples():
    assert [genus_closed_form(n) for n in (3, 4, 5, 6)] == [0, 1, 5, 17]
    with pytest.raises(InvalidArgument):
        genus_closed_form(2)


@pytest.mark.parametrize("n", range(3, 21))
def test_recursion_matches_closed_form(n):
    assert genus_recursion(n) == genus_closed_form(n)


def test_quotient_genus_examples():
    assert quotient_genus(3) == 0
    assert quotient_genus(6) == 2
    assert quotient_genus(8) == 15
    with pytest.raises(InvalidArgument):
        quotient_genus(2)


@pytest.mark.parametrize("n", range(3, 25))
def test_quotient_genus_via_necklaces(n):
    # the totient sum divided by n counts necklaces
    assert sum(totient(d) * 2 ** (n // d) for d in divisors(n)) == n * necklace_count(n)
    assert 2 * quotient_genus(n) == 2 + 2 ** (n - 2) - necklace_count(n)


@pytest.mark.parametrize("n", range(3, 8))
def test_closed_form_matches_cellular_genus(n):
    assert cc.surface_report(cc.build_rmac(polygon_boundary(n))).genus == genus_closed_form(n)


def test_riemann_hurwitz_n6():
    r = riemann_hurwitz_audit(6)
    assert (r.euler_total, r.euler_quotient, r.genus_total, r.genus_quotient) == (-32, -2, 17, 2)
    assert sum(t["branch_contribution"] for t in r.branch_terms) == 20
    assert r.cellular_quotient_genus == 2


def test_riemann_hurwitz_n3_and_n4():
    r = riemann_hurwitz_audit(3)
    assert r.euler_total == 2 and r.euler_quotient == 2
    assert [t["vertices"] for t in r.branch_terms if t["stabilizer_order"] == 3] == [2]
    assert riemann_hurwitz_audit(4).genus_quotient == 0


@pytest.mark.parametrize("n", range(3, 13))
def test_riemann_hurwitz_range(n):
    r = riemann_hurwitz_audit(n, cellular=False)
    assert r.euler_total == 2 - 2 * r.genus_total
    assert r.euler_quotient == 2 - 2 * r.genus_quotient
    assert r.genus_quotient == quotient_genus(n)


def test_riemann_hurwitz_bounds():
    with pytest.raises(InvalidArgument):
        riemann_hurwitz_audit(13)


def test_report_json():
    data = riemann_hurwitz_audit(5, cellular=False).to_json()
    assert data["n"] == 5 and data["genus_total"] == 5 and data["genus_quotient"] == 1


@pytest.mark.parametrize("n", range(3, 12))
def test_hypercube_reports(n):
    r = hypercube_report(n)
    assert (r["V"], r["E"], r["F"]) == (2**n, n * 2 ** (n - 1), n * 2 ** (n - 2))
    assert 2 * r["E"] == 4 * r["F"]
    assert r["euler"] == 2 - 2 * genus_closed_form(n)
    assert r["genus_lower_bound"] == genus_closed_form(n)
    assert r["quotient_upper_bound"] == quotient_genus(n)


def test_hypercube_examples():
    r = hypercube_report(3)
    assert (r["V"], r["E"], r["F"], r["euler"], r["genus"]) == (8, 12, 6, 2, 0)
    assert hypercube_report(4)["euler"] == 0
    assert hypercube_report(6)["genus_lower_bound"] == 17


@pytest.mark.parametrize("n", range(3, 8))
def test_inclusion_of_hypercube_graph(n):
    assert hypercube_inclusion_check(n)
