from math import comb
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmac import arith
from rmac.errors import InvalidArgument, ResourceLimit
from rmac.words import (
    LyndonWord,
    appendix_listing,
    count_L,
    face_from_word,
    gap_number,
    grouped_representatives,
    is_lyndon,
    lyndon_words,
    moreau_count,
    necklace_count,
    representatives,
)

import oracles

DATA = Path(__file__).parent / "data"

L6 = ["000001", "000011", "000101", "000111", "001011", "001101", "001111", "010111", "011111"]


def test_lyndon_six():
    assert [str(w) for w in lyndon_words(6)] == L6
    assert moreau_count(6) == 9


def test_small_word_lists():
    assert [str(w) for w in lyndon_words(1)] == ["0", "1"]
    assert [str(w) for w in lyndon_words(2)] == ["01"]
    assert [str(w) for w in lyndon_words(4)] == ["0001", "0011", "0111"]
    assert len(lyndon_words(5)) == 6


@pytest.mark.parametrize("d", range(1, 15))
def test_lyndon_against_bruteforce(d):
    assert [str(w) for w in lyndon_words(d)] == oracles.lyndon_bruteforce(d)


@pytest.mark.parametrize("n", range(1, 17))
def test_witt_identity(n):
    assert sum(d * moreau_count(d) for d in arith.divisors(n)) == 2**n


@pytest.mark.parametrize("n", range(1, 15))
def test_necklaces(n):
    assert necklace_count(n) == oracles.necklaces_bruteforce(n)
    assert necklace_count(n) == sum(moreau_count(d) for d in arith.divisors(n))


def test_prime_lengths():
    for p in (3, 5, 7, 11, 13):
        assert moreau_count(p) == (2**p - 2) // p


def test_is_lyndon():
    assert is_lyndon("0011") and not is_lyndon("0101") and not is_lyndon("10")
    assert is_lyndon("0") and is_lyndon("1")
    with pytest.raises(InvalidArgument):
        LyndonWord("012")
    with pytest.raises(InvalidArgument):
        LyndonWord("0101")


@settings(max_examples=200)
@given(st.text("01", min_size=1, max_size=12))
def test_is_lyndon_matches_definition(s):
    assert is_lyndon(s) == oracles.is_lyndon(s)


def test_gap_numbers():
    assert gap_number("000111") == 1
    assert gap_number("001011") == 2
    assert gap_number("010111") == 2
    assert gap_number("01") == 1
    assert gap_number("0") == 0 and gap_number("1") == 0


def test_count_L_examples():
    assert count_L(6, 2) == 4
    assert count_L(6, 1) == 5
    assert count_L(6, 3) == 0  # 010101 is not primitive


@pytest.mark.parametrize("n", range(2, 17))
def test_count_L_against_enumeration(n):
    for k in range(0, n // 2 + 2):
        assert count_L(n, k) == sum(1 for w in lyndon_words(n) if gap_number(w) == k)


@pytest.mark.parametrize("n", range(2, 13))
def test_gap_sum_identity(n):
    for k in range(1, n // 2 + 1):
        total = sum((n // e) * count_L(n // e, k // e) for e in arith.divisors(arith.gcd(n, k)))
        assert total == 2 * comb(n, 2 * k)


def test_face_from_word_examples():
    assert face_from_word("01", 6).face == (1, 3, 5)
    assert face_from_word("001011", 6).face == (1, 2, 4)
    w = face_from_word("011", 6)
    assert w.face == (1, 4) and w.d == 3 and w.iota == 1
    assert len(w.orbit) == 3
    with pytest.raises(InvalidArgument):
        face_from_word("0011", 6)
    assert face_from_word("0", 6).face == (1, 2, 3, 4, 5, 6)


@pytest.mark.parametrize("n", range(3, 13))
def test_representative_orbits_cover_h1(n):
    total = sum(len(w.orbit) * (w.n // w.d * w.iota - 1) for w in representatives(n))
    assert total == 2 * (1 + (n - 4) * 2 ** (n - 3))
    for w in representatives(n):
        assert w.rank == len(w.orbit) * (w.n // w.d * w.iota - 1)


def test_representatives_are_sorted_and_exclude_trivial_words():
    reps = representatives(8)
    keys = [(w.d, w.iota, str(w.word)) for w in reps]
    assert keys == sorted(keys)
    assert all(w.iota * (8 // w.d) >= 2 for w in reps)
    assert [k for k in grouped_representatives(8)] == [(2, 1), (4, 1), (8, 2), (8, 3)]


@pytest.mark.parametrize("n", [8, 10])
def test_listing_golden(n):
    assert appendix_listing(n) + "\n" == (DATA / f"listing_n{n}.txt").read_text()


def test_caps():
    with pytest.raises(ResourceLimit):
        lyndon_words(25)
    with pytest.raises(InvalidArgument):
        lyndon_words(0)
