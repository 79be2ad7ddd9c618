"""Binary Lyndon words, necklaces and the word ↔ face correspondence.

Words are strings over ``"01"`` with 0 < 1. Code written for Sage's
``LyndonWords(2, d)`` uses the letters 1 < 2 instead; the translation is
1 ↦ 0 and 2 ↦ 1, so "positions of the letter 1" there are positions of 0
here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import comb, divisors, gcd, mobius, totient
from .errors import InvalidArgument, ResourceLimit

__all__ = [
    "LYNDON_CAP",
    "LyndonWord",
    "WordClass",
    "divisors",
    "mobius",
    "totient",
    "is_lyndon",
    "lyndon_words",
    "necklace_count",
    "moreau_count",
    "gap_number",
    "count_L",
    "face_from_word",
    "representatives",
    "grouped_representatives",
    "appendix_listing",
]

LYNDON_CAP = 24


def is_lyndon(bits):
    """True when ``bits`` is strictly smaller than each of its proper rotations."""
    return bool(bits) and all(bits < bits[i:] + bits[:i] for i in range(1, len(bits)))


@dataclass(frozen=True, order=True)
class LyndonWord:
    bits: str

    def __post_init__(self):
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise InvalidArgument(f"{self.bits!r} is not a non-empty binary word")
        if not is_lyndon(self.bits):
            raise InvalidArgument(f"{self.bits} is not a Lyndon word")

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits


@lru_cache(maxsize=None)
def _duval(d):
    out = []
    w = [0]
    while w:
        if len(w) == d:
            out.append("".join(map(str, w)))
        # extend periodically to length d, then bump the last letter below 1
        k = len(w)
        while len(w) < d:
            w.append(w[len(w) - k])
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] += 1
    return tuple(out)


def lyndon_words(d, cap=LYNDON_CAP):
    """All binary Lyndon words of length d in lexicographic order."""
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument(f"word length must be a positive integer, got {d}")
    if d > cap:
        raise ResourceLimit(f"Lyndon enumeration is capped at length {cap}", cap=cap)
    return [_trusted(b) for b in _duval(d)]


def _trusted(bits):
    w = object.__new__(LyndonWord)
    object.__setattr__(w, "bits", bits)
    return w


def moreau_count(n):
    """Number of binary Lyndon words of length n (aperiodic necklaces)."""
    if n < 1:
        raise InvalidArgument("n must be positive")
    total = sum(mobius(d) * 2 ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


def necklace_count(n):
    """Number of binary necklaces of length n."""
    if n < 1:
        raise InvalidArgument("n must be positive")
    total = sum(totient(d) * 2 ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


def gap_number(w):
    """ι(w): linear occurrences of ``01`` in w."""
    bits = w.bits if isinstance(w, LyndonWord) else str(w)
    return sum(1 for a, b in zip(bits, bits[1:]) if a == "0" and b == "1")


def count_L(n, k):
    """Number of Lyndon words of length n with exactly k occurrences of ``01``."""
    if n < 1 or k < 0:
        raise InvalidArgument("need n ≥ 1 and k ≥ 0")
    if k == 0:
        return 2 if n == 1 else 0
    total = sum(mobius(e) * comb(n // e, 2 * k // e) for e in divisors(gcd(n, k)))
    assert (2 * total) % n == 0
    return 2 * total // n


@dataclass(frozen=True)
class WordClass:
    word: LyndonWord
    n: int
    d: int
    iota: int
    face: tuple
    orbit: tuple

    @property
    def gap(self):
        """ι·n/d, the number of 0-blocks of the repeated word."""
        return self.iota * self.n // self.d

    @property
    def rank(self):
        """Z-rank contributed to H_1 by the whole orbit."""
        return self.d * (self.gap - 1)

    @property
    def is_regular(self):
        return self.d == self.n

    def to_json(self):
        return {
            "word": self.word.bits,
            "d": self.d,
            "iota": self.iota,
            "face": list(self.face),
            "orbit": [list(f) for f in self.orbit],
            "rank": self.rank,
        }


def face_from_word(w, n):
    """Face I of the repeated word w^(n/d) (positions of 0) and its rotation orbit."""
    if not isinstance(w, LyndonWord):
        w = LyndonWord(str(w))
    d = len(w)
    if n % d:
        raise InvalidArgument(f"word length {d} does not divide {n}")
    full = w.bits * (n // d)
    face = tuple(i + 1 for i, c in enumerate(full) if c == "0")
    orbit = tuple(tuple(sorted((v - 1 + s) % n + 1 for v in face)) for s in range(d))
    assert len(set(orbit)) == d
    return WordClass(w, n, d, gap_number(w), face, orbit)


def representatives(n):
    """One class per orbit of faces I ∉ K_n with nontrivial reduced homology of (K_n)_I.

    Words of every length d | n with 1 < d < n, and length-n words with ι > 1.
    Sorted by (d, ι) and lexicographically inside each group.
    """
    if n < 3:
        raise InvalidArgument("need n ≥ 3")
    out = []
    for d in divisors(n):
        if d == 1:
            continue
        for w in lyndon_words(d):
            iota = gap_number(w)
            if d < n or iota > 1:
                out.append(face_from_word(w, n))
    out.sort(key=lambda c: (c.d, c.iota, c.word.bits))
    return out


def grouped_representatives(n):
    """``{(d, ι): [WordClass, ...]}`` in ascending key order."""
    groups = {}
    for c in representatives(n):
        groups.setdefault((c.d, c.iota), []).append(c)
    return groups


def appendix_listing(n):
    """Plain-text class listing, one block per (d, ι), ending with the basis total."""
    lines, total = [], 0
    for (d, iota), classes in grouped_representatives(n).items():
        gap = iota * n // d
        lines.append(f"# of face: {len(classes)} , each has orbit_size: {d} , gap_number:  {gap}")
        for c in classes:
            lines.append("     " + str(list(c.face)))
        basis = len(classes) * d * (gap - 1)
        total += basis
        lines.append(f"number of basis:  {basis}")
    lines.append(f"Total number of basis elements in H_1:  {total}")
    lines.append("=" * 43)
    return "\n".join(lines)
