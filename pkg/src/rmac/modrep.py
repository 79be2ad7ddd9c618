"""Z[Z_n]-module structure of H_1(Z_{K_n}) assembled from Lyndon word classes.

Each orbit class of a word w of length d contributes either an induced
module Ind_{Z_{n/d}}^{Z_n} N_w (when d < n) or ι(w) − 1 copies of the
regular module Z[Z_n] (when d = n). N_w has rank ι·n/d − 1 and the
generator of Z_{n/d} acts on it by :func:`action_matrix`.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .errors import InvalidArgument, VerificationFailure
from .intlinalg import IntMatrix, charpoly
from .polygon import genus_closed_form
from .words import WordClass, representatives

__all__ = [
    "ActionMatrix",
    "Summand",
    "H1Decomposition",
    "cycle_matrix",
    "action_matrix",
    "regular_module",
    "decompose_h1",
    "predicted_charpoly",
    "induced_block",
]

DECOMPOSE_RANGE = (3, 24)


def cycle_matrix(k):
    """Permutation matrix of the k-cycle e_i ↦ e_{i+1 mod k}."""
    return IntMatrix.from_entries(k, k, [((i + 1) % k, i, 1) for i in range(k)])


@dataclass(frozen=True)
class ActionMatrix:
    M: IntMatrix
    group_order: int
    n: int
    d: int
    iota: int

    @property
    def dim(self):
        return self.M.rows

    @property
    def is_sign(self):
        return self.M == IntMatrix([[-1]])


def action_matrix(n, d, iota):
    """Matrix of the Z_{n/d} generator on N_w for a word with |w| = d < n and ι(w) = iota.

    Built from ι copies of the (n/d)-cycle: drop the last basis vector and
    make the last column all −1.
    """
    if d <= 1 or n % d or d == n:
        raise InvalidArgument(f"need d | n with 1 < d < n, got n={n}, d={d}")
    if iota < 1:
        raise InvalidArgument("iota must be at least 1")
    k = n // d
    big = IntMatrix.block_diag(*[cycle_matrix(k)] * iota)
    size = iota * k - 1
    rows = [[big[i, j] for j in range(size)] for i in range(size)]
    for row in rows:
        row[-1] = -1
    M = IntMatrix(rows)
    if M**k != IntMatrix.identity(size):
        raise VerificationFailure(f"action matrix does not have order dividing {k}")
    return ActionMatrix(M, k, n, d, iota)


def regular_module(n, iota):
    """(ι−1) copies of Z[Z_n], as a block diagonal of n-cycles."""
    if iota < 2:
        raise InvalidArgument("regular summands need iota ≥ 2")
    M = IntMatrix.block_diag(*[cycle_matrix(n)] * (iota - 1))
    return ActionMatrix(M, n, n, n, iota)


def induced_block(a):
    """The Z_n generator on Ind_{Z_{n/d}}^{Z_n} N: d blocks cycled, M applied on wrap-around."""
    if a.d == a.n:
        return a.M
    r, d = a.dim, a.d
    entries = []
    for b in range(d - 1):
        entries.extend(((b + 1) * r + i, b * r + i, 1) for i in range(r))
    entries.extend((i, (d - 1) * r + j, v) for i, j, v in a.M.entries())
    return IntMatrix.from_entries(d * r, d * r, entries)


@dataclass(frozen=True)
class Summand:
    word_class: WordClass
    action: ActionMatrix

    @property
    def kind(self):
        return "regular" if self.word_class.is_regular else "induced"

    @property
    def copies(self):
        """Number of Z[Z_n] copies for a regular summand, else 1."""
        return self.word_class.iota - 1 if self.kind == "regular" else 1

    @property
    def rank(self):
        c = self.word_class
        return c.iota * c.n - c.d

    @property
    def module_label(self):
        n = self.word_class.n
        if self.kind == "regular":
            return f"Z[Z_{n}]"
        k = self.action.group_order
        coeff = "sign" if self.action.is_sign else f"Z^{self.action.dim}"
        return f"Ind_{{Z_{k}}}^{{Z_{n}}} {coeff}"

    def to_json(self):
        return {
            **self.word_class.to_json(),
            "kind": self.kind,
            "module": self.module_label,
            "copies": self.copies,
            "z_rank": self.rank,
            "action": self.action.M.tolist() if self.kind == "induced" else None,
        }


@dataclass(frozen=True)
class H1Decomposition:
    n: int
    summands: tuple
    total_rank: int

    def multiplicities(self):
        """``{module label: multiplicity}`` with regular copies pooled."""
        out = {}
        for s in self.summands:
            out[s.module_label] = out.get(s.module_label, 0) + s.copies
        return out

    def __str__(self):
        parts = []
        for label, k in self.multiplicities().items():
            if k == 0:
                continue
            parts.append(label if k == 1 else f"{k}·{label}")
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "n": self.n,
            "total_rank": self.total_rank,
            "decomposition": str(self),
            "multiplicities": self.multiplicities(),
            "summands": [s.to_json() for s in self.summands],
        }

    def table(self):
        """Aligned text table: Lyndon word, d, ι, orbit, summand, rank."""
        head = ("Lyndon word", "d", "ι", "Orbits", "summand", "Z-rank")
        rows = []
        for s in self.summands:
            c = s.word_class
            orbit = " ".join("(" + ",".join(map(str, f)) + ")" for f in c.orbit)
            label = s.module_label if s.copies == 1 else f"{s.copies}·{s.module_label}"
            rows.append((c.word.bits, str(c.d), str(c.iota), orbit, label, str(s.rank)))
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*head), fmt.format(*("-" * w for w in widths))]
        lines += [fmt.format(*r) for r in rows]
        lines.append(f"total rank {self.total_rank} = {str(self)}")
        return "\n".join(lines)


def decompose_h1(n):
    lo, hi = DECOMPOSE_RANGE
    if not lo <= n <= hi:
        raise InvalidArgument(f"decomposition supports {lo} ≤ n ≤ {hi}")
    summands = []
    for c in representatives(n):
        a = regular_module(n, c.iota) if c.is_regular else action_matrix(n, c.d, c.iota)
        summands.append(Summand(c, a))
    total = sum(s.rank for s in summands)
    if total != 2 * genus_closed_form(n):
        raise VerificationFailure("summand ranks do not add up to rank H_1", total=total,
                                  expected=2 * genus_closed_form(n))
    return H1Decomposition(n, tuple(summands), total)


def predicted_charpoly(dec):
    """Characteristic polynomial of the rotation on the assembled module."""
    out = poly.ONE
    for s in dec.summands:
        if s.kind == "regular":
            out = poly.mul(out, poly.power(poly.x_power_minus_one(dec.n), s.copies))
        else:
            out = poly.mul(out, poly.substitute_power(charpoly(s.action.M), s.word_class.d))
    return out
