"""Exact integer linear algebra.

Matrices are stored sparsely, one ``{column: value}`` dict per row, with
Python integers throughout. Boundary matrices of cubical complexes have at
most a handful of nonzeros per column, so the Smith reduction works on the
sparse structure directly and records its elementary operations. Those
operation logs are what the homology-basis machinery replays.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass

import numpy as np

from . import poly
from .arith import divisors, factorize, ramanujan_sum, totient
from .errors import ContractViolation, InvalidArgument, UnsupportedCase, VerificationFailure

__all__ = [
    "IntMatrix",
    "SNFResult",
    "FGAbelianGroup",
    "HomologyBasis",
    "smith_normal_form",
    "invariant_factors",
    "matrix_rank",
    "chain_homology",
    "homology_basis",
    "induced_map_on_homology",
    "charpoly",
    "finite_order_charpoly",
]

_INT64_BUDGET = 2**62


class IntMatrix:
    """Immutable integer matrix with sparse row storage."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, data=(), rows=None, cols=None):
        data = [list(r) for r in data]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if not data and rows:
            data = [[0] * cols for _ in range(rows)]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise InvalidArgument(f"ragged or mis-sized data for a {rows}x{cols} matrix")
        out = []
        for r in data:
            d = {}
            for j, v in enumerate(r):
                if not isinstance(v, numbers.Integral):
                    raise InvalidArgument(f"non-integer entry {v!r}")
                if v:
                    d[j] = int(v)
            out.append(d)
        self.rows, self.cols, self._r = rows, cols, tuple(out)

    @classmethod
    def _wrap(cls, rows, cols, row_dicts):
        m = cls.__new__(cls)
        m.rows, m.cols, m._r = rows, cols, tuple(row_dicts)
        return m

    @classmethod
    def zeros(cls, rows, cols):
        return cls._wrap(rows, cols, [{} for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls._wrap(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def diag(cls, values, rows=None, cols=None):
        values = [int(v) for v in values]
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls._wrap(rows, cols, [({i: values[i]} if i < len(values) and values[i] else {})
                                      for i in range(rows)])

    @classmethod
    def from_entries(cls, rows, cols, entries):
        """Build from ``(i, j, value)`` triplets; repeated positions are summed."""
        rd = [{} for _ in range(rows)]
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise InvalidArgument(f"entry ({i},{j}) outside {rows}x{cols}")
            s = rd[i].get(j, 0) + int(v)
            if s:
                rd[i][j] = s
            else:
                rd[i].pop(j, None)
        return cls._wrap(rows, cols, rd)

    @classmethod
    def from_columns(cls, rows, columns):
        """Build from a list of sparse column dicts ``{row: value}``."""
        rd = [{} for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rd[i][j] = int(v)
        return cls._wrap(rows, len(columns), rd)

    @classmethod
    def from_numpy(cls, arr):
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise InvalidArgument("expected a 2-d array")
        rd = [{} for _ in range(arr.shape[0])]
        for i, j in zip(*np.nonzero(arr)):
            rd[int(i)][int(j)] = int(arr[i, j])
        return cls._wrap(arr.shape[0], arr.shape[1], rd)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return sum(len(r) for r in self._r)

    def __getitem__(self, ij):
        i, j = ij
        return self._r[i].get(j, 0)

    def row(self, i):
        return dict(self._r[i])

    def columns(self):
        """Sparse column dicts."""
        cols = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._r):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def entries(self):
        for i, r in enumerate(self._r):
            for j in sorted(r):
                yield i, j, r[j]

    def tolist(self):
        out = []
        for r in self._r:
            row = [0] * self.cols
            for j, v in r.items():
                row[j] = v
            out.append(row)
        return out

    def to_numpy(self, dtype=object):
        arr = np.zeros((self.rows, self.cols), dtype=dtype)
        for i, r in enumerate(self._r):
            for j, v in r.items():
                arr[i, j] = v
        return arr

    def max_abs(self):
        return max((abs(v) for r in self._r for v in r.values()), default=0)

    def is_zero(self):
        return not any(self._r)

    def transpose(self):
        rd = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._r):
            for j, v in r.items():
                rd[j][i] = v
        return IntMatrix._wrap(self.cols, self.rows, rd)

    T = property(transpose)

    def submatrix(self, row_idx, col_idx):
        col_pos = {c: k for k, c in enumerate(col_idx)}
        rd = []
        for i in row_idx:
            rd.append({col_pos[j]: v for j, v in self._r[i].items() if j in col_pos})
        return IntMatrix._wrap(len(row_idx), len(col_idx), rd)

    def apply(self, vec):
        """Multiply by a sparse vector ``{index: value}``; returns a sparse dict."""
        out = {}
        for i, r in enumerate(self._r):
            s = 0
            for j, v in r.items():
                x = vec.get(j)
                if x:
                    s += v * x
            if s:
                out[i] = s
        return out

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._r == other._r

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._r)))

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f"IntMatrix({self.tolist()})"
        return f"IntMatrix(<{self.rows}x{self.cols}, nnz={self.nnz}>)"

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise InvalidArgument(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._same_shape(other)
        rd = []
        for a, b in zip(self._r, other._r):
            d = dict(a)
            for j, v in b.items():
                s = d.get(j, 0) + v
                if s:
                    d[j] = s
                else:
                    d.pop(j, None)
            rd.append(d)
        return IntMatrix._wrap(self.rows, self.cols, rd)

    def __neg__(self):
        return IntMatrix._wrap(self.rows, self.cols, [{j: -v for j, v in r.items()} for r in self._r])

    def __sub__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        k = int(k)
        if k == 0:
            return IntMatrix.zeros(self.rows, self.cols)
        return IntMatrix._wrap(self.rows, self.cols, [{j: k * v for j, v in r.items()} for r in self._r])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InvalidArgument(f"cannot multiply {self.shape} by {other.shape}")
        dense_work = self.rows * self.cols * other.cols
        if dense_work >= 200_000 and self.nnz * 20 > self.rows * self.cols:
            bound = self.max_abs() * other.max_abs() * max(self.cols, 1)
            if bound < _INT64_BUDGET:
                prod = self.to_numpy(np.int64) @ other.to_numpy(np.int64)
                return IntMatrix.from_numpy(prod)
        B = other._r
        rd = []
        for r in self._r:
            acc = {}
            for k, a in r.items():
                for j, b in B[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            rd.append({j: v for j, v in acc.items() if v})
        return IntMatrix._wrap(self.rows, other.cols, rd)

    def __pow__(self, k):
        if self.rows != self.cols:
            raise InvalidArgument("only square matrices have powers")
        if k < 0:
            raise InvalidArgument("negative powers are not supported")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self):
        if self.rows != self.cols:
            raise InvalidArgument("trace of a non-square matrix")
        return sum(r.get(i, 0) for i, r in enumerate(self._r))

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InvalidArgument("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            akk = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            prev = akk
        return sign * a[n - 1][n - 1] if n else 1

    @staticmethod
    def block_diag(*blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        rd, off = [], 0
        for b in blocks:
            for r in b._r:
                rd.append({j + off: v for j, v in r.items()})
            off += b.cols
        return IntMatrix._wrap(rows, cols, rd)


# --------------------------------------------------------------------------
# finitely generated abelian groups


def _invariant_from_orders(orders):
    primes = {}
    for q in orders:
        for p, e in factorize(q).items():
            primes.setdefault(p, []).append(e)
    if not primes:
        return ()
    length = max(len(es) for es in primes.values())
    factors = [1] * length
    for p, es in primes.items():
        es = sorted(es, reverse=True)
        for i, e in enumerate(es):
            factors[i] *= p**e
    return tuple(sorted(factors))


@dataclass(frozen=True)
class FGAbelianGroup:
    """Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk with d1 | d2 | ... | dk, every di ≥ 2."""

    rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if self.rank < 0:
            raise InvalidArgument("rank must be non-negative")
        if any(d < 2 for d in fs):
            raise InvalidArgument(f"invariant factors must be at least 2, got {list(fs)}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise InvalidArgument(f"invariant factors {list(fs)} do not form a divisibility chain")

    @classmethod
    def from_orders(cls, orders=(), rank=0):
        """Canonical form of Z^rank ⊕ ⊕ Z/q; an order 0 contributes a free Z, 1 is dropped."""
        orders = [int(q) for q in orders]
        if any(q < 0 for q in orders):
            raise InvalidArgument("cyclic orders must be non-negative")
        rank += sum(1 for q in orders if q == 0)
        return cls(rank, _invariant_from_orders([q for q in orders if q > 1]))

    @classmethod
    def free(cls, rank):
        return cls(rank)

    @classmethod
    def cyclic(cls, q):
        return cls.from_orders([q])

    def direct_sum(self, *others):
        orders = list(self.invariant_factors)
        rank = self.rank
        for g in others:
            orders.extend(g.invariant_factors)
            rank += g.rank
        return FGAbelianGroup.from_orders(orders, rank)

    __add__ = direct_sum

    def __mul__(self, k):
        if not isinstance(k, numbers.Integral) or k < 0:
            return NotImplemented
        return FGAbelianGroup.from_orders(list(self.invariant_factors) * k, self.rank * k)

    __rmul__ = __mul__

    def elementary_divisors(self):
        out = []
        for d in self.invariant_factors:
            out.extend(p**e for p, e in factorize(d).items())
        return tuple(sorted(out))

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.invariant_factors

    @property
    def is_free(self):
        return not self.invariant_factors

    @property
    def torsion_order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " ⊕ ".join(parts)

    def primary_str(self):
        """Render with torsion split into prime powers, e.g. ``Z^4 ⊕ (Z/2)^2 ⊕ Z/3``."""
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        counts = {}
        for q in self.elementary_divisors():
            counts[q] = counts.get(q, 0) + 1
        for q in sorted(counts):
            c = counts[q]
            parts.append(f"Z/{q}" if c == 1 else f"(Z/{q})^{c}")
        return " ⊕ ".join(parts)

    def to_json(self):
        return {"rank": self.rank, "invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(int(obj["rank"]), tuple(obj["invariant_factors"]))
        except (KeyError, TypeError) as exc:
            raise InvalidArgument(f"malformed group JSON: {obj!r}") from exc


# --------------------------------------------------------------------------
# sparse Smith reduction


def _vadd(vec, src, q):
    """vec += q * src for sparse dicts."""
    for j, v in src.items():
        s = vec.get(j, 0) + q * v
        if s:
            vec[j] = s
        else:
            vec.pop(j, None)


class _Reducer:
    """In-place sparse Smith reduction with optional operation logs.

    Row operation ``("a", dst, src, q)`` means row_dst += q·row_src and
    column operation ``("a", dst, src, q)`` means col_dst += q·col_src.
    ``("n", i)`` negates a row (or column). No swaps are performed; pivots
    are tracked by position.
    """

    def __init__(self, nrows, ncols, row_dicts, log_rows=False, log_cols=False):
        self.nrows, self.ncols = nrows, ncols
        self.R = [dict(r) for r in row_dicts]
        self.C = [{} for _ in range(ncols)]
        for i, r in enumerate(self.R):
            for j, v in r.items():
                self.C[j][i] = v
        self.row_log = [] if log_rows else None
        self.col_log = [] if log_cols else None
        self.pivots = []  # (row, col, value)

    def _set(self, i, j, v):
        if v:
            self.R[i][j] = v
            self.C[j][i] = v
        else:
            self.R[i].pop(j, None)
            self.C[j].pop(i, None)

    def add_row(self, dst, src, q):
        if not q:
            return
        row_d = self.R[dst]
        for j, v in list(self.R[src].items()):
            self._set(dst, j, row_d.get(j, 0) + q * v)
        if self.row_log is not None:
            self.row_log.append(("a", dst, src, q))

    def add_col(self, dst, src, q):
        if not q:
            return
        col_d = self.C[dst]
        for i, v in list(self.C[src].items()):
            self._set(i, dst, col_d.get(i, 0) + q * v)
        if self.col_log is not None:
            self.col_log.append(("a", dst, src, q))

    def neg_row(self, i):
        for j in list(self.R[i]):
            self._set(i, j, -self.R[i][j])
        if self.row_log is not None:
            self.row_log.append(("n", i))

    def _choose_pivot(self):
        best, best_key = None, None
        for i, r in enumerate(self.R):
            for j, v in r.items():
                key = (abs(v), (len(r) - 1) * (len(self.C[j]) - 1), i, j)
                if best_key is None or key < best_key:
                    best, best_key = (i, j), key
                    if key[0] == 1 and key[1] == 0:
                        return best
        return best

    def _eliminate(self, i, j):
        """Reduce until (i, j) is the only nonzero in its row and column."""
        while True:
            p = self.R[i][j]
            moved = False
            for k in sorted(self.C[j]):
                if k == i:
                    continue
                q = self.C[j][k] // p
                self.add_row(k, i, -q)
                if self.C[j].get(k):
                    moved = True
            if moved:
                i, j = self._min_in_col(j)
                continue
            p = self.R[i][j]
            for l in sorted(self.R[i]):
                if l == j:
                    continue
                q = self.R[i][l] // p
                self.add_col(l, j, -q)
                if self.R[i].get(l):
                    moved = True
            if moved:
                i, j = self._min_in_row(i)
                continue
            return i, j

    def _min_in_col(self, j):
        i = min(self.C[j], key=lambda k: (abs(self.C[j][k]), k))
        return i, j

    def _min_in_row(self, i):
        j = min(self.R[i], key=lambda l: (abs(self.R[i][l]), l))
        return i, j

    def run(self):
        while True:
            pos = self._choose_pivot()
            if pos is None:
                break
            i, j = self._eliminate(*pos)
            if self.R[i][j] < 0:
                self.neg_row(i)
            self.pivots.append((i, j, self.R[i][j]))
            # detach the finished pivot so it is never chosen again
            self.R[i].pop(j)
            self.C[j].pop(i)
        self._fix_divisibility()
        return self

    def _fix_divisibility(self):
        piv = sorted(self.pivots, key=lambda t: (t[2], t[0], t[1]))
        piv = [list(t) for t in piv]
        changed = True
        while changed:
            changed = False
            for a in range(len(piv)):
                for b in range(a + 1, len(piv)):
                    ia, ja, da = piv[a]
                    ib, jb, db = piv[b]
                    if db % da == 0:
                        continue
                    self._set(ia, ja, da)
                    self._set(ib, jb, db)
                    self.add_row(ia, ib, 1)
                    i1, j1 = self._eliminate(ia, ja) if self.R[ia].get(ja) else self._eliminate(*self._min_in_row(ia))
                    if self.R[i1][j1] < 0:
                        self.neg_row(i1)
                    g = self.R[i1][j1]
                    self.R[i1].pop(j1)
                    self.C[j1].pop(i1)
                    # the remaining entry of the 2x2 block
                    (i2,) = [x for x in (ia, ib) if x != i1]
                    (j2,) = [y for y in (ja, jb) if y != j1]
                    if self.R[i2][j2] < 0:
                        self.neg_row(i2)
                    l = self.R[i2][j2]
                    self.R[i2].pop(j2)
                    self.C[j2].pop(i2)
                    if any(self.R[x] for x in (ia, ib)) or any(self.C[y] for y in (ja, jb)):
                        raise VerificationFailure("divisibility fix-up leaked outside its 2x2 block")
                    piv[a] = [i1, j1, g]
                    piv[b] = [i2, j2, l]
                    changed = True
            piv.sort(key=lambda t: (t[2], t[0], t[1]))
        self.pivots = [tuple(t) for t in piv]


def _identity_replay(n, log, rows):
    """Materialize the product of a row log (rows=True) or column log as a matrix."""
    M = [{i: 1} for i in range(n)]
    if rows:
        for op in log:
            if op[0] == "a":
                _, dst, src, q = op
                _vadd(M[dst], M[src], q)
            else:
                M[op[1]] = {j: -v for j, v in M[op[1]].items()}
        return IntMatrix._wrap(n, n, M)
    # columns: keep column dicts, transpose at the end
    for op in log:
        if op[0] == "a":
            _, dst, src, q = op
            _vadd(M[dst], M[src], q)
        else:
            M[op[1]] = {j: -v for j, v in M[op[1]].items()}
    return IntMatrix._wrap(n, n, M).transpose()


@dataclass(frozen=True)
class SNFResult:
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariant_factors: tuple
    rank: int

    @property
    def diagonal(self):
        return tuple(self.D[i, i] for i in range(self.rank))


def smith_normal_form(A):
    """Smith normal form with unimodular transforms, ``U @ A @ V == D``.

    The product identity is re-checked before returning.
    """
    red = _Reducer(A.rows, A.cols, A._r, log_rows=True, log_cols=True).run()
    n = len(red.pivots)
    row_order = [p[0] for p in red.pivots]
    col_order = [p[1] for p in red.pivots]
    used_r, used_c = set(row_order), set(col_order)
    row_order += [i for i in range(A.rows) if i not in used_r]
    col_order += [j for j in range(A.cols) if j not in used_c]
    U0 = _identity_replay(A.rows, red.row_log, rows=True)
    V0 = _identity_replay(A.cols, red.col_log, rows=False)
    U = IntMatrix._wrap(A.rows, A.rows, [U0._r[i] for i in row_order])
    V = V0.submatrix(range(A.cols), col_order)
    diag = [p[2] for p in red.pivots]
    D = IntMatrix.diag(diag, A.rows, A.cols)
    if U @ A @ V != D:
        raise VerificationFailure("U·A·V differs from D after Smith reduction")
    return SNFResult(D, U, V, tuple(d for d in diag if d > 1), n)


def _diagonal_of(A):
    red = _Reducer(A.rows, A.cols, A._r).run()
    return [p[2] for p in red.pivots]


def invariant_factors(A):
    """Nontrivial invariant factors of ``A`` (no transforms are built)."""
    return tuple(d for d in _diagonal_of(A) if d > 1)


def matrix_rank(A):
    return len(_diagonal_of(A))


# --------------------------------------------------------------------------
# homology


def _check_pair(d_k, d_k1):
    if d_k.cols != d_k1.rows:
        raise InvalidArgument(f"boundary shapes {d_k.shape} and {d_k1.shape} do not compose")
    if not (d_k @ d_k1).is_zero():
        raise ContractViolation("consecutive boundary maps do not compose to zero")


class HomologyBasis:
    """A fixed basis of the free part of ker D_k / im D_{k+1}.

    Cycles come from the kernel columns of V in SNF(D_k), in ascending
    SNF column order, then reduced modulo the image of D_{k+1}.
    """

    def __init__(self, d_k, d_k1):
        _check_pair(d_k, d_k1)
        self.size = d_k.cols
        red = _Reducer(d_k.rows, d_k.cols, d_k._r, log_cols=True).run()
        self._col_log = red.col_log
        pivot_cols = {p[1] for p in red.pivots}
        self._pivot_cols = pivot_cols
        self._kernel_cols = [c for c in range(d_k.cols) if c not in pivot_cols]
        # V^{-1}·D_{k+1}: column op on D_k is the inverse row op here
        X = [dict(r) for r in d_k1._r]
        for op in self._col_log:
            if op[0] == "a":
                _, dst, src, q = op
                _vadd(X[src], X[dst], -q)
            else:
                X[op[1]] = {j: -v for j, v in X[op[1]].items()}
        if any(X[c] for c in pivot_cols):
            raise VerificationFailure("boundaries have components outside the kernel")
        C = [X[c] for c in self._kernel_cols]
        red2 = _Reducer(len(C), d_k1.cols, C, log_rows=True).run()
        self._row_log = red2.row_log
        pivot_rows = {p[0] for p in red2.pivots}
        self._free_rows = [i for i in range(len(C)) if i not in pivot_rows]
        self.group = FGAbelianGroup(len(self._free_rows), tuple(p[2] for p in red2.pivots if p[2] > 1))
        self.cycles = [self._cycle(f) for f in self._free_rows]

    def _cycle(self, f):
        y = {f: 1}
        for op in reversed(self._row_log):
            if op[0] == "a":
                _, dst, src, q = op
                if y.get(src):
                    s = y.get(dst, 0) - q * y[src]
                    if s:
                        y[dst] = s
                    else:
                        y.pop(dst, None)
            elif op[1] in y:
                y[op[1]] = -y[op[1]]
        w = {self._kernel_cols[s]: v for s, v in y.items()}
        for op in reversed(self._col_log):
            if op[0] == "a":
                _, dst, src, q = op
                if w.get(dst):
                    s = w.get(src, 0) + q * w[dst]
                    if s:
                        w[src] = s
                    else:
                        w.pop(src, None)
            elif op[1] in w:
                w[op[1]] = -w[op[1]]
        return w

    def coordinates(self, x):
        """Free-part coordinates of a cycle ``x`` (sparse dict or sequence)."""
        if not isinstance(x, dict):
            x = {i: int(v) for i, v in enumerate(x) if v}
        w = dict(x)
        for op in self._col_log:
            if op[0] == "a":
                _, dst, src, q = op
                if w.get(dst):
                    s = w.get(src, 0) - q * w[dst]
                    if s:
                        w[src] = s
                    else:
                        w.pop(src, None)
            elif op[1] in w:
                w[op[1]] = -w[op[1]]
        if any(w.get(c) for c in self._pivot_cols):
            raise ContractViolation("vector is not a cycle")
        y = {s: w[c] for s, c in enumerate(self._kernel_cols) if w.get(c)}
        for op in self._row_log:
            if op[0] == "a":
                _, dst, src, q = op
                if y.get(src):
                    s = y.get(dst, 0) + q * y[src]
                    if s:
                        y[dst] = s
                    else:
                        y.pop(dst, None)
            elif op[1] in y:
                y[op[1]] = -y[op[1]]
        return [y.get(f, 0) for f in self._free_rows]


def homology_basis(d_k, d_k1):
    return HomologyBasis(d_k, d_k1)


def chain_homology(d_k, d_k1):
    """ker D_k / im D_{k+1} as a finitely generated abelian group."""
    return HomologyBasis(d_k, d_k1).group


def induced_map_on_homology(d_k, d_k1, f_k, f_km1, f_kp1, basis=None):
    """Matrix of a chain map on H_k in the basis of :class:`HomologyBasis`.

    Column t holds the coordinates of the image of the t-th basis cycle.
    """
    _check_pair(d_k, d_k1)
    if f_k.shape != (d_k.cols, d_k.cols) or f_km1.shape != (d_k.rows, d_k.rows) \
            or f_kp1.shape != (d_k1.cols, d_k1.cols):
        raise InvalidArgument("chain map blocks have the wrong shapes")
    if d_k @ f_k != f_km1 @ d_k or f_k @ d_k1 != d_k1 @ f_kp1:
        raise ContractViolation("the chain map does not commute with the boundaries")
    hb = basis if basis is not None else HomologyBasis(d_k, d_k1)
    if not hb.group.is_free:
        raise UnsupportedCase(f"H_k = {hb.group} has torsion; induced map needs a free group")
    columns = [hb.coordinates(f_k.apply(c)) for c in hb.cycles]
    r = len(columns)
    return IntMatrix._wrap(r, r, [{t: col[s] for t, col in enumerate(columns) if col[s]}
                                   for s in range(r)])


# --------------------------------------------------------------------------
# characteristic polynomials


def charpoly(A):
    """det(xI − A) by Berkowitz's division-free recursion, lowest degree first."""
    if A.rows != A.cols:
        raise InvalidArgument("charpoly of a non-square matrix")
    a = A.tolist()
    n = len(a)
    p = [1]  # high degree first during the recursion
    for k in range(n - 1, -1, -1):
        size = n - k
        R = a[k][k + 1:]
        sub = [row[k + 1:] for row in a[k + 1:]]
        col = [1, -a[k][k]]
        v = [a[i][k] for i in range(k + 1, n)]
        for _ in range(size - 1):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(x * y for x, y in zip(row, v)) for row in sub]
        p = [sum(col[i - j] * p[j] for j in range(min(i + 1, len(p)))) for i in range(size + 1)]
    return poly.normalize(p[::-1])


def finite_order_charpoly(A, order):
    """Characteristic polynomial of an integer matrix with A**order == I.

    Multiplicities of the cyclotomic factors are recovered from the traces
    of the powers of A; this scales to the few-hundred-dimensional action
    matrices where Berkowitz is too slow.
    """
    n = A.rows
    traces = []
    P = IntMatrix.identity(n)
    for _ in range(order):
        traces.append(P.trace())
        P = P @ A
    if P != IntMatrix.identity(n):
        raise ContractViolation(f"matrix does not satisfy A^{order} = I")
    result, degree = poly.ONE, 0
    for e in divisors(order):
        num = sum(t * ramanujan_sum(e, k) for k, t in enumerate(traces))
        den = order * totient(e)
        if num % den or num < 0:
            raise VerificationFailure("trace data inconsistent with a finite-order matrix")
        m = num // den
        result = poly.mul(result, poly.power(poly.cyclotomic(e), m))
        degree += m * totient(e)
    if degree != n:
        raise VerificationFailure("cyclotomic multiplicities do not add up to the dimension")
    return result

