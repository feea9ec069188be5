"""Exact rational matrices and elimination kernels.

A RatMatrix is a sparse collection of nonzero rational entries.  Matrices at
or below DENSE_CUTOFF x DENSE_CUTOFF are eliminated with a dense row
representation, larger ones with sparse dict-rows and a fewest-nonzeros pivot
choice.  The reduced row echelon form is unique, so the dense, sparse, pure
and compiled paths all agree bit for bit.

The compiled twin of the elimination loops lives in `extor._speedups`
(Cython) and is picked at import time; EXTOR_PURE=1 forces the pure path.
"""

import os

from .rational import ONE, Rational

DENSE_CUTOFF = 64

_speedups = None
if os.environ.get("EXTOR_PURE") != "1":
    try:
        from . import _speedups
    except ImportError:
        _speedups = None

KERNEL = "compiled" if _speedups is not None else "pure"


# ---------------------------------------------------------------------------
# pure elimination kernels (dict-rows / list-rows of Rational)

def rref_sparse_pure(rows, ncols):
    """Full Gauss-Jordan on dict-rows; returns (pivot_rows, pivot_cols)."""
    remaining = list(range(len(rows)))
    pivot_rows = []
    pivot_cols = []
    for col in range(ncols):
        best = -1
        best_len = -1
        for idx in remaining:
            row = rows[idx]
            if col in row and (best < 0 or len(row) < best_len):
                best = idx
                best_len = len(row)
        if best < 0:
            continue
        remaining.remove(best)
        piv = rows[best]
        inv = ONE / piv[col]
        if inv != ONE:
            for c in piv:
                piv[c] *= inv
        targets = remaining + pivot_rows
        for idx in targets:
            row = rows[idx]
            factor = row.get(col)
            if factor is None:
                continue
            for c, v in piv.items():
                cur = row.get(c)
                if cur is None:
                    row[c] = -factor * v
                else:
                    cur = cur - factor * v
                    if cur:
                        row[c] = cur
                    else:
                        del row[c]
        pivot_rows.append(best)
        pivot_cols.append(col)
    order = sorted(range(len(pivot_cols)), key=lambda i: pivot_cols[i])
    return [rows[pivot_rows[i]] for i in order], [pivot_cols[i] for i in order]


def rank_sparse_pure(rows, ncols):
    """Forward elimination only; returns the rank."""
    remaining = list(range(len(rows)))
    rank = 0
    for col in range(ncols):
        best = -1
        best_len = -1
        for idx in remaining:
            row = rows[idx]
            if col in row and (best < 0 or len(row) < best_len):
                best = idx
                best_len = len(row)
        if best < 0:
            continue
        remaining.remove(best)
        piv = rows[best]
        inv = ONE / piv[col]
        if inv != ONE:
            for c in piv:
                piv[c] *= inv
        for idx in remaining:
            row = rows[idx]
            factor = row.get(col)
            if factor is None:
                continue
            for c, v in piv.items():
                cur = row.get(c)
                if cur is None:
                    row[c] = -factor * v
                else:
                    cur = cur - factor * v
                    if cur:
                        row[c] = cur
                    else:
                        del row[c]
        rank += 1
    return rank


def rref_dense_pure(rows, ncols):
    """Gauss-Jordan on list-rows; returns (pivot_rows, pivot_cols)."""
    nrows = len(rows)
    pivot_cols = []
    r = 0
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = ONE / prow[col]
        if inv != ONE:
            for c in range(col, ncols):
                if prow[c]:
                    prow[c] *= inv
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            factor = row[col]
            if factor:
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] -= factor * prow[c]
        pivot_cols.append(col)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivot_cols


if _speedups is not None:
    _rref_sparse = _speedups.rref_sparse
    _rank_sparse = _speedups.rank_sparse
    _rref_dense = _speedups.rref_dense
else:
    _rref_sparse = rref_sparse_pure
    _rank_sparse = rank_sparse_pure
    _rref_dense = rref_dense_pure


def rank_of_rows(rows, ncols):
    """Rank of dict-rows (consumed); entry point used by the homology code."""
    rows = [row for row in rows if row]
    if not rows or ncols == 0:
        return 0
    return _rank_sparse(rows, ncols)


class RatMatrix:
    """Immutable exact rational matrix with sparse storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        ent = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) out of range for {rows}x{cols}")
            v = Rational(v)
            if v:
                ent[(r, c)] = v
        self.entries = ent

    @classmethod
    def from_rows(cls, dense_rows, cols=None):
        if cols is None:
            cols = len(dense_rows[0]) if dense_rows else 0
        entries = {}
        for r, row in enumerate(dense_rows):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = Rational(v)
        return cls(len(dense_rows), cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, {})

    def entry(self, r, c):
        return self.entries.get((r, c), Rational(0))

    def to_rows(self):
        out = [[Rational(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def dict_rows(self):
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return RatMatrix(self.cols, self.rows,
                         {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (r, c), v in self.entries.items():
            by_row.setdefault(r, []).append((c, v))
        other_rows = {}
        for (r, c), v in other.entries.items():
            other_rows.setdefault(r, []).append((c, v))
        entries = {}
        for r, items in by_row.items():
            acc = {}
            for k, v in items:
                for c, w in other_rows.get(k, ()):
                    cur = acc.get(c)
                    acc[c] = v * w if cur is None else cur + v * w
            for c, v in acc.items():
                if v:
                    entries[(r, c)] = v
        return RatMatrix(self.rows, other.cols, entries)

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of length self.cols."""
        out = [Rational(0)] * self.rows
        for (r, c), v in self.entries.items():
            if vec[c]:
                out[r] += v * vec[c]
        return out


def rref(m):
    """Reduced row echelon form of m; returns (RatMatrix, pivot columns)."""
    if m.rows <= DENSE_CUTOFF and m.cols <= DENSE_CUTOFF:
        rows, pivots = _rref_dense(m.to_rows(), m.cols)
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
    else:
        rows, pivots = _rref_sparse(m.dict_rows(), m.cols)
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                entries[(r, c)] = v
    return RatMatrix(len(rows), m.cols, entries), pivots


def rank(m):
    if m.is_zero():
        return 0
    if m.rows <= DENSE_CUTOFF and m.cols <= DENSE_CUTOFF:
        _, pivots = _rref_dense(m.to_rows(), m.cols)
        return len(pivots)
    return _rank_sparse(m.dict_rows(), m.cols)


def kernel_basis(m):
    """Basis of the right kernel, one column vector per free column."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    rows = reduced.dict_rows()
    basis = []
    for fc in free_cols:
        vec = [Rational(0)] * m.cols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            v = rows[r].get(fc)
            if v:
                vec[pc] = -v
        basis.append(vec)
    return basis


def solve(m, b):
    """One exact solution of m.x = b, or None if inconsistent."""
    entries = dict(m.entries)
    for r, v in enumerate(b):
        if v:
            entries[(r, m.cols)] = Rational(v)
    aug = RatMatrix(m.rows, m.cols + 1, entries)
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Rational(0)] * m.cols
    rows = reduced.dict_rows()
    for r, pc in enumerate(pivots):
        x[pc] = rows[r].get(m.cols, Rational(0))
    return x
