"""Exact linear algebra over the rationals.

All dimension counts in this package are exact integers, so every rank /
kernel / solve below runs fraction-exact Gaussian elimination.  Matrices are
plain lists of rows; entries may be ints or Fractions.
"""

from fractions import Fraction


def _as_fractions(row):
    return [x if isinstance(x, Fraction) else Fraction(x) for x in row]


def rref(rows):
    """Reduced row echelon form.  Returns (reduced_rows, pivot_columns)."""
    mat = [_as_fractions(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of the right kernel of the matrix (rows x ncols)."""
    if not rows:
        return [[Fraction(1 if i == j else 0) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -red[i][f]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """One solution x of A x = b, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = red[i][-1]
    return x


class Span:
    """Incrementally maintained row space with exact membership tests."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []     # in echelon form, leading entries normalized to 1
        self.lead = []     # leading column per row

    def _reduce(self, vec):
        vec = _as_fractions(vec)
        for row, lc in zip(self.rows, self.lead):
            if vec[lc] != 0:
                f = vec[lc]
                for j in range(lc, self.ncols):
                    vec[j] -= f * row[j]
        return vec

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        vec = self._reduce(vec)
        for c in range(self.ncols):
            if vec[c] != 0:
                pv = vec[c]
                vec = [x / pv for x in vec]
                pos = 0
                while pos < len(self.lead) and self.lead[pos] < c:
                    pos += 1
                self.rows.insert(pos, vec)
                self.lead.insert(pos, c)
                return True
        return False

    def contains(self, vec):
        return all(x == 0 for x in self._reduce(vec))

    @property
    def dim(self):
        return len(self.rows)
