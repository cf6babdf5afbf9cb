"""Exact sparse linear algebra over the rationals.

Rows are dicts {column: value}.  The echelon form keeps integer rows and
uses fraction-free elimination followed by content division.
"""

from fractions import Fraction
from math import gcd, lcm


def _integral(row):
    """Scale a rational row to a primitive integer row; returns the new row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {c: int(v * den) for c, v in row.items() if v}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


class RowSpace:
    """Incremental row echelon form.

    Each stored row is keyed by its pivot, the smallest column it touches.
    Columns are compared with their natural ordering.
    """

    def __init__(self):
        self.pivots = {}
        self._order = None

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce_integral(self, row):
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            a, b = piv[c], row[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {k: v * fa for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - fb * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _integral(new) if new else new
        return row

    def add(self, row):
        """Insert a row; returns True iff it increased the rank."""
        row = _integral(row)
        if not row:
            return False
        row = self._reduce_integral(row)
        if not row:
            return False
        c = min(row)
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        self.pivots[c] = row
        self._order = None
        return True

    def contains(self, row):
        row = _integral(row)
        return not row or not self._reduce_integral(row)

    def normal_form(self, vec):
        """Canonical representative of vec modulo the row space (rational entries).

        Pivot columns are cleared in increasing order; since every stored row
        only touches columns at or after its pivot, the result is unique.
        """
        vec = {c: Fraction(v) for c, v in vec.items() if v}
        if self._order is None:
            self._order = sorted(self.pivots)
        for c in self._order:
            v = vec.get(c)
            if not v:
                continue
            piv = self.pivots[c]
            f = v / piv[c]
            for k, pv in piv.items():
                nv = vec.get(k, 0) - f * pv
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec


def rank(rows):
    space = RowSpace()
    for r in rows:
        space.add(r)
    return space.rank


def solve(columns, target):
    """Express `target` as a combination of the given vectors.

    Returns a list of Fractions, or None when target is outside their span.
    Vectors are sparse dicts; the vectors must be linearly independent.
    """
    n = len(columns)
    # reduced vector, pivot -> (vector, combination of the input columns)
    basis = {}

    def reduce(vec, combo):
        while vec:
            c = min(vec)
            if c not in basis:
                return vec, combo, c
            pvec, pcombo = basis[c]
            f = vec[c] / pvec[c]
            for k, v in pvec.items():
                nv = vec.get(k, 0) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in pcombo.items():
                nv = combo.get(k, 0) - f * v
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)
        return vec, combo, None

    for i, col in enumerate(columns):
        vec, combo, c = reduce({k: Fraction(v) for k, v in col.items() if v}, {i: Fraction(1)})
        if c is None:
            raise ValueError("vectors are linearly dependent")
        basis[c] = (vec, combo)
    vec, combo, c = reduce({k: Fraction(v) for k, v in target.items() if v}, {})
    if vec:
        return None
    return [-combo.get(i, Fraction(0)) for i in range(n)]


def invert(matrix):
    """Inverse of a square matrix of Fractions (list of lists)."""
    n = len(matrix)
    rows = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        rows[c], rows[p] = rows[p], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [v * inv for v in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return [row[n:] for row in rows]


def matmul(A, B):
    return [[sum((A[i][t] * B[t][j] for t in range(len(B))), 0) for j in range(len(B[0]))]
            for i in range(len(A))]
