"""Incremental exact Gaussian elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq


class LinearSystem:
    """Rows are added one at a time; each row is a dict {column: value} plus a right-hand side.

    Pivot rows are kept fully reduced so that the solution can be read off
    once the rank equals the number of unknowns.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # column -> (row dict, rhs) with row[column] == 1
        self.inconsistent = False
        self.rows_seen = 0

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row, rhs):
        self.rows_seen += 1
        row = {k: _q(v) for k, v in row.items() if v}
        rhs = _q(rhs)
        for col in [c for c in row if c in self.pivots]:
            f = row[col]
            prow, prhs = self.pivots[col]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            rhs -= f * prhs
        # pivot rows are reduced, so row is now free of pivot columns
        if not row:
            if rhs:
                self.inconsistent = True
            return False
        col = min(row)
        f = row[col]
        row = {k: v / f for k, v in row.items()}
        rhs = rhs / f
        for c, (prow, prhs) in list(self.pivots.items()):
            g = prow.get(col)
            if g:
                new = dict(prow)
                for k, v in row.items():
                    nv = new.get(k, 0) - g * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                self.pivots[c] = (new, prhs - g * rhs)
        self.pivots[col] = (row, rhs)
        return True

    def solution(self):
        if self.inconsistent:
            raise ValueError("inconsistent system")
        if self.rank < self.ncols:
            raise ValueError("underdetermined system")
        return [_frac(self.pivots[c][1]) for c in range(self.ncols)]

    def kernel(self):
        """Basis of the homogeneous solution space, as lists of Fractions."""
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for c, (prow, _) in self.pivots.items():
                v[c] = -_frac(prow.get(f, 0))
            basis.append(v)
        return basis

    def particular(self):
        """One solution with free variables set to zero."""
        if self.inconsistent:
            raise ValueError("inconsistent system")
        v = [Fraction(0)] * self.ncols
        for c, (_, rhs) in self.pivots.items():
            v[c] = _frac(rhs)
        return v


def _q(x):
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _frac(x):
    return Fraction(int(x.numerator), int(x.denominator))
