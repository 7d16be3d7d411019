"""Exact row-echelon machinery shared by the quotient, trace and rank
computations.

Both classes maintain a reduced row echelon form (every pivot column is zero
in all other rows), so reducing a vector against the span is a single pass
and yields the unique representative with zero coordinates at the pivots.

:class:`Echelon` works over any exact coefficient type with operator
overloads (Scalar, Fraction); :class:`ModPEchelon` is the numpy fast path
for prime fields.
"""

import bisect

import numpy as np


class Echelon:
    """Reduced row echelon form over an exact field, rows as dense lists."""

    def __init__(self, width):
        self.width = width
        self.rows = []
        self.pivots = []          # pivot column of each row
        self._pivot_row = {}      # column -> row index

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        """Fully reduced copy of row (does not insert)."""
        row = list(row)
        for col, c in enumerate(row):
            if c and col in self._pivot_row:
                r = self.rows[self._pivot_row[col]]
                row[col:] = [a - c * b for a, b in zip(row[col:], r[col:])]
        return row

    def insert(self, row):
        """Reduce and, if independent, add as a new pivot row; returns True
        iff the rank grew."""
        row = self.reduce(row)
        piv = next((col for col, c in enumerate(row) if c), None)
        if piv is None:
            return False
        inv = row[piv]
        if inv != inv * inv:  # normalize pivot to 1 unless it already is
            row = [c / inv for c in row]
        for r, rpiv in zip(self.rows, self.pivots):
            c = r[piv]
            if c:
                r[piv:] = [a - c * b for a, b in zip(r[piv:], row[piv:])]
        self.rows.append(row)
        self.pivots.append(piv)
        self._pivot_row[piv] = len(self.rows) - 1
        return True

    def is_zero_mod(self, row):
        return not any(self.reduce(row))


class LinearSystem:
    """Affine system M x = r maintained in reduced row echelon form, with an
    opaque right-hand side supporting ``rhs - rhs2 * coeff`` and truth
    testing.  Pivots are chosen in the matrix part only, so inconsistency is
    detected as a zero matrix row with nonzero rhs."""

    DEPENDENT, PIVOT, INCONSISTENT = "dependent", "pivot", "inconsistent"

    def __init__(self, width):
        self.width = width
        self.rows = []            # (pivot_col, vec, rhs)
        self._pivot_row = {}
        self.inconsistent = []    # rhs witnesses of inconsistent rows

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec, rhs):
        vec = list(vec)
        for col, c in enumerate(vec):
            if c and col in self._pivot_row:
                _, pvec, prhs = self.rows[self._pivot_row[col]]
                vec[col:] = [a - c * b for a, b in zip(vec[col:], pvec[col:])]
                rhs = rhs - prhs * c
        return vec, rhs

    def add(self, vec, rhs):
        vec, rhs = self.reduce(vec, rhs)
        piv = next((col for col, c in enumerate(vec) if c), None)
        if piv is None:
            if rhs:
                self.inconsistent.append(rhs)
                return self.INCONSISTENT
            return self.DEPENDENT
        inv = vec[piv]
        if inv != inv * inv:
            coeff = _one_like(inv) / inv
            vec = [c * coeff for c in vec]
            rhs = rhs * coeff
        for k, (pcol, pvec, prhs) in enumerate(self.rows):
            c = pvec[piv]
            if c:
                pvec[piv:] = [a - c * b for a, b in zip(pvec[piv:], vec[piv:])]
                self.rows[k] = (pcol, pvec, prhs - rhs * c)
        self.rows.append((piv, vec, rhs))
        self._pivot_row[piv] = len(self.rows) - 1
        return self.PIVOT

    def is_implied(self, vec, rhs):
        """True iff the row is already a consequence of the system."""
        vec, rhs = self.reduce(vec, rhs)
        return not any(vec) and not rhs

    def solution(self, zero_rhs):
        """A particular solution (free variables set to zero); None if
        inconsistent.  ``zero_rhs`` is the zero of the rhs type."""
        if self.inconsistent:
            return None
        sol = [zero_rhs] * self.width
        for piv, vec, rhs in self.rows:
            # RREF: the pivot row reads x_piv + (free part) = rhs
            sol[piv] = rhs
        return sol


def _one_like(c):
    return c / c


class ModPLinearSystem:
    """Affine system over GF(p): forward echelon with numpy rows, opaque
    right-hand sides (same contract as :class:`LinearSystem`; the solution
    is recovered by a final back-substitution pass)."""

    DEPENDENT, PIVOT, INCONSISTENT = (LinearSystem.DEPENDENT,
                                      LinearSystem.PIVOT,
                                      LinearSystem.INCONSISTENT)

    def __init__(self, width, p, rhs_scale):
        self.width = width
        self.p = p
        self.rhs_scale = rhs_scale    # (rhs, int c) -> rhs * c
        self.rows = {}                # pivot col -> (np row, rhs)
        self._cols = []               # sorted pivot columns
        self.inconsistent = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec, rhs):
        vec = np.asarray(vec, dtype=np.int64) % self.p
        p = self.p
        for col in self._cols:
            c = int(vec[col])
            if c:
                pvec, prhs = self.rows[col]
                vec = (vec - c * pvec) % p
                rhs = rhs - self.rhs_scale(prhs, c)
        return vec, rhs

    def add(self, vec, rhs):
        vec, rhs = self.reduce(vec, rhs)
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            if rhs:
                self.inconsistent.append(rhs)
                return self.INCONSISTENT
            return self.DEPENDENT
        piv = int(nz[0])
        inv = pow(int(vec[piv]), self.p - 2, self.p)
        vec = (vec * inv) % self.p
        rhs = self.rhs_scale(rhs, inv)
        self.rows[piv] = (vec, rhs)
        bisect.insort(self._cols, piv)
        return self.PIVOT

    def is_implied(self, vec, rhs):
        vec, rhs = self.reduce(vec, rhs)
        return not np.any(vec) and not rhs

    def solution(self, zero_rhs):
        if self.inconsistent:
            return None
        sol = [zero_rhs] * self.width
        for col in reversed(self._cols):
            vec, rhs = self.rows[col]
            val = rhs
            for c in np.nonzero(vec[col + 1:])[0]:
                c = int(c) + col + 1
                if sol[c] is not zero_rhs:
                    val = val - self.rhs_scale(sol[c], int(vec[c]))
            sol[col] = val
        return sol


class ModPEchelon:
    """Same contract over GF(p) with a preallocated numpy matrix of RREF
    rows.  The prime must satisfy width * (p-1)^2 < 2^63 so that the batched
    reductions stay inside int64 (see ``PRIMES`` in domains)."""

    def __init__(self, width, p):
        self.width = width
        self.p = p
        self.pivots = []
        self._pivot_row = {}
        self._mat = np.zeros((64, width), dtype=np.int64)

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def rows(self):
        return list(self._mat[:self.rank])

    def _coerce(self, row):
        arr = np.asarray(row, dtype=np.int64) % self.p
        if arr.shape != (self.width,):
            raise ValueError("bad row width")
        return arr

    def reduce(self, row):
        # rows are RREF, so one matrix product eliminates all pivots at once
        row = self._coerce(row)
        r = self.rank
        if r == 0:
            return row.copy()
        coeffs = row[self.pivots]
        return (row - coeffs @ self._mat[:r]) % self.p

    def reduce_batch(self, mat):
        mat = np.asarray(mat, dtype=np.int64) % self.p
        r = self.rank
        if r == 0:
            return mat.copy()
        coeffs = mat[:, self.pivots]
        return (mat - coeffs @ self._mat[:r]) % self.p

    def insert(self, row):
        row = self.reduce(row)
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        inv = pow(int(row[piv]), self.p - 2, self.p)
        row = (row * inv) % self.p
        r = self.rank
        if r:
            col = self._mat[:r, piv].copy()
            nzr = np.nonzero(col)[0]
            if nzr.size:
                self._mat[nzr] -= np.outer(col[nzr], row)
                self._mat[:r] %= self.p
        if r == len(self._mat):
            grown = np.zeros((2 * r, self.width), dtype=np.int64)
            grown[:r] = self._mat
            self._mat = grown
        self._mat[r] = row
        self.pivots.append(piv)
        self._pivot_row[piv] = r
        return True

    def is_zero_mod(self, row):
        return not np.any(self.reduce(row))
