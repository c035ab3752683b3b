"""Immutable dense matrices over GF(q), with the exact row-space
operations (echelon forms, kernels, sums, intersections) that the
subspace lattice is built from."""

from __future__ import annotations

from .field import GF


class Matrix:
    """Row-major matrix with entries in a GF field.

    Entries live in a tuple of row tuples, so matrices hash and compare
    by value and canonical forms can key dicts.  Every operation
    returns a new matrix; the reduced echelon form is cached on first
    use.
    """

    __slots__ = ("field", "ncols", "rows", "_rr")

    def __init__(self, field: GF, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if ncols is not None and ncols != width:
                raise ValueError(f"declared {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            raise ValueError("an empty matrix needs an explicit column count")
        q = field.q
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for v in r:
                if not 0 <= v < q:
                    raise ValueError(f"entry {v} outside GF({q})")
        self.field = field
        self.ncols = ncols
        self.rows = rows
        self._rr = None

    @classmethod
    def zeros(cls, field: GF, nrows: int, ncols: int) -> Matrix:
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: GF, n: int) -> Matrix:
        return cls(field, [[1 if i == j else 0 for j in range(n)]
                           for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        F = self.field
        return Matrix(F, [[F.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> Matrix:
        F = self.field
        return Matrix(F, [[F.neg(v) for v in r] for r in self.rows], self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scaled(self, c: int) -> Matrix:
        F = self.field
        return Matrix(F, [[F.mul(c, v) for v in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = other.ncols
        out = []
        for ra in self.rows:
            row = []
            for j in range(cols):
                acc = 0
                for k, a in enumerate(ra):
                    if a:
                        acc = F.add(acc, F.mul(a, other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, cols)

    def transpose(self) -> Matrix:
        return Matrix(self.field,
                      [[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)], self.nrows)

    # -- echelon forms ------------------------------------------------

    def rref(self) -> tuple[Matrix, int, tuple[int, ...]]:
        """Reduced row-echelon form: (R, rank, pivot columns).

        R has the same shape as self, zero rows trailing; the form is
        the unique canonical representative of the row space plus its
        zero padding.
        """
        if self._rr is None:
            F = self.field
            rows = [list(r) for r in self.rows]
            nr, nc = len(rows), self.ncols
            pivots = []
            r = 0
            for c in range(nc):
                if r == nr:
                    break
                pr = next((i for i in range(r, nr) if rows[i][c]), None)
                if pr is None:
                    continue
                rows[r], rows[pr] = rows[pr], rows[r]
                inv = F.inv(rows[r][c])
                if inv != 1:
                    rows[r] = [F.mul(inv, v) for v in rows[r]]
                lead = rows[r]
                for i in range(nr):
                    f = rows[i][c]
                    if i != r and f:
                        rows[i] = [F.sub(a, F.mul(f, b))
                                   for a, b in zip(rows[i], lead)]
                pivots.append(c)
                r += 1
            self._rr = (Matrix(F, rows, nc), r, tuple(pivots))
        return self._rr

    def rank(self) -> int:
        return self.rref()[1]

    def row_basis(self) -> Matrix:
        """Canonical basis of the row space: rref with zero rows dropped."""
        R, rank, _ = self.rref()
        return Matrix(self.field, R.rows[:rank], self.ncols)

    def kernel(self) -> Matrix:
        """Canonical basis of the right null space, one row per vector."""
        R, rank, pivots = self.rref()
        n = self.ncols
        pivset = set(pivots)
        F = self.field
        vecs = []
        for fc in range(n):
            if fc in pivset:
                continue
            v = [0] * n
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][fc])
            vecs.append(v)
        return Matrix(F, vecs, n).row_basis()

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise ValueError("only square matrices invert")
        n = self.nrows
        if self.rank() < n:
            raise ValueError("matrix is singular")
        aug = Matrix(self.field,
                     [list(r) + [1 if i == j else 0 for j in range(n)]
                      for i, r in enumerate(self.rows)], 2 * n)
        R, _, _ = aug.rref()
        return Matrix(self.field, [r[n:] for r in R.rows], n)

    # -- plumbing -----------------------------------------------------

    def _check_same_shape(self, other: Matrix):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix)
                and self.field == other.field
                and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {list(map(list, self.rows))!r})"


def vstack(first: Matrix, *rest: Matrix) -> Matrix:
    rows = list(first.rows)
    for m in rest:
        if m.field != first.field or m.ncols != first.ncols:
            raise ValueError("stack needs matching fields and widths")
        rows.extend(m.rows)
    return Matrix(first.field, rows, first.ncols)


def trace_product(a: Matrix, b: Matrix) -> int:
    """The bilinear form sum_ij a_ij * b_ij, i.e. Trace(a b^t)."""
    a._check_same_shape(b)
    F = a.field
    acc = 0
    for ra, rb in zip(a.rows, b.rows):
        for x, y in zip(ra, rb):
            if x and y:
                acc = F.add(acc, F.mul(x, y))
    return acc


def rowspace_sum(a: Matrix, b: Matrix) -> Matrix:
    """Canonical basis of rowspace(a) + rowspace(b)."""
    return vstack(a, b).row_basis()


def rowspace_intersect(a: Matrix, b: Matrix) -> Matrix:
    """Canonical basis of rowspace(a) & rowspace(b).

    Zassenhaus-style: echelonize [a | a; b | 0]; the right halves of the
    rows whose left half vanished span the intersection.
    """
    if a.field != b.field or a.ncols != b.ncols:
        raise ValueError("intersection needs matching fields and widths")
    F = a.field
    n = a.ncols
    ra = a.row_basis()
    rb = b.row_basis()
    stacked = ([list(r) + list(r) for r in ra.rows]
               + [list(r) + [0] * n for r in rb.rows])
    R, rank, _ = Matrix(F, stacked, 2 * n).rref()
    inter = [row[n:] for row in R.rows[:rank] if not any(row[:n])]
    return Matrix(F, inter, n).row_basis()
