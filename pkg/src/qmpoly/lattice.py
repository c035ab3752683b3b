"""The lattice of all subspaces of GF(q)^n.

A subspace is represented by its canonical basis: the reduced
row-echelon matrix whose rows span it.  Enumeration walks pivot-column
patterns and fills the free entries directly, so every canonical matrix
is produced exactly once and nothing needs deduplicating; the output
size equals the answer size.

Lattice members are ordered by dimension and then lexicographically by
the flattened canonical basis.  The order is stable across runs, so
rank tables indexed by lattice position compare bit for bit.
"""

from __future__ import annotations

import itertools

from .errors import GuardExceeded
from .field import GF
from .matrix import Matrix, rowspace_intersect, rowspace_sum, vstack

DEFAULT_SUBSPACE_GUARD = 10 ** 6


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n, exactly."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class Subspace:
    """A subspace of GF(q)^n held as its canonical echelon basis.

    Two subspaces are equal exactly when their canonical bases are, so
    instances are safe as dict keys.
    """

    __slots__ = ("field", "n", "basis")

    def __init__(self, field: GF, n: int, span):
        if isinstance(span, Matrix):
            mat = span
        else:
            mat = Matrix(field, span, ncols=n)
        if mat.ncols != n:
            raise ValueError(f"spanning rows have {mat.ncols} columns, ambient is {n}")
        self.field = field
        self.n = n
        self.basis = mat.row_basis()

    @classmethod
    def _from_rref(cls, field: GF, n: int, mat: Matrix) -> Subspace:
        # Trusted path for rows already in canonical echelon form.
        s = object.__new__(cls)
        s.field = field
        s.n = n
        s.basis = mat
        return s

    @classmethod
    def zero(cls, field: GF, n: int) -> Subspace:
        return cls._from_rref(field, n, Matrix(field, [], ncols=n))

    @classmethod
    def full(cls, field: GF, n: int) -> Subspace:
        return cls._from_rref(field, n, Matrix.identity(field, n))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def encoding(self) -> tuple[int, ...]:
        """Flattened canonical basis; the lexicographic sort key."""
        return tuple(v for row in self.basis.rows for v in row)

    def _check_ambient(self, other: Subspace):
        if self.field != other.field or self.n != other.n:
            raise ValueError("ambient space mismatch")

    def __le__(self, other: Subspace) -> bool:
        """Containment: every basis row of self lies in other's row space."""
        self._check_ambient(other)
        if self.dim > other.dim:
            return False
        if self.dim == 0:
            return True
        return vstack(other.basis, self.basis).rank() == other.dim

    def __add__(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        return Subspace._from_rref(
            self.field, self.n, rowspace_sum(self.basis, other.basis))

    def __and__(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        return Subspace._from_rref(
            self.field, self.n, rowspace_intersect(self.basis, other.basis))

    def orthogonal_complement(self) -> Subspace:
        """All vectors with zero dot product against this subspace."""
        return Subspace._from_rref(self.field, self.n, self.basis.kernel())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.field == other.field
                and self.n == other.n
                and self.basis.rows == other.basis.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.basis.rows))

    def __repr__(self) -> str:
        return f"Subspace({self.field!r}, n={self.n}, dim={self.dim}, rows={list(map(list, self.basis.rows))})"


def all_subspaces(field: GF, n: int):
    """Yield every subspace of GF(q)^n in the canonical order."""
    q = field.q
    for k in range(n + 1):
        block = []
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            free = [(i, j) for i in range(k)
                    for j in range(pivots[i] + 1, n) if j not in pivset]
            base = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                base[i][c] = 1
            for assign in itertools.product(range(q), repeat=len(free)):
                rows = [r[:] for r in base]
                for (i, j), v in zip(free, assign):
                    rows[i][j] = v
                block.append(Subspace._from_rref(
                    field, n, Matrix(field, rows, ncols=n)))
        block.sort(key=Subspace.encoding)
        yield from block


class SubspaceLattice:
    """All subspaces of GF(q)^n with fixed positions and complements.

    Position 0 is the zero space and the last position is the full
    space.  Sum, intersection and containment between members are
    cached by index pair, since axiom scans revisit the same pairs.
    """

    def __init__(self, field: GF, n: int, members=None):
        self.field = field
        self.n = n
        self.members = tuple(members if members is not None
                             else all_subspaces(field, n))
        self.index_of = {s: i for i, s in enumerate(self.members)}
        if len(self.index_of) != len(self.members):
            raise ValueError("duplicate lattice members")
        self.dims = tuple(s.dim for s in self.members)
        self.complements = tuple(
            self.index_of[s.orthogonal_complement()] for s in self.members)
        self._sum: dict[tuple[int, int], int] = {}
        self._meet: dict[tuple[int, int], int] = {}
        self._leq: dict[tuple[int, int], bool] = {}

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Subspace:
        return self.members[i]

    @property
    def zero_index(self) -> int:
        return 0

    @property
    def full_index(self) -> int:
        return len(self.members) - 1

    def index(self, s: Subspace) -> int:
        try:
            return self.index_of[s]
        except KeyError:
            raise ValueError("subspace is not a member of this lattice") from None

    def sum_index(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        out = self._sum.get(key)
        if out is None:
            out = self.index_of[self.members[i] + self.members[j]]
            self._sum[key] = out
        return out

    def meet_index(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        out = self._meet.get(key)
        if out is None:
            out = self.index_of[self.members[i] & self.members[j]]
            self._meet[key] = out
        return out

    def leq(self, i: int, j: int) -> bool:
        key = (i, j)
        out = self._leq.get(key)
        if out is None:
            out = self.members[i] <= self.members[j]
            self._leq[key] = out
        return out

    def dimension_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for d in self.dims:
            counts[d] = counts.get(d, 0) + 1
        return counts

    def __repr__(self) -> str:
        return f"SubspaceLattice({self.field!r}, n={self.n}, size={len(self.members)})"


_lattice_cache: dict[tuple[int, int, int], SubspaceLattice] = {}


def lattice_size(field: GF, n: int) -> int:
    return sum(gaussian_binomial(n, k, field.q) for k in range(n + 1))


def enumerate_subspaces(field: GF, n: int,
                        guard: int | None = None) -> SubspaceLattice:
    """Build (or fetch) the full subspace lattice of GF(q)^n.

    The member count is computed from Gaussian binomials before any
    enumeration; if it exceeds the guard the call fails fast and
    reports the count that would be needed.
    """
    if n < 0:
        raise ValueError("ambient dimension must be nonnegative")
    limit = DEFAULT_SUBSPACE_GUARD if guard is None else guard
    total = lattice_size(field, n)
    if total > limit:
        raise GuardExceeded(
            f"subspace lattice of GF({field.q})^{n} has {total} members, "
            f"guard is {limit}", needed=total, guard=limit)
    key = (field.p, field.e, n)
    lat = _lattice_cache.get(key)
    if lat is None:
        lat = SubspaceLattice(field, n)
        _lattice_cache[key] = lat
    return lat
