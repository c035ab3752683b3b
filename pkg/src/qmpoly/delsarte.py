"""Delsarte rank-metric codes: linear spaces of m-by-n matrices over
GF(q), their subcodes supported on a subspace, trace duals, associated
rank tables, and the two weight theories (support weights and
anticode-based weights).

A code is kept in canonical form as the reduced echelon basis of its
row-major vectorizations, so code equality is tuple equality.  Under
row-major vectorization the trace form Trace(A B^t) becomes the plain
dot product, which is what makes the trace dual a kernel computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GuardExceeded
from .field import GF, _digits, _undigits, field
from .lattice import Subspace, SubspaceLattice, enumerate_subspaces
from .matrix import Matrix, rowspace_intersect, vstack
from .polymatroid import PolymatroidTable, WeightProfile, generalized_weights

DEFAULT_CODEWORD_GUARD = 1 << 20


def vectorize(mat: Matrix) -> tuple[int, ...]:
    """Row-major flattening of a matrix into a length-(m*n) vector."""
    return tuple(v for row in mat.rows for v in row)


def devectorize(field: GF, m: int, n: int, vec: Sequence[int]) -> Matrix:
    """Inverse of vectorize for the given shape."""
    vec = tuple(vec)
    if len(vec) != m * n:
        raise ValueError(f"vector of length {len(vec)} does not fill {m}x{n}")
    return Matrix(field, [vec[i * n:(i + 1) * n] for i in range(m)], n)


class DelsarteCode:
    """A linear space of m-by-n matrices over GF(q).

    The constructor trusts that `basis` is already the canonical
    reduced-echelon matrix of vectorized generators; use the
    classmethods to build codes from arbitrary spanning sets.
    """

    __slots__ = ("field", "nrows", "ncols", "basis")

    def __init__(self, field: GF, nrows: int, ncols: int, basis: Matrix):
        if basis.ncols != nrows * ncols:
            raise ValueError(
                f"basis width {basis.ncols} does not match shape {nrows}x{ncols}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.basis = basis

    @classmethod
    def span(cls, field: GF, m: int, n: int,
             mats: Iterable[Matrix | Sequence[int]]) -> DelsarteCode:
        """Code spanned by matrices (or already-vectorized rows)."""
        vecs = []
        for item in mats:
            if isinstance(item, Matrix):
                if item.shape != (m, n):
                    raise ValueError(
                        f"generator of shape {item.shape}, expected {(m, n)}")
                vecs.append(vectorize(item))
            else:
                vecs.append(tuple(item))
        return cls(field, m, n, Matrix(field, vecs, ncols=m * n).row_basis())

    @classmethod
    def from_generators(cls, field: GF, m: int, n: int,
                        mats: Sequence[Matrix]) -> DelsarteCode:
        """Like span, but the generators must be linearly independent."""
        code = cls.span(field, m, n, mats)
        if code.dim != len(mats):
            raise ValueError("generators are linearly dependent")
        return code

    @classmethod
    def zero(cls, field: GF, m: int, n: int) -> DelsarteCode:
        return cls(field, m, n, Matrix(field, [], ncols=m * n))

    @classmethod
    def full(cls, field: GF, m: int, n: int) -> DelsarteCode:
        return cls(field, m, n, Matrix.identity(field, m * n))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def ambient_dim(self) -> int:
        return self.nrows * self.ncols

    @property
    def generators(self) -> tuple[Matrix, ...]:
        return tuple(devectorize(self.field, self.nrows, self.ncols, row)
                     for row in self.basis.rows)

    def is_subcode_of(self, other: DelsarteCode) -> bool:
        self._check_ambient(other)
        if self.dim > other.dim:
            return False
        if self.dim == 0:
            return True
        return vstack(other.basis, self.basis).rank() == other.dim

    def contains_matrix(self, mat: Matrix) -> bool:
        if mat.shape != self.shape:
            raise ValueError("shape mismatch")
        v = Matrix(self.field, [vectorize(mat)], self.ambient_dim)
        return vstack(self.basis, v).rank() == self.dim

    def _check_ambient(self, other: DelsarteCode):
        if self.field != other.field or self.shape != other.shape:
            raise ValueError("codes live in different matrix spaces")

    def __eq__(self, other) -> bool:
        return (isinstance(other, DelsarteCode)
                and self.field == other.field
                and self.shape == other.shape
                and self.basis.rows == other.basis.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.basis.rows))

    def __repr__(self) -> str:
        return (f"DelsarteCode(GF({self.field.q}), {self.nrows}x{self.ncols}, "
                f"dim={self.dim})")


def support_space(x: Subspace, m: int) -> DelsarteCode:
    """All m-by-n matrices whose row space lies in x; dimension m*dim x.

    The basis puts each canonical basis row of x into one matrix row at
    a time, which is already in echelon order.
    """
    n = x.n
    rows = []
    for i in range(m):
        for b in x.basis.rows:
            vec = [0] * (m * n)
            vec[i * n:(i + 1) * n] = b
            rows.append(vec)
    return DelsarteCode(x.field, m, n, Matrix(x.field, rows, ncols=m * n))


def subcode(code: DelsarteCode, x: Subspace) -> DelsarteCode:
    """The matrices of the code whose row space lies in x."""
    if code.field != x.field or code.ncols != x.n:
        raise ValueError("subspace ambient does not match code columns")
    if x.dim == x.n:
        return code
    sup = support_space(x, code.nrows)
    rows = rowspace_intersect(code.basis, sup.basis)
    return DelsarteCode(code.field, code.nrows, code.ncols, rows)


def subcode_dims(code: DelsarteCode,
                 lattice: SubspaceLattice) -> tuple[int, ...]:
    """dim of the supported subcode at every lattice member.

    Uses dim(C & S) = dim C + dim S - dim(C + S), so each member costs
    one rank of a stacked matrix.
    """
    if code.field != lattice.field or code.ncols != lattice.n:
        raise ValueError("lattice ambient does not match code columns")
    k = code.dim
    m = code.nrows
    out = []
    for x in lattice:
        if x.dim == lattice.n:
            out.append(k)
        elif k == 0 or x.dim == 0:
            out.append(0)
        else:
            sup = support_space(x, m)
            joined = vstack(code.basis, sup.basis).rank()
            out.append(k + m * x.dim - joined)
    return tuple(out)


def to_polymatroid(code: DelsarteCode,
                   lattice: SubspaceLattice | None = None) -> PolymatroidTable:
    """The rank table rho(X) = dim C - dim C(X_perp) of the code.

    Its conullity at X equals dim C(X), which is what the weight
    computations scan.
    """
    lat = lattice if lattice is not None else enumerate_subspaces(
        code.field, code.ncols)
    dims = subcode_dims(code, lat)
    k = code.dim
    vals = [k - dims[lat.complements[j]] for j in range(len(lat))]
    return PolymatroidTable(lat, code.nrows, vals)


def trace_dual(code: DelsarteCode) -> DelsarteCode:
    """Orthogonal code under Trace(M N^t), i.e. the vectorized kernel."""
    return DelsarteCode(code.field, code.nrows, code.ncols,
                        code.basis.kernel())


def transpose_code(code: DelsarteCode) -> DelsarteCode:
    """Entrywise transpose of every codeword; shape flips to n-by-m."""
    gens = [g.transpose() for g in code.generators]
    return DelsarteCode.span(code.field, code.ncols, code.nrows, gens)


def _weights_from_dims(n: int, rank: int, lattice: SubspaceLattice,
                       vals: Sequence[int]) -> tuple[int, ...]:
    # min dimension at which vals reaches r, for r = 1..rank
    best = [0] * (n + 1)
    for j, v in enumerate(vals):
        d = lattice.dims[j]
        if v > best[d]:
            best[d] = v
    out = []
    for r in range(1, rank + 1):
        x = next((x for x in range(n + 1) if best[x] >= r), None)
        if x is None:
            raise ValueError(f"support dimension never reaches {r}")
        out.append(x)
    return tuple(out)


def code_weights(code: DelsarteCode,
                 lattice: SubspaceLattice | None = None) -> WeightProfile:
    """Generalized weights d_r = min { dim X : dim C(X) >= r }.

    Computed twice, by direct scan of subcode dimensions and through
    the rank table's conullity; the two routes must agree.
    """
    if code.dim == 0:
        raise ValueError("zero code has no weights")
    lat = lattice if lattice is not None else enumerate_subspaces(
        code.field, code.ncols)
    dims = subcode_dims(code, lat)
    direct = _weights_from_dims(lat.n, code.dim, lat, dims)

    k = code.dim
    table = PolymatroidTable(
        lat, code.nrows,
        [k - dims[lat.complements[j]] for j in range(len(lat))])
    via_table = generalized_weights(table)
    assert direct == via_table.values, \
        "subcode-dimension scan and conullity route disagree"
    return via_table


def anticode_weights(code: DelsarteCode) -> WeightProfile:
    """Anticode-based weights, via the shape-dependent reduction:

      m > n : equal to the code's own weights
      m = n : pointwise min with the transposed code's weights
      m < n : the transposed code's weights (computed on its own,
              wider-row side, where values range in 1..m)
    """
    if code.dim == 0:
        raise ValueError("zero code has no weights")
    m, n = code.shape
    if m > n:
        return code_weights(code)
    flipped = transpose_code(code)
    if m < n:
        return code_weights(flipped)
    a = code_weights(code)
    b = code_weights(flipped)
    return WeightProfile(code.dim,
                         tuple(min(x, y) for x, y in zip(a.values, b.values)))


def transpose_min_polymatroid(
        code: DelsarteCode,
        lattice: SubspaceLattice | None = None) -> PolymatroidTable:
    """For square shapes, the pointwise min of the rank tables of the
    code and its transpose.  A demi-polymatroid whose conullity is the
    max of the two subcode dimensions and whose weights are the
    pointwise min of the two profiles."""
    if code.nrows != code.ncols:
        raise ValueError("defined for square matrix codes only")
    t1 = to_polymatroid(code, lattice)
    t2 = to_polymatroid(transpose_code(code), t1.lattice)
    vals = [min(a, b) for a, b in zip(t1.values, t2.values)]
    return PolymatroidTable(t1.lattice, code.nrows, vals)


# -- Gabidulin construction -------------------------------------------


def _subfield_embedding(base: GF, ext: GF):
    """Embedding of GF(q) into GF(q^m) as a field map.

    For prime q the constants already agree.  Otherwise the base
    modulus has a root in the extension; the smallest such root (by
    encoding) fixes a deterministic embedding.
    """
    if base.e == 1:
        return lambda a: a
    coeffs = base.modulus
    for z in ext.elements():
        acc = 0
        for c in reversed(coeffs):
            acc = ext.add(ext.mul(acc, z), c)
        if acc == 0:
            root = z
            break
    else:
        raise AssertionError("base modulus has no root in the extension")
    powers = [1]
    for _ in range(base.e - 1):
        powers.append(ext.mul(powers[-1], root))

    def embed(a: int) -> int:
        out = 0
        for d, pw in zip(_digits(a, base.p, base.e), powers):
            if d:
                out = ext.add(out, ext.mul(d, pw))
        return out

    return embed


def _expansion_map(base: GF, ext: GF, basis: Sequence[int]):
    """Coordinates over the base field w.r.t. a basis of the extension.

    Returns a callable mapping an extension element to the tuple of m
    base-field encodings c_t with z = sum_t c_t * basis[t].
    """
    m = len(basis)
    if base.e == 1:
        # digits of the encoding are exactly the power-basis coordinates
        return lambda z: tuple(_digits(z, base.p, m))
    embed = _subfield_embedding(base, ext)
    prime = GF(base.p)
    em = base.e * m
    cols = []
    for t in range(m):
        for d in range(base.e):
            elt = ext.mul(embed(base.p ** d), basis[t])
            cols.append(_digits(elt, base.p, em))
    # column (t*e + d) holds the digits of basis[t] * root^d
    mat = Matrix(prime, [[cols[c][r] for c in range(em)] for r in range(em)], em)
    inv = mat.inverse()

    def expand(z: int) -> tuple[int, ...]:
        digs = _digits(z, base.p, em)
        coords = []
        for r in range(em):
            acc = 0
            for c, d in enumerate(digs):
                if d:
                    acc = prime.add(acc, prime.mul(inv.rows[r][c], d))
            coords.append(acc)
        return tuple(_undigits(coords[t * base.e:(t + 1) * base.e], base.p)
                     for t in range(m))

    return expand


def gabidulin(base: GF, m: int, n: int, k: int) -> DelsarteCode:
    """The classical MRD construction as a Delsarte code of shape m x n.

    Codewords are evaluations of q-linearized polynomials
    a_0 x + a_1 x^q + ... + a_{k-1} x^{q^{k-1}} with coefficients in
    GF(q^m), taken at the first n elements of the power basis
    1, alpha, ..., alpha^{m-1} of GF(q^m), every value expanded over
    that same basis into a column.  The basis and evaluation points are
    fixed by the deterministic modulus, so the output is reproducible.
    Dimension is m*k and the minimum rank distance is n - k + 1.
    """
    if not 1 <= k <= n <= m:
        raise ValueError(
            f"need 1 <= k <= n <= m, got k={k}, n={n}, m={m}")
    q = base.q
    ext = field(base.p, base.e * m)
    if m == 1:
        basis = [1]
    else:
        alpha = base.p  # encoding of the polynomial x
        basis = [1]
        for _ in range(m - 1):
            basis.append(ext.mul(basis[-1], alpha))
    expand = _expansion_map(base, ext, basis)
    gens = []
    for i in range(k):
        qi = q ** i
        evals = [ext.pow(g, qi) for g in basis[:n]]
        for t in range(m):
            cols = [expand(ext.mul(basis[t], ev)) for ev in evals]
            rows = [[cols[j][r] for j in range(n)] for r in range(m)]
            gens.append(Matrix(base, rows, n))
    code = DelsarteCode.span(base, m, n, gens)
    assert code.dim == m * k, "evaluation map lost rank"
    return code


# -- distance and MRD -------------------------------------------------


def min_rank_distance(code: DelsarteCode,
                      guard: int = DEFAULT_CODEWORD_GUARD) -> int:
    """Minimum rank over all nonzero codewords, by full enumeration.

    Cross-checked against the first generalized weight, which counts
    the same quantity through the subspace lattice.
    """
    k = code.dim
    if k == 0:
        raise ValueError("zero code has no distance")
    q = code.field.q
    count = q ** k - 1
    if count > guard:
        raise GuardExceeded(
            f"code has {count} nonzero words, guard is {guard}",
            needed=count, guard=guard)
    F = code.field
    rows = code.basis.rows
    width = code.ambient_dim
    best = min(code.ncols, code.nrows)
    for enc in range(1, count + 1):
        coeffs = _digits(enc, q, k)
        vec = [0] * width
        for c, row in zip(coeffs, rows):
            if c:
                vec = [F.add(v, F.mul(c, r)) for v, r in zip(vec, row)]
        rank = devectorize(F, code.nrows, code.ncols, vec).rank()
        if rank < best:
            best = rank
            if best == 1:
                break
    lat = enumerate_subspaces(code.field, code.ncols)
    dims = subcode_dims(code, lat)
    d1 = min(lat.dims[j] for j, v in enumerate(dims) if v >= 1)
    assert best == d1, "codeword enumeration and lattice scan disagree"
    return best


def is_mrd(code: DelsarteCode) -> bool:
    """Whether the code meets the rank-metric Singleton bound.

    Requires m >= n and a positive dimension divisible by m; violations
    raise, they do not return False.
    """
    m, n = code.shape
    if m < n:
        raise ValueError("MRD test needs at least as many rows as columns")
    if code.dim == 0 or code.dim % m != 0:
        raise ValueError(
            f"dimension {code.dim} is not a positive multiple of m={m}")
    return min_rank_distance(code) == n - code.dim // m + 1


# -- anticode/support weight comparison --------------------------------


@dataclass(frozen=True)
class GapCertificate:
    """A code whose anticode-based weight drops below its support
    weight at index r."""
    code: DelsarteCode
    r: int
    anticode_weight: int
    support_weight: int


def anticode_gap_search(field: GF, size: int,
                        guard: int | None = None) -> GapCertificate | None:
    """Exhaustively search all codes of square shape size x size for an
    instance with some a_r < d_r.  Returns the first certificate in
    canonical code order, or None if the gap never occurs at this size.
    """
    ambient = enumerate_subspaces(field, size * size, guard)
    for member in ambient:
        if member.dim == 0:
            continue
        code = DelsarteCode(field, size, size, member.basis)
        d = code_weights(code)
        a = anticode_weights(code)
        for r in range(1, code.dim + 1):
            if a.values[r - 1] < d.values[r - 1]:
                return GapCertificate(code, r, a.values[r - 1], d.values[r - 1])
    return None


# -- random codes ------------------------------------------------------


def random_code(field: GF, m: int, n: int, k: int,
                rng: random.Random) -> DelsarteCode:
    """Uniformly random k-dimensional code of shape m x n.

    Rejection-samples a full-rank k x (m*n) matrix; every subspace has
    the same number of such generator matrices, so canonicalizing the
    row space samples uniformly.
    """
    if not 0 <= k <= m * n:
        raise ValueError(f"dimension {k} outside 0..{m * n}")
    if k == 0:
        return DelsarteCode.zero(field, m, n)
    width = m * n
    q = field.q
    while True:
        rows = [[rng.randrange(q) for _ in range(width)] for _ in range(k)]
        mat = Matrix(field, rows, width)
        if mat.rank() == k:
            return DelsarteCode(field, m, n, mat.row_basis())


def random_subcode(code: DelsarteCode, k: int,
                   rng: random.Random) -> DelsarteCode:
    """Uniformly random k-dimensional subcode."""
    if not 0 <= k <= code.dim:
        raise ValueError(f"subcode dimension {k} outside 0..{code.dim}")
    if k == 0:
        return DelsarteCode.zero(code.field, code.nrows, code.ncols)
    F = code.field
    q = F.q
    while True:
        coeff = Matrix(F, [[rng.randrange(q) for _ in range(code.dim)]
                           for _ in range(k)], code.dim)
        if coeff.rank() == k:
            picked = coeff @ code.basis
            return DelsarteCode(F, code.nrows, code.ncols, picked.row_basis())
