"""Flags (nested chains) of Delsarte codes and their duality.

A flag C_1 >= C_2 >= ... >= C_s carries the alternating-sum rank
function rho(X) = sum_i (-1)^(i+1) rho_i(X), where rho_i is the rank
function of the i-th code's table.  The result is always a
demi-polymatroid, usually not a polymatroid, and its conullity is the
alternating sum of the supported subcode dimensions.

Dualizing reverses the chain and trace-dualizes every member.  For
flags of odd length the dual flag's table is the dual table; for even
length it is the conullity table.  Appending a zero code to an even,
strictly decreasing flag normalizes it without changing the table, and
on normalized flags duality is an exact match between the two routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .delsarte import DelsarteCode, subcode, subcode_dims, trace_dual
from .lattice import Subspace, SubspaceLattice, enumerate_subspaces
from .polymatroid import PolymatroidTable, WeightProfile


class NestingError(ValueError):
    """A flag whose codes fail to nest; index points at the first
    member not contained in its predecessor."""

    def __init__(self, index: int):
        super().__init__(
            f"flag member {index} is not a subcode of member {index - 1}")
        self.index = index


class Flag:
    """A tuple of codes, each containing the next."""

    __slots__ = ("codes",)

    def __init__(self, codes: Sequence[DelsarteCode]):
        codes = tuple(codes)
        if not codes:
            raise ValueError("a flag needs at least one code")
        first = codes[0]
        for i, c in enumerate(codes[1:], start=1):
            if c.field != first.field or c.shape != first.shape:
                raise ValueError("flag members live in different matrix spaces")
            if not c.is_subcode_of(codes[i - 1]):
                raise NestingError(i)
        self.codes = codes

    @property
    def length(self) -> int:
        return len(self.codes)

    @property
    def field(self):
        return self.codes[0].field

    @property
    def shape(self) -> tuple[int, int]:
        return self.codes[0].shape

    @property
    def rank(self) -> int:
        """Alternating sum of the member dimensions."""
        return sum((-1) ** i * c.dim for i, c in enumerate(self.codes))

    def is_strict(self) -> bool:
        return all(self.codes[i + 1].dim < self.codes[i].dim
                   for i in range(len(self.codes) - 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Flag) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        dims = ", ".join(str(c.dim) for c in self.codes)
        m, n = self.shape
        return f"Flag(GF({self.field.q}), {m}x{n}, dims=({dims}))"


class NormalizedFlag(Flag):
    """Odd-length flag of strictly decreasing codes (the last may be
    zero).  The class closed under flag duality."""

    def __init__(self, codes: Sequence[DelsarteCode]):
        super().__init__(codes)
        if len(self.codes) % 2 == 0:
            raise ValueError("a normalized flag has odd length")
        if not self.is_strict():
            raise ValueError("a normalized flag strictly decreases")
        m, n = self.shape
        bound = 2 * ((m * n) // 2) + 1
        if len(self.codes) > bound:
            raise ValueError(
                f"normalized flags in a {m}x{n} space have length <= {bound}")


def flag_new(codes: Sequence[DelsarteCode]) -> Flag:
    return Flag(codes)


def _member_dims(flag: Flag, lattice: SubspaceLattice) -> list[tuple[int, ...]]:
    return [subcode_dims(c, lattice) for c in flag.codes]


def flag_polymatroid(flag: Flag,
                     lattice: SubspaceLattice | None = None) -> PolymatroidTable:
    """Alternating-sum rank table of the flag."""
    m, n = flag.shape
    lat = lattice if lattice is not None else enumerate_subspaces(flag.field, n)
    per_code = _member_dims(flag, lat)
    comp = lat.complements
    vals = []
    for j in range(len(lat)):
        acc = 0
        for i, (code, dims) in enumerate(zip(flag.codes, per_code)):
            acc += (-1) ** i * (code.dim - dims[comp[j]])
        vals.append(acc)
    return PolymatroidTable(lat, m, vals)


def flag_conullity(flag: Flag, x: Subspace) -> int:
    """Alternating sum of the supported subcode dimensions at x.

    Always nonnegative for a genuine flag; a negative value would be an
    internal error, not bad input.
    """
    if flag.field != x.field or flag.shape[1] != x.n:
        raise ValueError("subspace ambient does not match flag columns")
    acc = 0
    for i, c in enumerate(flag.codes):
        acc += (-1) ** i * subcode(c, x).dim
    assert acc >= 0, "alternating subcode dimensions went negative"
    return acc


def flag_weights(flag: Flag,
                 lattice: SubspaceLattice | None = None) -> WeightProfile:
    """d_r = min { dim X : alternating subcode dimension at X >= r }."""
    k = flag.rank
    if k == 0:
        raise ValueError("rank-zero flag has no weights")
    m, n = flag.shape
    lat = lattice if lattice is not None else enumerate_subspaces(flag.field, n)
    per_code = _member_dims(flag, lat)
    best = [0] * (n + 1)
    for j in range(len(lat)):
        v = sum((-1) ** i * dims[j] for i, dims in enumerate(per_code))
        d = lat.dims[j]
        if v > best[d]:
            best[d] = v
    out = []
    for r in range(1, k + 1):
        x = next((x for x in range(n + 1) if best[x] >= r), None)
        if x is None:
            raise ValueError(f"flag conullity never reaches {r}")
        out.append(x)
    return WeightProfile(k, tuple(out))


def dual_flag(flag: Flag) -> Flag:
    """Trace-dualize every member and reverse the chain."""
    return Flag(tuple(trace_dual(c) for c in reversed(flag.codes)))


def normalize_flag(flag: Flag) -> NormalizedFlag:
    """Append a zero code to an even-length strict flag; odd-length
    strict flags pass through.  Even-length flags already ending in the
    zero code are rejected rather than padded twice."""
    if not flag.is_strict():
        raise ValueError("normalization needs strictly decreasing codes")
    codes = flag.codes
    if len(codes) % 2 == 0:
        if codes[-1].dim == 0:
            raise ValueError(
                "even-length flag already ends in the zero code; "
                "drop it instead of normalizing")
        m, n = flag.shape
        codes = codes + (DelsarteCode.zero(flag.field, m, n),)
    return NormalizedFlag(codes)


@dataclass(frozen=True)
class FlagDualityReport:
    """Result of comparing the dual flag's table against the expected
    identity: the dual table when the length is odd, the conullity
    table when it is even."""
    length: int
    expected: str
    ok: bool
    first_mismatch: int | None
    normalized: bool
    normalized_ok: bool | None


def verify_flag_duality(flag: Flag,
                        lattice: SubspaceLattice | None = None) -> FlagDualityReport:
    table = flag_polymatroid(flag, lattice)
    lat = table.lattice
    dual_table = flag_polymatroid(dual_flag(flag), lat)
    if flag.length % 2 == 1:
        expected_name = "dual"
        expected = table.dual().values
    else:
        expected_name = "conullity"
        expected = tuple(table.conullity_at(j) for j in range(len(lat)))
    mismatch = next((j for j, (a, b) in enumerate(zip(dual_table.values, expected))
                     if a != b), None)
    ok = mismatch is None
    normalized = flag.length % 2 == 1 and flag.is_strict()
    normalized_ok = ok if normalized else None
    return FlagDualityReport(length=flag.length, expected=expected_name,
                             ok=ok, first_mismatch=mismatch,
                             normalized=normalized, normalized_ok=normalized_ok)


class RelativeWeights(NamedTuple):
    weights: WeightProfile
    dual_weights: WeightProfile


def relative_weights(outer: DelsarteCode,
                     inner: DelsarteCode,
                     lattice: SubspaceLattice | None = None) -> RelativeWeights:
    """Weights of the pair flag (outer, inner) and of its dual side.

    The dual profile reads min { dim X : m*dim X - dim inner_dual(X)
    + dim outer_dual(X) >= r } for r up to m*n - (dim outer - dim inner);
    the pair satisfies the m-fold partition with rank
    K = dim outer - dim inner.
    """
    if not (inner.is_subcode_of(outer) and inner.dim < outer.dim):
        raise ValueError("containment must be strict")
    m, n = outer.shape
    lat = lattice if lattice is not None else enumerate_subspaces(outer.field, n)
    pair = Flag((outer, inner))
    primal = flag_weights(pair, lat)
    k = outer.dim - inner.dim
    outer_dual_dims = subcode_dims(trace_dual(outer), lat)
    inner_dual_dims = subcode_dims(trace_dual(inner), lat)
    best = [0] * (n + 1)
    for j in range(len(lat)):
        v = m * lat.dims[j] - inner_dual_dims[j] + outer_dual_dims[j]
        d = lat.dims[j]
        if v > best[d]:
            best[d] = v
    out = []
    for r in range(1, m * n - k + 1):
        x = next((x for x in range(n + 1) if best[x] >= r), None)
        if x is None:
            raise ValueError(f"dual-side support never reaches {r}")
        out.append(x)
    return RelativeWeights(primal, WeightProfile(m * n - k, tuple(out)))
