"""Rank tables on a subspace lattice: (q,m)-polymatroids and their
demi-polymatroid relaxation.

A table assigns an integer rank to every member of a SubspaceLattice.
The classical axioms are

  R1: 0 <= rho(X) <= m * dim X
  R2: X <= Y implies rho(X) <= rho(Y)
  R3: rho(X + Y) + rho(X & Y) <= rho(X) + rho(Y)
  R4: the dual table rho*(X) = rho(X_perp) + m*dim X - rho(E)
      again satisfies R1 and R2

with a polymatroid requiring R1-R3 and a demi-polymatroid R1, R2, R4.
The r-th generalized weight of a table of rank K is the least dimension
of a subspace whose conullity rho(E) - rho(X_perp) reaches r, and the
m-fold Wei duality machinery below verifies how the weights of a table
and of its dual partition {1..n} residue class by residue class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import GuardExceeded
from .field import GF
from .lattice import Subspace, SubspaceLattice, enumerate_subspaces

DEFAULT_PAIR_GUARD = 10 ** 6


class Verdict(str, enum.Enum):
    POLYMATROID = "POLYMATROID"
    DEMI_POLYMATROID = "DEMI_POLYMATROID"
    NEITHER = "NEITHER"


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom scan; witness holds lattice indices of the
    first counterexample in lattice order, or None on a pass."""
    ok: bool
    witness: tuple[int, ...] | None = None
    note: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    r1: AxiomCheck
    r2: AxiomCheck
    r3: AxiomCheck
    r4: AxiomCheck
    verdict: Verdict


@dataclass(frozen=True)
class WeightProfile:
    """Generalized weights d_1 .. d_K of a rank-K structure."""
    rank: int
    values: tuple[int, ...]

    def weight(self, r: int) -> int:
        if not 1 <= r <= self.rank:
            raise IndexError(f"weight index {r} outside 1..{self.rank}")
        return self.values[r - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class NullityProfiles:
    """Per-dimension maxima of nullity and conullity.

    nullity[x] is the largest m*dim X - rho(X) over dim-x subspaces,
    conullity[x] the largest rho(E) - rho(X_perp).  x is a generalized
    weight exactly where conullity jumps, and nullity plays the same
    role for the dual table.
    """
    nullity: tuple[int, ...]
    conullity: tuple[int, ...]


@dataclass(frozen=True)
class ResidueDuality:
    """Weight sets for one residue class r mod m.

    dual_side:   {d_r(dual) : r in the class}
    primal_side: {n + 1 - d_r(primal) : r in the shifted class}
    """
    residue: int
    dual_side: frozenset[int]
    primal_side: frozenset[int]
    partition_ok: bool


@dataclass(frozen=True)
class WeiReport:
    n: int
    m: int
    rank: int
    dual_rank: int
    weights: WeightProfile
    dual_weights: WeightProfile
    residues: tuple[ResidueDuality, ...]
    partition_ok: bool
    disjoint_ok: bool
    monotone_gaps_ok: bool


class PolymatroidTable:
    """A total rank function on a subspace lattice, stored as a tuple.

    Tables are complete, never lazy: the axiom scans and Wei reports
    need every value, and lattices are guarded small.
    """

    __slots__ = ("lattice", "m", "values")

    def __init__(self, lattice: SubspaceLattice, m: int, values: Sequence[int]):
        values = tuple(int(v) for v in values)
        if len(values) != len(lattice):
            raise ValueError(
                f"table has {len(values)} values for {len(lattice)} subspaces")
        if m < 1:
            raise ValueError("multiplier m must be >= 1")
        self.lattice = lattice
        self.m = m
        self.values = values

    @classmethod
    def from_function(cls, lattice: SubspaceLattice, m: int,
                      fn: Callable[[Subspace], int]) -> PolymatroidTable:
        return cls(lattice, m, [fn(s) for s in lattice])

    @property
    def rank(self) -> int:
        return self.values[self.lattice.full_index]

    def value_at(self, i: int) -> int:
        return self.values[i]

    def rho(self, x: Subspace) -> int:
        return self.values[self.lattice.index(x)]

    def nullity_at(self, i: int) -> int:
        return self.m * self.lattice.dims[i] - self.values[i]

    def conullity_at(self, i: int) -> int:
        return self.rank - self.values[self.lattice.complements[i]]

    def nullity(self, x: Subspace) -> int:
        return self.nullity_at(self.lattice.index(x))

    def conullity(self, x: Subspace) -> int:
        return self.conullity_at(self.lattice.index(x))

    def dual(self) -> PolymatroidTable:
        """Pointwise rho*(X) = rho(X_perp) + m*dim X - rho(E)."""
        lat = self.lattice
        k = self.rank
        vals = [self.values[lat.complements[i]] + self.m * lat.dims[i] - k
                for i in range(len(lat))]
        return PolymatroidTable(lat, self.m, vals)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolymatroidTable)
                and self.lattice.field == other.lattice.field
                and self.lattice.n == other.lattice.n
                and self.m == other.m
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash((self.lattice.field, self.lattice.n, self.m, self.values))

    def __repr__(self) -> str:
        return (f"PolymatroidTable(GF({self.lattice.field.q})^{self.lattice.n}, "
                f"m={self.m}, rank={self.rank})")


def uniform(r: int, n: int, m: int, field: GF,
            guard: int | None = None) -> PolymatroidTable:
    """The uniform table rho(X) = m * min(dim X, r)."""
    if not 0 <= r <= n:
        raise ValueError(f"uniform parameter r={r} outside 0..{n}")
    lat = enumerate_subspaces(field, n, guard)
    return PolymatroidTable(lat, m, [m * min(d, r) for d in lat.dims])


def nullity_table(table: PolymatroidTable) -> PolymatroidTable:
    """The table X -> m*dim X - rho(X)."""
    lat = table.lattice
    return PolymatroidTable(lat, table.m,
                            [table.nullity_at(i) for i in range(len(lat))])


def conullity_table(table: PolymatroidTable) -> PolymatroidTable:
    """The table X -> rho(E) - rho(X_perp)."""
    lat = table.lattice
    return PolymatroidTable(lat, table.m,
                            [table.conullity_at(i) for i in range(len(lat))])


def _scan_r1(table: PolymatroidTable) -> AxiomCheck:
    lat = table.lattice
    for i, v in enumerate(table.values):
        if not 0 <= v <= table.m * lat.dims[i]:
            return AxiomCheck(False, (i,))
    return AxiomCheck(True)


def _scan_r2(table: PolymatroidTable) -> AxiomCheck:
    lat = table.lattice
    n_members = len(lat)
    vals = table.values
    for i in range(n_members):
        for j in range(n_members):
            if i != j and vals[i] > vals[j] and lat.leq(i, j):
                return AxiomCheck(False, (i, j))
    return AxiomCheck(True)


def check_axioms(table: PolymatroidTable,
                 pair_guard: int | None = None) -> AxiomReport:
    """Scan R1 over members, R2 and R3 over all pairs, and R4 by
    building the dual table and rescanning R1/R2 on it."""
    lat = table.lattice
    n_members = len(lat)
    limit = DEFAULT_PAIR_GUARD if pair_guard is None else pair_guard
    if n_members * n_members > limit:
        raise GuardExceeded(
            f"axiom pair scan needs {n_members * n_members} pairs, guard is {limit}",
            needed=n_members * n_members, guard=limit)

    r1 = _scan_r1(table)
    r2 = _scan_r2(table)

    r3 = AxiomCheck(True)
    vals = table.values
    for i in range(n_members):
        for j in range(i + 1, n_members):
            s = lat.sum_index(i, j)
            t = lat.meet_index(i, j)
            if vals[s] + vals[t] > vals[i] + vals[j]:
                r3 = AxiomCheck(False, (i, j))
                break
        if not r3.ok:
            break

    dual = table.dual()
    d1 = _scan_r1(dual)
    d2 = _scan_r2(dual)
    if d1.ok and d2.ok:
        r4 = AxiomCheck(True)
    elif not d1.ok:
        r4 = AxiomCheck(False, d1.witness, note="dual table violates R1")
    else:
        r4 = AxiomCheck(False, d2.witness, note="dual table violates R2")

    if r1.ok and r2.ok and r3.ok:
        verdict = Verdict.POLYMATROID
    elif r1.ok and r2.ok and r4.ok:
        verdict = Verdict.DEMI_POLYMATROID
    else:
        verdict = Verdict.NEITHER
    return AxiomReport(r1, r2, r3, r4, verdict)


def nullity_profiles(table: PolymatroidTable) -> NullityProfiles:
    lat = table.lattice
    n = lat.n
    h = [None] * (n + 1)
    hstar = [None] * (n + 1)
    for i in range(len(lat)):
        d = lat.dims[i]
        nu = table.nullity_at(i)
        co = table.conullity_at(i)
        if h[d] is None or nu > h[d]:
            h[d] = nu
        if hstar[d] is None or co > hstar[d]:
            hstar[d] = co
    return NullityProfiles(tuple(h), tuple(hstar))


def generalized_weights(table: PolymatroidTable) -> WeightProfile:
    """d_r = min { dim X : conullity(X) >= r } for r = 1 .. rank.

    A rank-0 table yields the empty profile.  If some r <= rank is
    never reached the table breaks the rank axioms and the call fails.
    """
    k = table.rank
    if k < 0:
        raise ValueError("negative rank; table violates the axioms")
    if k == 0:
        return WeightProfile(0, ())
    prof = nullity_profiles(table).conullity
    n = table.lattice.n
    out = []
    for r in range(1, k + 1):
        x = next((x for x in range(n + 1) if prof[x] >= r), None)
        if x is None:
            raise ValueError(
                f"conullity never reaches {r}; table violates the axioms")
        out.append(x)
    return WeightProfile(k, tuple(out))


def weight_witnesses(table: PolymatroidTable) -> tuple[int, ...]:
    """For each r, the first lattice index attaining d_r.

    Members are ordered by dimension, so the first index with
    conullity >= r has minimal dimension.
    """
    k = table.rank
    lat = table.lattice
    out = []
    for r in range(1, k + 1):
        idx = next((i for i in range(len(lat))
                    if table.conullity_at(i) >= r), None)
        if idx is None:
            raise ValueError(f"conullity never reaches {r}")
        out.append(idx)
    return tuple(out)


def residue_partition(n: int, m: int, rank: int,
                      weights: WeightProfile,
                      dual_weights: WeightProfile) -> tuple[tuple[ResidueDuality, ...], bool]:
    """Per residue s in 0..m-1, the dual-side weight set and the
    reflected primal-side set for the class shifted by the rank; each
    record carries whether the two sets partition {1..n}."""
    full = frozenset(range(1, n + 1))
    records = []
    all_ok = True
    for s in range(m):
        dual_side = frozenset(
            dual_weights.values[r - 1]
            for r in range(1, dual_weights.rank + 1) if r % m == s)
        t = (s + rank) % m
        primal_side = frozenset(
            n + 1 - weights.values[r - 1]
            for r in range(1, weights.rank + 1) if r % m == t)
        ok = dual_side.isdisjoint(primal_side) and dual_side | primal_side == full
        all_ok = all_ok and ok
        records.append(ResidueDuality(s, dual_side, primal_side, ok))
    return tuple(records), all_ok


def _monotone_gaps_ok(profile: WeightProfile, m: int) -> bool:
    vals = profile.values
    return all(vals[r - 1] < vals[r + m - 1]
               for r in range(1, profile.rank - m + 1))


def wei_duality_report(table: PolymatroidTable) -> WeiReport:
    """Compute the weights of the table and of its dual and check the
    m-fold duality: per-residue partitions of {1..n}, the pairwise
    non-collision of dual weights with reflected primal weights, and
    the strict d_r < d_{r+m} gaps on both sides."""
    n = table.lattice.n
    m = table.m
    k = table.rank
    dual = table.dual()
    weights = generalized_weights(table)
    dual_weights = generalized_weights(dual)

    residues, partition_ok = residue_partition(n, m, k, weights, dual_weights)

    disjoint_ok = True
    for r in range(1, dual_weights.rank + 1):
        for rp in range(1, weights.rank + 1):
            if (rp - k - r) % m == 0 and \
                    dual_weights.values[r - 1] == n + 1 - weights.values[rp - 1]:
                disjoint_ok = False
    gaps_ok = _monotone_gaps_ok(weights, m) and _monotone_gaps_ok(dual_weights, m)

    return WeiReport(n=n, m=m, rank=k, dual_rank=dual.rank,
                     weights=weights, dual_weights=dual_weights,
                     residues=residues, partition_ok=partition_ok,
                     disjoint_ok=disjoint_ok, monotone_gaps_ok=gaps_ok)


def sum_polymatroid(blocks: Sequence[Subspace],
                    lattice: SubspaceLattice | None = None) -> PolymatroidTable:
    """Sum of the rank functions of m length-n block codes.

    Each block C_i (a subspace of GF(q)^n) contributes
    dim C_i - dim(C_i & X_perp); the total is a (q,m)-polymatroid with
    m = number of blocks and conullity sum_i dim(C_i & X).
    """
    if not blocks:
        raise ValueError("need at least one block code")
    field, n = blocks[0].field, blocks[0].n
    for b in blocks[1:]:
        if b.field != field or b.n != n:
            raise ValueError("ambient space mismatch among blocks")
    lat = lattice if lattice is not None else enumerate_subspaces(field, n)
    bidx = [lat.index(b) for b in blocks]
    vals = []
    for j in range(len(lat)):
        cj = lat.complements[j]
        vals.append(sum(lat.dims[bi] - lat.dims[lat.meet_index(bi, cj)]
                        for bi in bidx))
    return PolymatroidTable(lat, len(blocks), vals)


def intersection_demipolymatroid(
        spaces: Sequence[Subspace], weights: Sequence[int],
        lattice: SubspaceLattice | None = None) -> PolymatroidTable:
    """Weighted intersection-dimension table
    rho(J) = sum_i w_i * dim(V_i & J), with multiplier m = sum of the
    weights.  Generally a demi-polymatroid only; its dual is the same
    construction on the orthogonal complements of the V_i.
    """
    if len(spaces) != len(weights):
        raise ValueError(
            f"{len(spaces)} subspaces but {len(weights)} weights")
    if not spaces:
        raise ValueError("need at least one subspace")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    field, n = spaces[0].field, spaces[0].n
    for v in spaces[1:]:
        if v.field != field or v.n != n:
            raise ValueError("ambient space mismatch among subspaces")
    lat = lattice if lattice is not None else enumerate_subspaces(field, n)
    vidx = [lat.index(v) for v in spaces]
    vals = []
    for j in range(len(lat)):
        vals.append(sum(w * lat.dims[lat.meet_index(vi, j)]
                        for vi, w in zip(vidx, weights)))
    return PolymatroidTable(lat, sum(weights), vals)
