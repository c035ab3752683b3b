import math
import random

import pytest

from qmpoly import (PolymatroidTable, Subspace, Verdict, check_axioms,
                    conullity_table, enumerate_subspaces, generalized_weights,
                    intersection_demipolymatroid, nullity_profiles,
                    nullity_table, residue_partition, sum_polymatroid,
                    uniform, wei_duality_report, weight_witnesses)


def brute_weights(table):
    """Independent route: scan every subspace for each r."""
    lat = table.lattice
    out = []
    for r in range(1, table.rank + 1):
        out.append(min(lat.dims[i] for i in range(len(lat))
                       if table.conullity_at(i) >= r))
    return tuple(out)


def test_uniform_values(gf2):
    u = uniform(1, 2, 2, gf2)
    assert u.values == (0, 2, 2, 2, 2)
    assert u.rank == 2
    assert uniform(0, 2, 3, gf2).values == (0,) * 5
    full = uniform(2, 2, 3, gf2)
    assert full.values == tuple(3 * d for d in full.lattice.dims)


def test_uniform_axioms_and_self_duality(gf2):
    u = uniform(1, 2, 2, gf2)
    assert check_axioms(u).verdict == Verdict.POLYMATROID
    assert u.dual() == u  # U(r,n)* = U(n-r,n), here r = n-r = 1
    assert uniform(0, 3, 2, gf2).dual() == uniform(3, 3, 2, gf2)


def test_nullity_conullity_values(gf2):
    u = uniform(1, 2, 2, gf2)
    lat = u.lattice
    zero, full = lat[lat.zero_index], lat[lat.full_index]
    assert u.conullity(zero) == 0
    assert u.conullity(full) == 2
    for i in range(len(lat)):
        if lat.dims[i] == 1:
            assert u.conullity_at(i) == 0
            assert u.nullity_at(i) == 0
    assert u.nullity(full) == 2


def test_dual_involution_and_rank(gf2):
    rng = random.Random(23)
    lat = enumerate_subspaces(gf2, 3)
    for m in (1, 2, 3):
        vals = [rng.randrange(m * d + 1) for d in lat.dims]
        t = PolymatroidTable(lat, m, vals)
        assert t.dual().dual() == t
        assert t.dual().rank == m * 3 - t.rank
    zero = PolymatroidTable(lat, 2, [0] * len(lat))
    assert zero.dual().values == tuple(2 * d for d in lat.dims)


def test_nullity_table_is_demi_not_polymatroid(gf2):
    u = uniform(1, 2, 2, gf2)
    nt = nullity_table(u)
    assert nt.values == (0, 0, 0, 0, 2)
    rep = check_axioms(nt)
    assert rep.verdict == Verdict.DEMI_POLYMATROID
    assert not rep.r3.ok
    i, j = rep.r3.witness
    lat = nt.lattice
    assert lat.dims[i] == lat.dims[j] == 1 and i != j
    ct = conullity_table(u)
    assert check_axioms(ct).verdict == Verdict.DEMI_POLYMATROID


def test_axiom_counterexamples_are_lattice_order_first(gf2):
    lat = enumerate_subspaces(gf2, 2)
    bad = PolymatroidTable(lat, 1, [0, 1, 0, 0, 0])  # a line outranks E
    rep = check_axioms(bad)
    assert not rep.r2.ok
    assert rep.r2.witness == (1, 4)
    i, j = rep.r2.witness
    assert lat.leq(i, j) and bad.values[i] > bad.values[j]


def test_generalized_weights_of_uniform_closed_form(gf2, gf3):
    for f in (gf2, gf3):
        for n in (2, 3):
            for m in (1, 2, 3):
                for r in range(n + 1):
                    t = uniform(r, n, m, f)
                    w = generalized_weights(t)
                    assert w.values == brute_weights(t)
                    expect = tuple(n - r + math.ceil(j / m)
                                   for j in range(1, m * r + 1))
                    assert w.values == expect


def test_weights_empty_for_rank_zero(gf2):
    t = uniform(0, 2, 2, gf2)
    w = generalized_weights(t)
    assert w.rank == 0 and w.values == ()


def test_weight_profile_is_monotone_with_m_gaps(gf2):
    rng = random.Random(5)
    lat = enumerate_subspaces(gf2, 3)
    # sums of block codes are polymatroids with arbitrary-ish profiles
    for _ in range(15):
        blocks = [lat[rng.randrange(len(lat))] for _ in range(2)]
        t = sum_polymatroid(blocks, lat)
        w = generalized_weights(t)
        vals = w.values
        assert all(1 <= v <= 3 for v in vals)
        assert all(vals[i] <= vals[i + 1] for i in range(len(vals) - 1))
        assert all(vals[i] < vals[i + 2] for i in range(len(vals) - 2))


def test_weight_witnesses(gf2):
    t = uniform(1, 2, 2, gf2)
    wit = weight_witnesses(t)
    w = generalized_weights(t)
    lat = t.lattice
    for r, idx in enumerate(wit, start=1):
        assert lat.dims[idx] == w.values[r - 1]
        assert t.conullity_at(idx) >= r
        # nothing earlier in lattice order qualifies
        assert all(t.conullity_at(i) < r for i in range(idx))


def test_nullity_profiles_identity(gf2):
    rng = random.Random(9)
    lat = enumerate_subspaces(gf2, 3)
    tables = [uniform(r, 3, 2, gf2) for r in range(4)]
    tables += [sum_polymatroid([lat[rng.randrange(len(lat))]
                                for _ in range(3)], lat) for _ in range(10)]
    for t in tables:
        prof = nullity_profiles(t)
        n, m, k = 3, t.m, t.rank
        for x in range(n + 1):
            assert prof.conullity[x] == prof.nullity[n - x] - m * (n - x) + k
        for x in range(1, n + 1):
            assert 0 <= prof.conullity[x] - prof.conullity[x - 1] <= m


def test_nullity_monotone_on_nested_pairs(gf2):
    rng = random.Random(77)
    lat = enumerate_subspaces(gf2, 3)
    tables = [uniform(r, 3, 2, gf2) for r in range(4)]
    tables += [sum_polymatroid([lat[rng.randrange(len(lat))]
                                for _ in range(2)], lat) for _ in range(6)]
    for t in tables:
        m = t.m
        for i in range(len(lat)):
            for j in range(len(lat)):
                if lat.leq(i, j):
                    gap = m * (lat.dims[j] - lat.dims[i])
                    assert 0 <= t.nullity_at(j) - t.nullity_at(i) <= gap
                    assert 0 <= t.conullity_at(j) - t.conullity_at(i) <= gap


def test_dimension_is_weight_iff_conullity_profile_jumps(gf2):
    t = uniform(1, 2, 2, gf2)
    prof = nullity_profiles(t)
    w = set(generalized_weights(t).values)
    for x in range(1, 3):
        assert (x in w) == (prof.conullity[x - 1] < prof.conullity[x])
    # no intermediate conullity value 1 is attained here
    assert prof.conullity == (0, 0, 2)


def test_wei_report_uniform_all_residues(gf2):
    for r in range(4):
        rep = wei_duality_report(uniform(r, 3, 2, gf2))
        assert rep.partition_ok and rep.disjoint_ok and rep.monotone_gaps_ok
        for res in rep.residues:
            assert res.dual_side | res.primal_side == set(range(1, 4))
            assert not res.dual_side & res.primal_side


def test_wei_report_rank_zero_side(gf2):
    rep = wei_duality_report(uniform(0, 2, 2, gf2))
    assert rep.rank == 0 and rep.dual_rank == 4
    for res in rep.residues:
        assert res.primal_side == frozenset()
        assert res.dual_side == {1, 2}
        assert res.partition_ok
    assert rep.partition_ok


def test_residue_partition_helper_on_classical_case(gf2):
    # m=1 is classical Wei duality; single residue
    t = sum_polymatroid([Subspace(gf2, 3, [[1, 0, 0], [0, 1, 0]])])
    rep = wei_duality_report(t)
    assert t.m == 1
    records, ok = residue_partition(3, 1, t.rank, rep.weights, rep.dual_weights)
    assert ok and len(records) == 1


def test_sum_polymatroid_examples(gf2):
    lat = enumerate_subspaces(gf2, 2)
    zero = Subspace.zero(gf2, 2)
    full = Subspace.full(gf2, 2)
    assert sum_polymatroid([zero, zero], lat).values == (0,) * 5
    t = sum_polymatroid([full, full], lat)
    assert t.values == tuple(2 * d for d in lat.dims)

    e1 = Subspace(gf2, 2, [[1, 0]])
    t = sum_polymatroid([e1, full], lat)
    rep = check_axioms(t)
    assert rep.verdict == Verdict.POLYMATROID
    w = generalized_weights(t)
    assert w.values[0] == 1
    assert t.conullity(e1) == 2  # dim(C1 & X) + dim(C2 & X) at X = span{e1}
    for i in range(len(lat)):
        expect = sum(lat.dims[lat.meet_index(lat.index(b), i)]
                     for b in (e1, full))
        assert t.conullity_at(i) == expect


def test_sum_polymatroid_ambient_mismatch(gf2, gf3):
    with pytest.raises(ValueError):
        sum_polymatroid([Subspace.full(gf2, 2), Subspace.full(gf2, 3)])
    with pytest.raises(ValueError):
        sum_polymatroid([Subspace.full(gf2, 2), Subspace.full(gf3, 2)])


def test_intersection_demipolymatroid_diagonal(gf2):
    lat = enumerate_subspaces(gf2, 2)
    diag = Subspace(gf2, 2, [[1, 1]])
    t = intersection_demipolymatroid([diag], [1], lat)
    assert t.m == 1 and t.rank == 1
    rep = check_axioms(t)
    assert rep.verdict == Verdict.DEMI_POLYMATROID
    assert not rep.r3.ok
    # the two coordinate axes witness the failure
    ax1 = lat.index(Subspace(gf2, 2, [[1, 0]]))
    ax2 = lat.index(Subspace(gf2, 2, [[0, 1]]))
    s = lat.sum_index(ax1, ax2)
    meet = lat.meet_index(ax1, ax2)
    assert t.values[s] + t.values[meet] > t.values[ax1] + t.values[ax2]


def test_intersection_demipolymatroid_dual_closed_form(gf2):
    rng = random.Random(31)
    lat = enumerate_subspaces(gf2, 3)
    for _ in range(10):
        spaces = [lat[rng.randrange(len(lat))] for _ in range(2)]
        weights = [rng.randrange(1, 3) for _ in range(2)]
        t = intersection_demipolymatroid(spaces, weights, lat)
        assert t.m == sum(weights)
        dual_direct = intersection_demipolymatroid(
            [v.orthogonal_complement() for v in spaces], weights, lat)
        assert t.dual() == dual_direct
        assert check_axioms(t).r4.ok


def test_intersection_demipolymatroid_full_spaces(gf2):
    lat = enumerate_subspaces(gf2, 2)
    full = Subspace.full(gf2, 2)
    t = intersection_demipolymatroid([full, full], [1, 2], lat)
    assert t.values == tuple(3 * d for d in lat.dims)


def test_intersection_demipolymatroid_weight_mismatch(gf2):
    full = Subspace.full(gf2, 2)
    with pytest.raises(ValueError):
        intersection_demipolymatroid([full, full], [1])
    with pytest.raises(ValueError):
        intersection_demipolymatroid([full], [0])


def test_table_validation(gf2):
    lat = enumerate_subspaces(gf2, 2)
    with pytest.raises(ValueError):
        PolymatroidTable(lat, 2, [0, 1])
    with pytest.raises(ValueError):
        PolymatroidTable(lat, 0, [0] * 5)
