import pytest

from qmpoly import (GuardExceeded, Subspace, SubspaceLattice, all_subspaces,
                    enumerate_subspaces, gaussian_binomial, lattice_size)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(7, 0, 3) == 1
    assert gaussian_binomial(3, 4, 2) == 0
    # q -> 1 limit sanity at q=2: symmetric in k
    assert gaussian_binomial(5, 2, 2) == gaussian_binomial(5, 3, 2)


def test_small_lattice_counts(gf2):
    assert len(enumerate_subspaces(gf2, 1)) == 2
    assert len(enumerate_subspaces(gf2, 2)) == 5
    lat = enumerate_subspaces(gf2, 4)
    assert len(lat) == 67
    assert lat.dimension_counts() == {0: 1, 1: 15, 2: 35, 3: 15, 4: 1}


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_counts_match_gaussian_binomials(q, n, gf2, gf3):
    f = gf2 if q == 2 else gf3
    lat = enumerate_subspaces(f, n)
    counts = lat.dimension_counts()
    for k in range(n + 1):
        assert counts.get(k, 0) == gaussian_binomial(n, k, q)


def test_members_are_unique_and_ordered(gf3):
    lat = enumerate_subspaces(gf3, 3)
    assert len(set(lat.members)) == len(lat)
    keys = [(s.dim, s.encoding()) for s in lat]
    assert keys == sorted(keys)
    assert lat.dims[lat.zero_index] == 0
    assert lat.dims[lat.full_index] == 3


def test_ordering_is_stable_across_builds(gf2):
    a = SubspaceLattice(gf2, 3)
    b = SubspaceLattice(gf2, 3)
    assert [s.encoding() for s in a] == [s.encoding() for s in b]
    assert a.complements == b.complements


def test_complement_involution(gf2, gf3):
    for f, n in [(gf2, 3), (gf2, 4), (gf3, 2)]:
        lat = enumerate_subspaces(f, n)
        for i in range(len(lat)):
            j = lat.complements[i]
            assert lat.complements[j] == i
            assert lat.dims[i] + lat.dims[j] == n
        assert lat.complements[lat.zero_index] == lat.full_index


def test_orthogonal_complement_examples(gf2):
    zero = Subspace.zero(gf2, 2)
    assert zero.orthogonal_complement() == Subspace.full(gf2, 2)
    diag = Subspace(gf2, 2, [[1, 1]])
    assert diag.orthogonal_complement() == diag  # self-orthogonal line
    e1 = Subspace(gf2, 3, [[1, 0, 0]])
    assert e1.orthogonal_complement() == Subspace(gf2, 3, [[0, 1, 0], [0, 0, 1]])


def test_containment(gf2):
    zero = Subspace.zero(gf2, 2)
    full = Subspace.full(gf2, 2)
    line = Subspace(gf2, 2, [[1, 0]])
    assert zero <= line and zero <= full
    assert not (full <= line)
    e1 = Subspace(gf2, 3, [[1, 0, 0]])
    e12 = Subspace(gf2, 3, [[1, 0, 0], [0, 1, 0]])
    assert e1 <= e12
    assert not (e12 <= e1)
    with pytest.raises(ValueError):
        e1 <= line


def test_sum_and_intersection_operators(gf2):
    e1 = Subspace(gf2, 2, [[1, 0]])
    e2 = Subspace(gf2, 2, [[0, 1]])
    assert e1 + e2 == Subspace.full(gf2, 2)
    assert (e1 & e2).dim == 0
    assert e1 + e1 == e1


def test_canonicalization_of_spanning_sets(gf2):
    # redundant and unordered spanning rows give the same member
    s1 = Subspace(gf2, 3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    s2 = Subspace(gf2, 3, [[0, 1, 1], [1, 1, 0]])
    assert s1 == s2 and s1.dim == 2
    assert hash(s1) == hash(s2)


def test_lattice_index_and_membership(gf2):
    lat = enumerate_subspaces(gf2, 2)
    line = Subspace(gf2, 2, [[1, 1]])
    i = lat.index(line)
    assert lat[i] == line
    with pytest.raises(ValueError):
        lat.index(Subspace(gf2, 3, [[1, 0, 0]]))


def test_guard_exceeded_reports_needed_count(gf2):
    with pytest.raises(GuardExceeded) as exc:
        enumerate_subspaces(gf2, 40)
    assert exc.value.needed == lattice_size(gf2, 40)
    assert exc.value.needed > 10 ** 6


def test_generator_matches_lattice(gf2):
    lat = enumerate_subspaces(gf2, 3)
    assert tuple(all_subspaces(gf2, 3)) == lat.members
