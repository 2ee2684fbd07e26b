import itertools

import numpy as np
import pytest

from derangements import (BlockSystem, PermGroup, Permutation, compose,
                          conjugate, commutator, derangement_backtrack,
                          parse_cycles)
from derangements.perm import permutation_from_cycles_1indexed

from tests.conftest import alternating, cyclic, dihedral, klein4, symmetric


def test_composition_is_left_to_right():
    # (a*b)(x) = b(a(x)): apply a first.
    a = Permutation(np.array([1, 0, 2]))  # (0 1)
    b = Permutation(np.array([0, 2, 1]))  # (1 2)
    ab = a * b
    assert ab(0) == b(a(0)) == 2
    assert compose(a, b) == ab
    assert (a * b) * a == a * (b * a)


def test_inverse_and_power():
    g = Permutation.from_cycles(6, [(0, 1, 2, 3, 4)])
    assert (g * g.inverse()).is_identity()
    assert g ** 5 == Permutation.identity(6)
    assert g ** -1 == g.inverse()
    assert g ** 3 == g * g * g
    assert g.order() == 5


def test_cycles_and_cycle_string():
    g = Permutation.from_cycles(7, [(0, 1, 2), (3, 4)])
    assert [list(c) for c in g.cycles()] == [[0, 1, 2], [3, 4]]
    assert g.cycle_string() == "(1,2,3)(4,5)"
    assert Permutation.identity(3).cycle_string() == "()"
    assert g.cycle_type() == (3, 2)
    assert sorted(g.fixed_points()) == [5, 6]


def test_parse_cycles_round_trip():
    cycles = parse_cycles("(1 2 3)(4 5)")
    assert [list(c) for c in cycles] == [[1, 2, 3], [4, 5]]
    g = permutation_from_cycles_1indexed(7, cycles)
    assert g.cycle_string() == "(1,2,3)(4,5)"
    assert [list(c) for c in parse_cycles("(1,2,3)")] == [[1, 2, 3]]
    assert parse_cycles("()") == []
    with pytest.raises(ValueError):
        parse_cycles("(1 2")
    with pytest.raises(ValueError):
        parse_cycles("(1 2 2)")


def test_conjugate_and_commutator():
    x = Permutation.from_cycles(5, [(0, 1, 2)])
    g = Permutation.from_cycles(5, [(2, 3, 4)])
    # conjugation preserves cycle type and relabels points by g
    assert conjugate(x, g).cycle_type() == x.cycle_type()
    assert conjugate(x, g) == g.inverse() * x * g
    assert commutator(x, g) == x.inverse() * g.inverse() * x * g


def naive_closure(gens, degree):
    seen = {Permutation.identity(degree).key()}
    frontier = [Permutation.identity(degree)]
    elems = list(frontier)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.key() not in seen:
                    seen.add(y.key())
                    new.append(y)
                    elems.append(y)
        frontier = new
    return elems


@pytest.mark.parametrize("factory,expected", [
    (lambda: symmetric(4), 24),
    (lambda: alternating(5), 60),
    (lambda: cyclic(7), 7),
    (lambda: dihedral(6), 12),
    (lambda: klein4(), 4),
])
def test_chain_order_matches_naive_closure(factory, expected):
    G = factory()
    assert G.order() == expected
    assert len(naive_closure(G.generators, G.degree)) == expected


def test_membership():
    G = alternating(5)
    assert G.contains(Permutation.from_cycles(5, [(0, 1, 2)]))
    assert not G.contains(Permutation.from_cycles(5, [(0, 1)]))
    for x in G.enumerate_elements():
        assert G.contains(x)


def test_orbit_stabilizer():
    G = symmetric(5)
    H = G.point_stabilizer(0)
    assert H.order() == 24
    assert len(G.orbit(0)) * H.order() == G.order()
    assert all(g.images[0] == 0 for g in H.generators)


def test_orbits_partition():
    g = Permutation.from_cycles(6, [(0, 1), (2, 3, 4)])
    G = PermGroup([g])
    orbs = sorted(sorted(o) for o in G.orbits())
    assert orbs == [[0, 1], [2, 3, 4], [5]]
    assert not G.is_transitive()
    assert symmetric(4).is_transitive()


def test_normal_closure_and_derived():
    S4 = symmetric(4)
    v = Permutation.from_cycles(4, [(0, 1), (2, 3)])
    V = S4.normal_closure([v])
    assert V.order() == 4
    assert S4.is_normal(V)
    assert S4.derived_subgroup().order() == 12  # A4
    A4 = alternating(4)
    assert A4.derived_subgroup().order() == 4  # V4


def test_join():
    a = PermGroup([Permutation.from_cycles(4, [(0, 1)])])
    b = PermGroup([Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    assert a.join(b).order() == 24


def test_block_systems():
    D8 = dihedral(4)
    bs = D8.minimal_block_system(0, 2)
    assert bs is not None
    assert sorted(tuple(sorted(c)) for c in bs.cells) == [(0, 2), (1, 3)]
    assert bs.is_invariant(D8)
    assert not D8.is_primitive()
    assert symmetric(5).is_primitive()
    # a regular cyclic group of prime order is primitive
    assert cyclic(5).is_primitive()
    assert not cyclic(6).is_primitive()
    assert cyclic(6).nontrivial_block_system() is not None
    assert symmetric(5).nontrivial_block_system() is None


def test_block_system_validation():
    with pytest.raises(ValueError):
        BlockSystem(4, [[0, 1], [1, 2, 3]])  # overlap
    with pytest.raises(ValueError):
        BlockSystem(4, [[0, 1]])  # not a partition
    bs = BlockSystem(4, [[0, 1], [2, 3]])
    assert bs.cell_of(3) == bs.cell_of(2)


def test_enumerate_elements_counts():
    G = symmetric(4)
    elems = list(G.enumerate_elements())
    assert len(elems) == 24
    assert len({e.key() for e in elems}) == 24


def test_element_batches_identity_group():
    G = PermGroup([], degree=5)
    batches = list(G.element_batches())
    assert len(batches) == 1 and batches[0].shape == (1, 5)


def naive_derangement(G, r):
    for x in G.enumerate_elements():
        if x.order() == r and x.num_fixed() == 0:
            return x
    return None


@pytest.mark.parametrize("factory", [
    lambda: symmetric(4),
    lambda: alternating(5),
    lambda: dihedral(6),
    lambda: cyclic(6),
    lambda: klein4(),
])
def test_backtrack_matches_enumeration(factory):
    G = factory()
    for r in (2, 3, 5):
        found = derangement_backtrack(G, r)
        expected = naive_derangement(G, r)
        assert (found is None) == (expected is None)
        if found is not None:
            assert found.order() == r
            assert found.num_fixed() == 0
            assert G.contains(found)


def test_backtrack_determinism_returns_lex_least():
    G = symmetric(4)
    w = derangement_backtrack(G, 2, determinism=True)
    all_w = sorted(
        (x for x in G.enumerate_elements()
         if x.order() == 2 and x.num_fixed() == 0),
        key=lambda x: tuple(x.images),
    )
    assert w == all_w[0]


def test_random_element_lands_in_group():
    G = alternating(5)
    rng = np.random.default_rng(7)
    for _ in range(50):
        assert G.contains(G.random_element(rng))


def test_chain_base_images_determine_elements():
    # two distinct elements never share all base-point images
    G = symmetric(4)
    base = G.chain.base
    seen = {}
    for x in G.enumerate_elements():
        k = tuple(int(x.images[b]) for b in base)
        assert k not in seen
        seen[k] = x


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        PermGroup([Permutation(np.array([1, 0])),
                   Permutation(np.array([1, 2, 0]))])
    with pytest.raises(ValueError):
        Permutation(np.array([0, 0, 1]))


def test_identity_group_order():
    G = PermGroup([], degree=3)
    assert G.order() == 1
    assert sorted(sorted(o) for o in G.orbits()) == [[0], [1], [2]]
