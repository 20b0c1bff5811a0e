import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gcover.errors import GroupTooLarge, MixedGroups, NotAPermutation
from gcover.group import (OrbitType, Subgroup, alternating_group, close_generators,
                          cyclic_group, dihedral_group, direct_product, is_linearly_ordered,
                          orbit, orbit_type_poset, perm_compose, perm_from_cycles,
                          perm_inverse, permutation_action, stabilizer, subgroups,
                          symmetric_group)


def quaternion_group():
    # left-regular representation on ±1, ±i, ±j, ±k encoded as (sign, unit)
    table = {("1", u): (1, u) for u in "1ijk"}
    table.update({(u, "1"): (1, u) for u in "1ijk"})
    for u in "ijk":
        table[(u, u)] = (-1, "1")
    table.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    def left(x):
        return tuple(elems.index(mul(x, y)) for y in elems)

    return close_generators(8, [left((1, "i")), left((1, "j"))], name="Q8")


def brute_subgroup_count(G, max_gens=3):
    """Closures of small element subsets, computed on raw permutations."""
    els = list(G.elements)
    found = set()
    for k in range(max_gens + 1):
        for gens in itertools.combinations(els, k):
            closed = {tuple(range(G.degree))}
            frontier = list(closed)
            while frontier:
                x = frontier.pop()
                for s in gens:
                    y = perm_compose(s, x)
                    if y not in closed:
                        closed.add(y)
                        frontier.append(y)
            found.add(frozenset(closed))
    return len(found)


def brute_subgroup_count_all_subsets(G):
    els = list(G.elements)
    count = 0
    for mask in range(1, 1 << len(els)):
        S = {els[i] for i in range(len(els)) if mask >> i & 1}
        if all(perm_compose(a, b) in S for a in S for b in S):
            count += 1
    return count


def test_close_generators_examples():
    assert close_generators(3, [(1, 2, 0)]).order == 3
    assert close_generators(1, []).order == 1
    s4 = close_generators(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
    assert s4.order == 24
    # oracle: all 24 permutations of 4 points
    assert set(s4.elements) == set(itertools.permutations(range(4)))


def test_close_generators_errors():
    with pytest.raises(NotAPermutation):
        close_generators(3, [(0, 0, 1)])
    with pytest.raises(NotAPermutation):
        close_generators(3, [(0, 1)])
    with pytest.raises(GroupTooLarge):
        close_generators(8, [(1, 0, 2, 3, 4, 5, 6, 7), tuple(range(1, 8)) + (0,)], cap=100)


def test_group_cap_from_environment(monkeypatch):
    monkeypatch.setenv("GCOVER_GROUP_CAP", "10")
    with pytest.raises(GroupTooLarge):
        symmetric_group(4)


@pytest.mark.parametrize("G, expected", [
    (cyclic_group(2), 2),
    (cyclic_group(6), 4),
    (symmetric_group(3), 6),
    (dihedral_group(4), 10),
    (quaternion_group(), 6),
])
def test_subgroup_counts_small_exhaustive(G, expected):
    assert len(subgroups(G)) == expected
    assert brute_subgroup_count_all_subsets(G) == expected


@pytest.mark.parametrize("G, expected", [
    (alternating_group(4), 10),
    (symmetric_group(4), 30),
    (direct_product(cyclic_group(2), cyclic_group(2), cyclic_group(2)), 16),
    (dihedral_group(6), 16),
])
def test_subgroup_counts_against_closure_oracle(G, expected):
    assert len(subgroups(G)) == expected
    assert brute_subgroup_count(G) == expected


@pytest.mark.parametrize("G", [cyclic_group(6), symmetric_group(4), quaternion_group(),
                               dihedral_group(5), alternating_group(4)])
def test_subgroups_are_closed_and_lagrange(G):
    subs = subgroups(G)
    assert subs[0].order == 1 and subs[-1].order == G.order
    for H in subs:
        assert H.is_closed()
        assert 0 in H
        assert G.order % H.order == 0


def test_orbit_type_poset_examples():
    P = orbit_type_poset(cyclic_group(5))
    assert [t.order for t in P.types] == [1, 5]
    P4 = orbit_type_poset(cyclic_group(4))
    assert [t.order for t in P4.types] == [1, 2, 4]
    assert is_linearly_ordered(P4.types)
    P = orbit_type_poset(symmetric_group(3))
    assert [t.order for t in P.types] == [1, 2, 3, 6]
    z2, z3 = P.types[1], P.types[2]
    assert len(z2.conjugates) == 3
    assert not (z2 <= z3) and not (z3 <= z2)
    assert not is_linearly_ordered([z2, z3])
    assert is_linearly_ordered([z2])


def test_orbit_type_poset_is_partial_order():
    for G in (symmetric_group(4), dihedral_group(4), alternating_group(4)):
        P = orbit_type_poset(G)
        for a in P.types:
            assert P.leq(a, a)
            for b in P.types:
                if P.leq(a, b) and P.leq(b, a):
                    assert a == b
                for c in P.types:
                    if P.leq(a, b) and P.leq(b, c):
                        assert P.leq(a, c)


def test_dominance_matches_brute_force_conjugation():
    G = symmetric_group(4)
    P = orbit_type_poset(G)
    for a in P.types:
        for b in P.types:
            brute = any(H.elements <= K.elements for H in a.conjugates for K in b.conjugates)
            assert P.leq(a, b) == brute


def test_prime_power_cyclic_poset_is_a_chain():
    for n in (2, 4, 8, 9, 16):
        P = orbit_type_poset(cyclic_group(n))
        assert is_linearly_ordered(P.types)
        assert len(P.types) == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_mixed_groups_rejected():
    a = OrbitType.of(Subgroup(cyclic_group(2), [0]))
    b = OrbitType.of(Subgroup(cyclic_group(3), [0]))
    with pytest.raises(MixedGroups):
        is_linearly_ordered([a, b])


def test_stabilizer_and_orbit_examples():
    G = cyclic_group(6)
    assert stabilizer(G, permutation_action, 0).order == 1
    assert len(orbit(G, permutation_action, 0)) == 6
    T = close_generators(1, [])
    assert orbit(T, permutation_action, 0) == frozenset({0})
    # translation action of G on itself
    S = symmetric_group(3)

    def left(g, x):
        return S.index[perm_compose(g, S.elements[x])]
    assert stabilizer(S, left, 2).order == 1
    assert orbit(S, left, 2) == frozenset(range(6))


perm_strategy = st.integers(2, 7).flatmap(lambda n: st.permutations(list(range(n))))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.permutations(list(range(n))), min_size=1, max_size=2),
    st.integers(0, n - 1))))
def test_orbit_stabilizer_property(case):
    n, gens, x = case
    G = close_generators(n, [tuple(g) for g in gens])
    assert len(orbit(G, permutation_action, x)) * stabilizer(G, permutation_action, x).order \
        == G.order


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.lists(st.permutations(list(range(n))),
                                                     min_size=3, max_size=3)))
def test_composition_is_associative_and_inverse(ps):
    a, b, c = (tuple(p) for p in ps)
    assert perm_compose(perm_compose(a, b), c) == perm_compose(a, perm_compose(b, c))
    assert perm_compose(a, perm_inverse(a)) == tuple(range(len(a)))
    # left action: (a*b)(x) = a(b(x))
    assert all(perm_compose(a, b)[x] == a[b[x]] for x in range(len(a)))


def test_perm_from_cycles():
    assert perm_from_cycles(4, [(0, 1, 2)]) == (1, 2, 0, 3)
