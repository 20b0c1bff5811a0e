import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import corpus
from gcover.complex import is_closed_surface
from gcover.errors import (BranchVertexMissing, CaseNotCovered, InvalidBranchingData,
                           InvalidGeneratingVector, NotASurface, SearchBudgetExceeded)
from gcover.gcomplex import equivariant_f_vector, quotient, regularity
from gcover.group import (close_generators, cyclic_group, dihedral_group, perm_compose,
                          perm_inverse, symmetric_group)
from gcover.surface import (BranchingData, GeneratingVector, check_generating_vector,
                            expand_for_lift, find_generating_vector, jungerman_ringel,
                            lift_triangulation, rh_genus, rh_quotient_genus,
                            surface_cat_g, surface_orbit_bounds)
from gcover.triangulations import (genus2_minimal, octahedron, simplex, simplex_boundary,
                                   torus7)


def test_rh_examples():
    assert rh_genus(BranchingData(5, 1)) == 5
    assert rh_genus(BranchingData(0, 2, (2,) * 6)) == 2
    assert rh_genus(BranchingData(2, 3)) == 4
    assert rh_quotient_genus(2, 2, (2,) * 6) == 0
    assert rh_quotient_genus(4, 3, ()) == 2
    assert rh_quotient_genus(5, 1, ()) == 5
    assert isinstance(rh_genus(BranchingData(0, 2, (2,))), Fraction)
    assert rh_genus(BranchingData(0, 2, (2,))) == Fraction(-1, 2)


def test_branching_data_validation():
    with pytest.raises(InvalidBranchingData):
        BranchingData(-1, 2)
    with pytest.raises(InvalidBranchingData):
        BranchingData(0, 0)
    with pytest.raises(InvalidBranchingData):
        BranchingData(0, 6, (4,))
    with pytest.raises(InvalidBranchingData):
        BranchingData(0, 6, (1,))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6), st.sampled_from([1, 2, 3, 4, 6, 8, 12, 24]), st.data())
def test_rh_roundtrip(gp, m, data):
    divisors = [d for d in range(2, m + 1) if m % d == 0]
    periods = data.draw(st.lists(st.sampled_from(divisors), max_size=6)) if divisors else []
    d = BranchingData(gp, m, tuple(periods))
    g = rh_genus(d)
    if g.denominator == 1 and g >= 0:
        assert rh_quotient_genus(int(g), m, periods) == gp


def raw_check(G, gp, periods, gv):
    """Independent re-check on permutations."""
    els = [G.elements[i] for i in gv.elements]
    a, c = els[:2 * gp], els[2 * gp:]
    acc = tuple(range(G.degree))
    for i in range(0, len(a), 2):
        x, y = a[i], a[i + 1]
        comm = perm_compose(perm_compose(x, y), perm_compose(perm_inverse(x), perm_inverse(y)))
        acc = perm_compose(acc, comm)
    for z in c:
        acc = perm_compose(acc, z)
    assert acc == tuple(range(G.degree))
    for z, p in zip(c, periods):
        k, w = 1, z
        while w != tuple(range(G.degree)):
            w = perm_compose(w, z)
            k += 1
        assert k == p
    assert close_generators(G.degree, els).order == G.order


def brute_exists(G, gp, periods):
    n = 2 * gp + len(periods)
    for tup in itertools.product(range(G.order), repeat=n):
        gv = GeneratingVector(tup[:2 * gp], tup[2 * gp:])
        try:
            check_generating_vector(G, BranchingData(gp, G.order, tuple(periods)), gv)
            return True
        except InvalidGeneratingVector:
            pass
    return False


def test_gv_examples():
    Z2 = cyclic_group(2)
    gv = find_generating_vector(Z2, 0, (2,) * 6)
    assert gv.elliptic == (1,) * 6
    raw_check(Z2, 0, (2,) * 6, gv)
    Z3 = cyclic_group(3)
    gv = find_generating_vector(Z3, 2, ())
    raw_check(Z3, 2, (), gv)
    assert find_generating_vector(Z3, 0, (3,)) is None


@pytest.mark.parametrize("G, gp, periods", [
    (cyclic_group(2), 0, (2,)),
    (cyclic_group(2), 0, (2, 2, 2)),
    (cyclic_group(2), 0, (2, 2)),
    (cyclic_group(3), 0, (3, 3, 3)),
    (cyclic_group(4), 0, (2, 4, 4)),
    (cyclic_group(4), 0, (4, 4)),
    (cyclic_group(6), 0, (2, 3, 6)),
    (cyclic_group(6), 0, (2, 3)),
    (symmetric_group(3), 0, (2, 2, 3)),
    (symmetric_group(3), 0, (3, 3)),
    (symmetric_group(3), 0, (2, 3)),
    (symmetric_group(3), 1, ()),
    (dihedral_group(4), 0, (2, 2, 2, 2)),
    (close_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)]), 0, (2, 2, 2)),
    (close_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)]), 1, ()),
])
def test_gv_search_matches_exhaustive_oracle(G, gp, periods):
    gv = find_generating_vector(G, gp, periods)
    assert (gv is not None) == brute_exists(G, gp, periods)
    if gv is not None:
        raw_check(G, gp, periods, gv)


def test_gv_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_generating_vector(symmetric_group(4), 1, (2, 3), budget=3)


def test_check_generating_vector_rejects():
    Z3 = cyclic_group(3)
    d = BranchingData(0, 3, (3, 3))
    with pytest.raises(InvalidGeneratingVector):
        check_generating_vector(Z3, d, GeneratingVector((), (1, 1)))
    with pytest.raises(InvalidGeneratingVector):
        check_generating_vector(Z3, d, GeneratingVector((), (1,)))
    with pytest.raises(InvalidGeneratingVector):
        check_generating_vector(Z3, BranchingData(1, 3), GeneratingVector((0, 0), ()))
    check_generating_vector(Z3, d, GeneratingVector((), (1, 2)))


def test_jungerman_ringel_examples():
    assert [jungerman_ringel(g) for g in range(5)] == [4, 7, 10, 10, 11]
    assert jungerman_ringel(1, orientable=False) == 6
    assert jungerman_ringel(2, orientable=False) == 8
    assert jungerman_ringel(3, orientable=False) == 9
    values = [jungerman_ringel(g) for g in range(101)]
    assert values == sorted(values)


@given(st.integers(0, 10**4))
def test_jungerman_ringel_matches_float_formula(g):
    n = jungerman_ringel(g)
    chi = 2 - 2 * g
    approx = math.ceil((7 + math.sqrt(49 - 24 * chi)) / 2) + (g == 2)
    assert n == approx
    # smallest n whose complete graph has enough edges for a triangulation
    assert math.comb(n, 2) >= 3 * (n - chi) or g == 2


def test_surface_orbit_bounds():
    free = surface_orbit_bounds(BranchingData(3, 2))
    assert free.orbit_lower == free.orbit_upper == jungerman_ringel(3)
    two = surface_orbit_bounds(BranchingData(0, 5, (5, 5)))
    assert (two.orbit_lower, two.orbit_upper) == (4, 5)
    hyp = surface_orbit_bounds(BranchingData(0, 2, (2,) * 6))
    assert (hyp.orbit_lower, hyp.orbit_upper) == (6, 41)
    assert surface_orbit_bounds(BranchingData(2, 3)).ct_lower == 9
    assert surface_orbit_bounds(BranchingData(1, 3)).ct_lower == 7


def test_surface_cat_g():
    assert surface_cat_g(BranchingData(1, 3), free=True) == 3
    assert surface_cat_g(BranchingData(0, 2, (2,) * 6)) == 6
    assert surface_cat_g(BranchingData(0, 3, (3, 3))) == 2
    assert surface_cat_g(BranchingData(1, 2, (2, 2))) == 3
    with pytest.raises(CaseNotCovered):
        surface_cat_g(BranchingData(0, 2, (2,)))
    with pytest.raises(InvalidBranchingData):
        surface_cat_g(BranchingData(0, 2, (2,) * 3))
    with pytest.raises(CaseNotCovered):
        surface_cat_g(BranchingData(0, 1), free=True)


def adjacent_pairs(K, vs):
    return [(a, b) for a, b in itertools.combinations(vs, 2) if (a, b) in K]


def test_expand_examples():
    K = simplex_boundary(3)
    assert expand_for_lift(K, []) == K
    assert expand_for_lift(K, [2]) == K
    two = expand_for_lift(K, [0, 1])
    assert len(two.vertices) == 5
    three = expand_for_lift(K, [0, 1, 2])
    assert len(three.vertices) == 8
    oct_ = octahedron()
    assert expand_for_lift(oct_, [0, 1]) == oct_   # antipodal, not adjacent


@pytest.mark.parametrize("K, branch", [
    (octahedron(), range(6)), (octahedron(), [0, 2, 4]), (torus7(), [0, 1, 3]),
    (torus7(), range(7)), (genus2_minimal(), [0, 1, 2, 3]), (simplex_boundary(3), range(4)),
])
def test_expand_properties(K, branch):
    branch = list(branch)
    r = len(branch)
    E = expand_for_lift(K, branch)
    assert not adjacent_pairs(E, branch)
    assert is_closed_surface(E) == is_closed_surface(K)
    assert len(E.vertices) - len(K.vertices) <= math.comb(r, 2) + math.comb(r, 3)


def test_expand_errors():
    with pytest.raises(NotASurface):
        expand_for_lift(simplex(2), [0])
    with pytest.raises(BranchVertexMissing):
        expand_for_lift(octahedron(), [9])


def check_lift(res, K2, data):
    X = res.total
    assert regularity(X).strictly_regular
    q = quotient(X)
    base = {}
    for v, o in enumerate(q.projection):
        if o >= 0:
            base.setdefault(o, res.projection[v])
    assert sorted(base.values()) == list(K2.vertices)
    assert {tuple(sorted(base[v] for v in s)) for s in q.complex.simplices()} \
        == set(K2.simplices())
    m = data.m
    assert X.complex.euler_characteristic() == \
        m * K2.euler_characteristic() - sum(m - m // p for p in data.periods)
    st_ = is_closed_surface(X.complex)
    assert st_.orientable and st_.genus == rh_genus(data)
    assert equivariant_f_vector(X).orbit_counts[0] == len(K2.vertices)


def test_trivial_group_lift_is_identity():
    G = close_generators(1, [])
    K = torus7()
    res = lift_triangulation(K, BranchingData(1, 1), GeneratingVector((0, 0), ()), G)
    assert res.total.complex == K


def test_hyperelliptic_lift():
    K2, res = corpus.hyperelliptic_lift()
    check_lift(res, K2, BranchingData(0, 2, (2,) * 6))
    assert len(res.total.complex.vertices) == 2 * len(K2.vertices) - 6
    assert all(len(o) == 1 for o in res.branch_vertex_orbits)


def test_free_z3_lift():
    K2, res = corpus.free_z3_lift()
    check_lift(res, K2, BranchingData(2, 3))
    assert len(res.total.complex.vertices) == 30


@pytest.mark.parametrize("G, gp, periods, K, branch", [
    (symmetric_group(3), 0, (2, 2, 3), octahedron(), [0, 2, 4]),
    (cyclic_group(4), 0, (2, 4, 4), octahedron(), [0, 2, 4]),
    (cyclic_group(2), 1, (2, 2), torus7(), [0, 1]),
    (cyclic_group(3), 0, (3, 3, 3), simplex_boundary(3), [0, 1, 2]),
    (close_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)]), 0, (2, 2, 2, 2), octahedron(),
     [0, 2, 4, 1]),
    (cyclic_group(5), 0, (5, 5, 5), octahedron(), [0, 2, 4]),
])
def test_branched_lifts(G, gp, periods, K, branch):
    data = BranchingData(gp, G.order, periods)
    gv = find_generating_vector(G, gp, periods)
    K2 = expand_for_lift(K, branch)
    res = lift_triangulation(K2, data, gv, G, branch)
    check_lift(res, K2, data)
    for b, orb in zip(branch, res.branch_vertex_orbits):
        assert len(orb) == G.order // periods[branch.index(b)]


def test_lift_errors():
    G = cyclic_group(2)
    data = BranchingData(0, 2, (2,) * 6)
    gv = find_generating_vector(G, 0, data.periods)
    with pytest.raises(InvalidBranchingData):
        lift_triangulation(octahedron(), data, gv, G, list(range(6)))
    K2 = expand_for_lift(octahedron(), range(6))
    with pytest.raises(InvalidGeneratingVector):
        lift_triangulation(K2, data, GeneratingVector((), (1,) * 5 + (0,)), G, list(range(6)))
    with pytest.raises(NotASurface):
        lift_triangulation(torus7(), data, gv, G, list(range(6)))
    with pytest.raises(BranchVertexMissing):
        lift_triangulation(K2, data, gv, G, [0, 1, 2, 3, 4, 99])
