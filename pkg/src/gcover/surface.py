"""Branched G-covers of closed orientable surfaces.

Branching data ``(g', m, [m_1..m_r])`` describes an orientation-preserving
action of a group of order m on a surface of genus g with quotient genus g'
and r branch points of periods m_j.  A generating vector
``(a_1, b_1, .., a_g', b_g', c_1, .., c_r)`` realises the data when
``prod [a_i, b_i] * prod c_j = 1``, ``ord(c_j) = m_j`` and the entries
generate G.

`lift_triangulation` builds the cover combinatorially from permutation
voltages on the dual graph and verifies the result before returning it.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .complex import (SComplex, _UnionFind, edge_triangles, full_subcomplex,
                      is_closed_surface, orient_triangles)
from .errors import (BranchVertexMissing, CaseNotCovered, InvalidBranchingData,
                     InvalidGeneratingVector, NotASurface, SearchBudgetExceeded,
                     VerificationFailed)
from .gcomplex import GComplex, build_action, equivariant_f_vector, quotient, regularity
from .group import PermGroup

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class BranchingData:
    g_prime: int
    m: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(int(x) for x in self.periods))
        if self.g_prime < 0:
            raise InvalidBranchingData("quotient genus must be non-negative")
        if self.m < 1:
            raise InvalidBranchingData("group order must be positive")
        for p in self.periods:
            if p < 2 or self.m % p:
                raise InvalidBranchingData(
                    f"period {p} must be at least 2 and divide {self.m}", period=p)

    @property
    def r(self) -> int:
        return len(self.periods)

    def to_json(self) -> dict:
        return {"g_prime": self.g_prime, "m": self.m, "periods": list(self.periods)}


def rh_genus(data: BranchingData) -> Fraction:
    """g = 1 + m(g' - 1) + (m/2) * sum(1 - 1/m_j), exactly."""
    m = data.m
    s = sum((1 - Fraction(1, p) for p in data.periods), Fraction(0))
    return 1 + m * (data.g_prime - 1) + Fraction(m, 2) * s


def rh_quotient_genus(g: int, m: int, periods: Sequence[int]) -> Fraction:
    """g' = 1 + (g - 1)/m - (1/2) * sum(1 - 1/m_j)."""
    if g < 0 or m < 1:
        raise InvalidBranchingData("need g >= 0 and m >= 1")
    s = sum((1 - Fraction(1, p) for p in periods), Fraction(0))
    return 1 + Fraction(g - 1, m) - s / 2


def is_realizable_arithmetically(data: BranchingData) -> bool:
    g = rh_genus(data)
    return g.denominator == 1 and g >= 0


# -- generating vectors -----------------------------------------------------

@dataclass(frozen=True)
class GeneratingVector:
    hyperbolic: tuple[int, ...]   # a_1, b_1, a_2, b_2, ...
    elliptic: tuple[int, ...]     # c_1 .. c_r

    @property
    def elements(self) -> tuple[int, ...]:
        return self.hyperbolic + self.elliptic

    def to_json(self, G: PermGroup) -> dict:
        return {"hyperbolic": [list(G.elements[i]) for i in self.hyperbolic],
                "elliptic": [list(G.elements[i]) for i in self.elliptic]}

    @classmethod
    def from_perms(cls, G: PermGroup, hyperbolic, elliptic) -> GeneratingVector:
        def idx(p):
            key = tuple(int(x) for x in p)
            if key not in G.index:
                raise InvalidGeneratingVector(f"{list(key)} is not an element of the group")
            return G.index[key]
        return cls(tuple(idx(p) for p in hyperbolic), tuple(idx(p) for p in elliptic))


def _commutator(G: PermGroup, a: int, b: int) -> int:
    return G.product((a, b, G.inv(a), G.inv(b)))


def relation_product(G: PermGroup, gv: GeneratingVector) -> int:
    acc = 0
    h = gv.hyperbolic
    for i in range(0, len(h), 2):
        acc = G.mul(acc, _commutator(G, h[i], h[i + 1]))
    for c in gv.elliptic:
        acc = G.mul(acc, c)
    return acc


def check_generating_vector(G: PermGroup, data: BranchingData, gv: GeneratingVector) -> None:
    """Raise InvalidGeneratingVector unless gv realises data for G."""
    if data.m != G.order:
        raise InvalidGeneratingVector(f"data has m={data.m} but |G|={G.order}")
    if len(gv.hyperbolic) != 2 * data.g_prime or len(gv.elliptic) != data.r:
        raise InvalidGeneratingVector("vector length does not match the branching data")
    for j, (c, p) in enumerate(zip(gv.elliptic, data.periods)):
        if G.element_order(c) != p:
            raise InvalidGeneratingVector(f"c_{j + 1} has order {G.element_order(c)}, not {p}",
                                          index=j)
    if relation_product(G, gv) != 0:
        raise InvalidGeneratingVector("product relation does not hold")
    if not G.generates(gv.elements):
        raise InvalidGeneratingVector("entries do not generate the group")


def find_generating_vector(G: PermGroup, g_prime: int, periods: Sequence[int],
                           budget: int = DEFAULT_NODE_BUDGET) -> GeneratingVector | None:
    """First generating vector in (element order, index) order, or None.

    The search is exhaustive; None certifies that no vector exists.
    """
    data = BranchingData(g_prime, G.order, tuple(periods))
    by_order = sorted(range(G.order), key=lambda i: (G.element_order(i), i))
    of_order = {p: [i for i in range(G.order) if G.element_order(i) == p]
                for p in set(data.periods)}
    nh = 2 * g_prime
    r = data.r
    nodes = 0

    def dfs(chosen: list[int], acc: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"node budget {budget} exhausted", budget=budget)
        k = len(chosen)
        if k == nh + r:
            if acc == 0 and G.generates(chosen):
                return GeneratingVector(tuple(chosen[:nh]), tuple(chosen[nh:]))
            return None
        if k < nh:
            for x in by_order:
                chosen.append(x)
                if k % 2:
                    res = dfs(chosen, G.mul(acc, _commutator(G, chosen[k - 1], x)))
                else:
                    res = dfs(chosen, acc)
                chosen.pop()
                if res is not None:
                    return res
            return None
        period = data.periods[k - nh]
        if k == nh + r - 1:
            # the last elliptic entry is forced by the relation
            x = G.inv(acc)
            candidates = [x] if G.element_order(x) == period else []
        else:
            candidates = of_order[period]
        for x in candidates:
            chosen.append(x)
            res = dfs(chosen, G.mul(acc, x))
            chosen.pop()
            if res is not None:
                return res
        return None

    return dfs([], 0)


# -- vertex counts and bounds -----------------------------------------------

def _ceil_sqrt(n: int) -> int:
    s = math.isqrt(n)
    return s if s * s == n else s + 1


def jungerman_ringel(genus: int, orientable: bool = True) -> int:
    """Least vertex count of a triangulation of the given closed surface.

    For non-orientable surfaces ``genus`` is the number of crosscaps.
    """
    if orientable:
        if genus < 0:
            raise ValueError("genus must be non-negative")
        chi = 2 - 2 * genus
        exceptional = genus == 2
    else:
        if genus < 1:
            raise ValueError("crosscap number must be at least 1")
        chi = 2 - genus
        exceptional = genus in (2, 3)
    # ceil((7 + sqrt(49 - 24 chi)) / 2) without floating point
    n = (7 + _ceil_sqrt(49 - 24 * chi) + 1) // 2
    return n + 1 if exceptional else n


@dataclass(frozen=True)
class SurfaceBounds:
    n: int                 # max(n_g', r)
    orbit_lower: int
    orbit_upper: int
    ct_lower: int
    ct_upper: int
    data: BranchingData

    def to_json(self) -> dict:
        return {"n": self.n, "orbit_vertices": [self.orbit_lower, self.orbit_upper],
                "ct_G": [self.ct_lower, self.ct_upper], "data": self.data.to_json()}


def surface_orbit_bounds(data: BranchingData) -> SurfaceBounds:
    """Interval for f_{G,0} of a minimal regular G-triangulation, and for ct_G."""
    r = data.r
    ng = jungerman_ringel(data.g_prime)
    n = max(ng, r)
    upper = n + math.comb(r, 2) + math.comb(r, 3)
    ct_lower = 9 if data.g_prime == 2 else ng
    return SurfaceBounds(n, n, upper, ct_lower, max(upper, ct_lower), data)


def surface_cat_g(data: BranchingData, free: bool = False) -> int:
    """cat_G of a surface with an orientation-preserving action."""
    r, gp = data.r, data.g_prime
    if free and r:
        raise InvalidBranchingData("a free action has no branch points")
    # cases outside the theorem's split are reported before realizability
    if gp == 0 and r == 0:
        raise CaseNotCovered("free action over the sphere", g_prime=gp, r=r)
    if gp == 0 and r == 1:
        raise CaseNotCovered("one branch point over the sphere", g_prime=gp, r=r)
    if not is_realizable_arithmetically(data):
        raise InvalidBranchingData("Riemann-Hurwitz genus is not a non-negative integer",
                                   genus=str(rh_genus(data)))
    if r == 0 or (r <= 2 and gp >= 1):
        return 3
    return r


# -- expansion --------------------------------------------------------------

def _require_surface(K: SComplex, orientable: bool | None = None):
    st = is_closed_surface(K)
    if st is None:
        raise NotASurface("complex is not a closed surface")
    if orientable is not None and st.orientable != orientable:
        raise NotASurface("surface has the wrong orientability")
    return st


def _stellar(tris: set, old: tuple, new_vertex: int) -> None:
    """Replace every triangle containing the simplex ``old`` by its cone split."""
    old_set = set(old)
    for t in [t for t in tris if old_set.issubset(t)]:
        tris.remove(t)
        for drop in old:
            tris.add(tuple(sorted([x for x in t if x != drop] + [new_vertex])))


def expand_for_lift(K: SComplex, branch_vertices: Iterable[int]) -> SComplex:
    """Subdivide so that no two branch vertices span a simplex.

    Triangles of the subcomplex spanned by the branch vertices get a centre,
    then each of its edges a midpoint, which also splits the neighbouring
    triangles through that midpoint.  New vertices are numbered after the
    old ones: triangle centres first, then edge midpoints.
    """
    _require_surface(K)
    branch = sorted(set(branch_vertices))
    for v in branch:
        if v not in K.vertices:
            raise BranchVertexMissing(f"vertex {v} is not in the complex", vertex=v)
    kmin = full_subcomplex(K, branch)
    tris = set(K.simplices(2))
    nxt = K.num_vertices
    for t in kmin.simplices(2):
        _stellar(tris, t, nxt)
        nxt += 1
    for e in kmin.simplices(1):
        _stellar(tris, e, nxt)
        nxt += 1
    return SComplex.from_maximal(nxt, tris)


# -- lifting ----------------------------------------------------------------

@dataclass(frozen=True)
class LiftResult:
    total: GComplex
    projection: tuple[int, ...]                  # lifted vertex -> base vertex
    branch_vertex_orbits: tuple[tuple[int, ...], ...]
    voltages: dict = field(default_factory=dict, compare=False)  # cut edge -> element index

    def to_json(self) -> dict:
        K = self.total.complex
        fg = equivariant_f_vector(self.total)
        st = is_closed_surface(K)
        return {"total": self.total.to_json(), "projection": list(self.projection),
                "branch_vertex_orbits": [list(o) for o in self.branch_vertex_orbits],
                "f_vector": list(K.f_vector()), "euler_characteristic": K.euler_characteristic(),
                "genus": st.genus if st else None, "equivariant_f_vector": list(fg.orbit_counts)}


def _rotate(tri: tuple[int, int, int], v: int) -> tuple[int, int, int]:
    i = tri.index(v)
    return tri[i:] + tri[:i]


def _vertex_cycles(K: SComplex, oriented, by_edge):
    """For each vertex the crossings (t, edge, t') around it, in orientation order."""
    cycles = {}
    for v in K.vertices:
        start = next(t for t in K.simplices(2) if v in t)
        seq = []
        t = start
        while True:
            _, _, b = _rotate(oriented[t], v)
            e = (v, b) if v < b else (b, v)
            t1, t2 = by_edge[e]
            nxt = t2 if t1 == t else t1
            seq.append((t, e, nxt))
            t = nxt
            if t == start:
                break
        cycles[v] = seq
    return cycles


def lift_triangulation(K: SComplex, data: BranchingData, gv: GeneratingVector,
                       G: PermGroup, branch_vertices: Sequence[int] = (),
                       budget: int = DEFAULT_NODE_BUDGET) -> LiftResult:
    """Lift a triangulation of the quotient surface to a regular G-triangulation.

    ``branch_vertices[j]`` is the vertex over which the cover is branched
    with local monodromy conjugate to ``c_j``.
    """
    st = _require_surface(K, orientable=True)
    if st.genus != data.g_prime:
        raise NotASurface(f"quotient has genus {st.genus}, data says {data.g_prime}")
    branch = list(branch_vertices)
    if len(branch) != data.r or len(set(branch)) != data.r:
        raise InvalidBranchingData(f"need {data.r} distinct branch vertices, got {branch}")
    for v in branch:
        if v not in K.vertices:
            raise BranchVertexMissing(f"vertex {v} is not in the complex", vertex=v)
    for a, b in itertools.combinations(branch, 2):
        if (a, b) in K:
            raise InvalidBranchingData(f"branch vertices {a} and {b} span an edge",
                                       edge=sorted((a, b)))
    check_generating_vector(G, data, gv)

    oriented = orient_triangles(K)
    by_edge = edge_triangles(K)
    cycles = _vertex_cycles(K, oriented, by_edge)
    triangles = K.simplices(2)

    # dual spanning tree gets trivial voltages
    dual_tree = set()
    seen = {triangles[0]}
    queue = deque([triangles[0]])
    while queue:
        t = queue.popleft()
        for e in itertools.combinations(t, 2):
            for u in by_edge[e]:
                if u not in seen:
                    seen.add(u)
                    dual_tree.add(e)
                    queue.append(u)
    cut = [e for e in K.simplices(1) if e not in dual_tree]

    # spanning tree of the cut graph, peeled from the leaves
    adj: dict[int, list[tuple[int, tuple]]] = {}
    for e in cut:
        adj.setdefault(e[0], []).append((e[1], e))
        adj.setdefault(e[1], []).append((e[0], e))
    root = branch[0] if branch else K.vertices[0]
    parent_edge = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, e in sorted(adj.get(v, [])):
            if w not in parent_edge:
                parent_edge[w] = e
                order.append(w)
                queue.append(w)
    if len(order) != len(K.vertices):
        raise VerificationFailed("cut graph does not span the vertices")
    tree_edges = {e for e in parent_edge.values() if e is not None}
    handles = [e for e in cut if e not in tree_edges]
    if len(handles) != 2 * data.g_prime:
        raise VerificationFailed("cut graph has the wrong cycle rank")

    period_of = {v: j for j, v in enumerate(branch)}
    targets = {v: G.conjugacy_class(gv.elliptic[j]) for v, j in period_of.items()}
    peel = order[:0:-1]
    volt: dict[tuple, int] = {}

    def crossing(t, e, t2) -> int:
        x = volt.get(e, 0)
        return x if t < t2 else G.inv(x)

    def monodromy(v) -> int:
        return G.product(crossing(*c) for c in cycles[v])

    rotated = {}
    for v in peel:
        seq = cycles[v]
        i = next(k for k, c in enumerate(seq) if c[1] == parent_edge[v])
        rotated[v] = seq[i + 1:] + seq[:i + 1]

    nodes = 0

    def dfs(k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"node budget {budget} exhausted", budget=budget)
        if k == len(peel):
            lam = monodromy(root)
            ok = lam in targets[root] if root in targets else lam == 0
            return ok and G.generates(volt[e] for e in cut)
        v = peel[k]
        seq = rotated[v]
        prefix = G.product(crossing(*c) for c in seq[:-1])
        t, e, t2 = seq[-1]
        for target in targets.get(v, [0]):
            y = G.mul(G.inv(prefix), target)
            volt[e] = y if t < t2 else G.inv(y)
            if dfs(k + 1):
                return True
        del volt[e]
        return False

    # the vector's own hyperbolic entries are tried first
    choices = list(range(G.order))
    found = False
    for combo in itertools.chain([gv.hyperbolic],
                                 itertools.product(choices, repeat=len(handles))):
        volt.clear()
        volt.update(zip(handles, combo))
        if dfs(0):
            found = True
            break
    if not found:
        raise VerificationFailed("no voltage assignment realises the generating vector")

    return _assemble(K, data, G, volt, cut, branch)


def _assemble(K, data, G, volt, cut, branch) -> LiftResult:
    m = G.order
    by_edge = edge_triangles(K)
    uf = _UnionFind()
    triangles = K.simplices(2)
    for t in triangles:
        for g in range(m):
            for v in t:
                uf.add((t, g, v))
    for e, (t1, t2) in by_edge.items():
        x = volt.get(e, 0)   # crossing from t1 to t2 (t1 < t2)
        for g in range(m):
            h = G.mul(g, x)
            for v in e:
                uf.union((t1, g, v), (t2, h, v))

    label: dict = {}
    proj = []
    first_tri = {v: next(t for t in triangles if v in t) for v in K.vertices}
    for v in K.vertices:
        for g in range(m):
            root = uf.find((first_tri[v], g, v))
            if root not in label:
                label[root] = len(proj)
                proj.append(v)
    n = len(proj)

    def lab(t, g, v):
        return label[uf.find((t, g, v))]

    tris = {tuple(sorted(lab(t, g, v) for v in t)) for t in triangles for g in range(m)}
    if len(tris) != m * len(triangles):
        raise VerificationFailed("lifted triangles coincide")
    total = SComplex.from_maximal(n, tris)

    rep = {}
    for t in triangles:
        for g in range(m):
            for v in t:
                rep.setdefault(lab(t, g, v), (t, g, v))
    images = []
    for s in G.generator_indices:
        images.append(tuple(lab(t, G.mul(s, g), v)
                            for t, g, v in (rep[i] for i in range(n))))
    X = build_action(total, G, images)
    branch_orbits = tuple(tuple(i for i in range(n) if proj[i] == b) for b in branch)
    result = LiftResult(X, tuple(proj), branch_orbits, dict(volt))
    _verify_lift(result, K, data)
    return result


def _verify_lift(res: LiftResult, K: SComplex, data: BranchingData) -> None:
    X = res.total
    if not regularity(X).strictly_regular:
        raise VerificationFailed("lifted action is not strictly regular")
    q = quotient(X)
    orbit_to_base = {}
    for v, i in enumerate(q.projection):
        if i >= 0:
            orbit_to_base.setdefault(i, res.projection[v])
    if len(set(orbit_to_base.values())) != len(orbit_to_base):
        raise VerificationFailed("quotient vertices do not match the base")
    image = {tuple(sorted(orbit_to_base[v] for v in s)) for s in q.complex.simplices()}
    if image != set(K.simplices()):
        raise VerificationFailed("quotient is not isomorphic to the base complex")
    m = data.m
    chi = m * K.euler_characteristic() - sum(m - m // p for p in data.periods)
    if X.complex.euler_characteristic() != chi:
        raise VerificationFailed("Euler characteristic of the lift is wrong")
    st = is_closed_surface(X.complex)
    if st is None or not st.orientable or st.genus != rh_genus(data):
        raise VerificationFailed("lift is not the expected closed orientable surface")
    if equivariant_f_vector(X).orbit_counts[0] != len(K.vertices):
        raise VerificationFailed("vertex orbit count differs from the base")
