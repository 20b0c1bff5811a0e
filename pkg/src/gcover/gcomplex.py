"""Simplicial G-complexes.

A `GComplex` is a simplicial complex with a finite permutation group acting on
its vertex labels by simplicial maps. The action is stored as one vertex
permutation per group element (indexed like ``group.elements``).

Regularity follows Bredon and Illman:

R1  a vertex and a translate of it lying in a common simplex coincide;
R2  if ``(v_0..v_n)`` and ``(g_0 v_0 .. g_n v_n)`` both span simplices then a
    single ``g`` has ``g v_i = g_i v_i`` for every ``i``;
R3  the vertex stabilisers of every simplex form a chain.

Regular means R1 and R2; strictly regular means R2 and R3 (we also ask R1,
which every subdivided action satisfies).
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .complex import SComplex, Simplex, barycentric_subdivision
from .errors import MultiEdge, NotAHomomorphism, NotRegular, NotSimplicial
from .group import Perm, PermGroup, Subgroup, perm_check, perm_compose, perm_identity


class GComplex:
    def __init__(self, complex: SComplex, group: PermGroup,
                 vertex_action: Sequence[Perm], faces: Sequence[Simplex] | None = None):
        self.complex = complex
        self.group = group
        self.vertex_action = tuple(vertex_action)
        # barycentre -> simplex of the complex this one was subdivided from
        self.faces = tuple(faces) if faces is not None else None
        self._transporters: dict[int, dict[int, frozenset[int]]] = {}

    def __repr__(self):
        return f"<GComplex f={self.complex.f_vector()} group order {self.group.order}>"

    def act(self, g: int, v: int) -> int:
        return self.vertex_action[g][v]

    def act_simplex(self, g: int, s: Iterable[int]) -> Simplex:
        p = self.vertex_action[g]
        return tuple(sorted(p[v] for v in s))

    @property
    def generator_images(self) -> list[Perm]:
        return [self.vertex_action[i] for i in self.group.generator_indices]

    def vertex_stabilizer(self, v: int) -> frozenset[int]:
        return self.transporter(v)[v]

    def transporter(self, v: int) -> dict[int, frozenset[int]]:
        """Map ``w -> {g : g v = w}`` over the orbit of v."""
        t = self._transporters.get(v)
        if t is None:
            acc: dict[int, set[int]] = {}
            for g, p in enumerate(self.vertex_action):
                acc.setdefault(p[v], set()).add(g)
            t = {w: frozenset(gs) for w, gs in acc.items()}
            self._transporters[v] = t
        return t

    @cached_property
    def vertex_orbits(self) -> tuple[tuple[int, ...], ...]:
        seen = set()
        out = []
        for v in self.complex.vertices:
            if v in seen:
                continue
            orb = tuple(sorted(self.transporter(v)))
            seen.update(orb)
            out.append(orb)
        return tuple(out)

    def subdivide(self) -> GComplex:
        """Induced action on the barycentric subdivision."""
        sd, faces = barycentric_subdivision(self.complex)
        index = {s: i for i, s in enumerate(faces)}
        action = [tuple(index[self.act_simplex(g, s)] for s in faces)
                  for g in range(self.group.order)]
        return GComplex(sd, self.group, action, faces)

    def restrict(self, sub: SComplex) -> GComplex:
        """The action on an invariant subcomplex (labels unchanged)."""
        for g in self.group.generator_indices:
            for s in sub.maximal_simplices:
                if self.act_simplex(g, s) not in sub:
                    raise NotSimplicial("subcomplex is not invariant", simplex=list(s))
        return GComplex(sub, self.group, self.vertex_action)

    def to_json(self) -> dict:
        return {"complex": self.complex.to_json(), "group": self.group.to_json(),
                "generator_vertex_images": [list(p) for p in self.generator_images]}


def build_action(K: SComplex, G: PermGroup, generator_images: Sequence[Sequence[int]]) -> GComplex:
    """Extend vertex permutations given on G's generators to all of G.

    Raises NotAHomomorphism when the images violate a relation of G, and
    NotSimplicial when some element does not map simplices to simplices.
    """
    if len(generator_images) != len(G.generators):
        raise NotAHomomorphism(
            f"expected {len(G.generators)} generator images, got {len(generator_images)}")
    n = K.num_vertices
    images = [perm_check(p, n) for p in generator_images]
    action: list[Perm | None] = [None] * G.order
    action[0] = perm_identity(n)
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for k, s in enumerate(G.generator_indices):
            y = G.mul(s, x)
            img = perm_compose(images[k], action[x])
            if action[y] is None:
                action[y] = img
                queue.append(y)
            elif action[y] != img:
                raise NotAHomomorphism("generator images do not respect the group relations",
                                       element=list(G.elements[y]))
    # images on generators fix the images on all of G
    for x in range(G.order):
        for k, s in enumerate(G.generator_indices):
            if action[G.mul(s, x)] != perm_compose(images[k], action[x]):
                raise NotAHomomorphism("generator images do not respect the group relations",
                                       element=list(G.elements[x]))
    for k, p in enumerate(images):
        for s in K.maximal_simplices:
            if tuple(sorted(p[v] for v in s)) not in K:
                raise NotSimplicial(f"generator {k} maps {list(s)} outside the complex",
                                    generator=k, simplex=list(s))
    return GComplex(K, G, action)


def trivial_action(K: SComplex, G: PermGroup) -> GComplex:
    return build_action(K, G, [perm_identity(K.num_vertices)] * len(G.generators))


# -- regularity -------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    condition: str
    simplex: Simplex
    vertices: tuple[int, ...]
    element: int | None = None

    def to_json(self, group: PermGroup | None = None) -> dict:
        data = {"condition": self.condition, "simplex": list(self.simplex),
                "vertices": list(self.vertices)}
        if self.element is not None:
            data["element_index"] = self.element
            if group is not None:
                data["element"] = list(group.elements[self.element])
        return data


class RegularityReport(NamedTuple):
    r1: bool
    r1_witness: Witness | None
    r2: bool
    r2_witness: Witness | None
    r3: bool
    r3_witness: Witness | None

    @property
    def regular(self) -> bool:
        return self.r1 and self.r2

    @property
    def strictly_regular(self) -> bool:
        return self.r1 and self.r2 and self.r3

    def to_json(self, group: PermGroup | None = None) -> dict:
        def w(x):
            return None if x is None else x.to_json(group)
        return {"r1": self.r1, "r1_witness": w(self.r1_witness),
                "r2": self.r2, "r2_witness": w(self.r2_witness),
                "r3": self.r3, "r3_witness": w(self.r3_witness),
                "regular": self.regular, "strictly_regular": self.strictly_regular}


def check_r1(X: GComplex) -> tuple[bool, Witness | None]:
    for s in X.complex.maximal_simplices:
        members = set(s)
        for v in s:
            for g in range(1, X.group.order):
                w = X.act(g, v)
                if w != v and w in members:
                    return False, Witness("R1", s, (v, w), g)
    return True, None


def check_r2(X: GComplex) -> tuple[bool, Witness | None]:
    K = X.complex
    for orb in simplex_orbits(X):
        rep = orb.representative
        trans = [X.transporter(v) for v in rep]
        bad = _r2_violation(K, trans, (), None)
        if bad is not None:
            return False, Witness("R2", rep, bad)
    return True, None


def _r2_violation(K, trans, chosen, gset):
    """Lexicographically first image tuple spanning a simplex with no common g."""
    i = len(chosen)
    if i == len(trans):
        return chosen if not gset else None
    for w in sorted(trans[i]):
        cand = chosen + (w,)
        if tuple(sorted(set(cand))) not in K:
            continue
        ng = trans[i][w] if gset is None else gset & trans[i][w]
        found = _r2_violation(K, trans, cand, ng)
        if found is not None:
            return found
    return None


def check_r3(X: GComplex) -> tuple[bool, Witness | None]:
    # a chain of subgroups is exactly a set of pairwise comparable ones
    for e in X.complex.simplices(1):
        a, b = (X.vertex_stabilizer(v) for v in e)
        if not (a <= b or b <= a):
            return False, Witness("R3", e, e)
    return True, None


def regularity(X: GComplex) -> RegularityReport:
    return RegularityReport(*check_r1(X), *check_r2(X), *check_r3(X))


# -- orbits -----------------------------------------------------------------

class SimplexOrbit(NamedTuple):
    representative: Simplex
    members: tuple[Simplex, ...]
    stabilizer: frozenset[int]           # setwise
    pointwise_stabilizer: frozenset[int]


def simplex_orbits(X: GComplex) -> list[SimplexOrbit]:
    """Orbits of simplices, each represented by its least member."""
    seen = set()
    out = []
    G = X.group
    for s in X.complex.simplices():
        if s in seen:
            continue
        images = [X.act_simplex(g, s) for g in range(G.order)]
        members = tuple(sorted(set(images)))
        seen.update(members)
        setwise = frozenset(g for g, t in enumerate(images) if t == s)
        pointwise = frozenset.intersection(*(X.vertex_stabilizer(v) for v in s))
        out.append(SimplexOrbit(s, members, setwise, pointwise))
    return out


class EquivariantFVector(NamedTuple):
    orbit_counts: tuple[int, ...]
    stabilizer_orders: tuple[tuple[int, ...], ...]  # per dimension, one entry per orbit

    def expanded(self, group_order: int) -> tuple[int, ...]:
        """The ordinary f-vector recovered as sums of orbit lengths |G|/|G_s|."""
        return tuple(sum(group_order // k for k in dim) for dim in self.stabilizer_orders)


def equivariant_f_vector(X: GComplex) -> EquivariantFVector:
    d = X.complex.dim
    stabs: list[list[int]] = [[] for _ in range(d + 1)]
    for orb in simplex_orbits(X):
        stabs[len(orb.representative) - 1].append(len(orb.stabilizer))
    return EquivariantFVector(tuple(len(x) for x in stabs), tuple(tuple(x) for x in stabs))


class Quotient(NamedTuple):
    complex: SComplex
    projection: tuple[int, ...]  # vertex label -> quotient vertex (-1 off the complex)


def _require_regular(X: GComplex) -> None:
    ok, w = check_r1(X)
    if not ok:
        raise NotRegular("action violates R1", condition="R1", witness=w.to_json(X.group))
    ok, w = check_r2(X)
    if not ok:
        raise NotRegular("action violates R2", condition="R2", witness=w.to_json(X.group))


def quotient(X: GComplex) -> Quotient:
    """The orbit complex K/G of a regular action.

    R1 is checked first, then whether simplex orbits collapse to a
    multigraph (MultiEdge), then R2; any failure rejects the input.
    """
    ok, w = check_r1(X)
    if not ok:
        raise NotRegular("action violates R1", condition="R1", witness=w.to_json(X.group))
    proj = [-1] * X.complex.num_vertices
    for i, orb in enumerate(X.vertex_orbits):
        for v in orb:
            proj[v] = i
    images = set()
    for orb in simplex_orbits(X):
        img = tuple(sorted(proj[v] for v in orb.representative))
        if len(set(img)) != len(img) or img in images:
            raise MultiEdge("simplex orbits do not form a simplicial quotient",
                            simplex=list(orb.representative), image=list(img))
        images.add(img)
    ok, w = check_r2(X)
    if not ok:
        raise NotRegular("action violates R2", condition="R2", witness=w.to_json(X.group))
    return Quotient(SComplex(len(X.vertex_orbits), images), tuple(proj))


def fixed_subcomplex(X: GComplex, H: Subgroup | Iterable[int]) -> SComplex:
    """K^H: simplices whose vertices are all fixed by every element of H."""
    elements = H.elements if isinstance(H, Subgroup) else frozenset(H)
    fixed = {v for v in X.complex.vertices
             if all(X.act(h, v) == v for h in elements)}
    return SComplex(X.complex.num_vertices,
                    (s for s in X.complex.simplices() if fixed.issuperset(s)))


def saturation(X: GComplex, A: SComplex | Iterable[Iterable[int]]) -> SComplex:
    """GA, the union of all translates of A."""
    simplices = A.simplices() if isinstance(A, SComplex) else [tuple(sorted(s)) for s in A]
    out = {X.act_simplex(g, s) for s in simplices for g in range(X.group.order)}
    return SComplex.from_maximal(X.complex.num_vertices, out)


class StarNerve(NamedTuple):
    nerve: GComplex
    isomorphism: tuple[int, ...]  # vertex of X -> vertex of the nerve


def star_cover_nerve(X: GComplex) -> StarNerve:
    """Nerve of the cover by open vertex stars, with the permuted action."""
    _require_regular(X)
    K = X.complex
    stars = {v: frozenset(K.star(v)) for v in K.vertices}
    nerve = set()
    for top in K.maximal_simplices:
        for k in range(1, len(top) + 1):
            for sub in itertools.combinations(top, k):
                if frozenset.intersection(*(stars[v] for v in sub)):
                    nerve.add(sub)
    by_star = {s: v for v, s in stars.items()}
    action = []
    for g in range(X.group.order):
        p = list(range(K.num_vertices))
        for v, st in stars.items():
            p[v] = by_star[frozenset(X.act_simplex(g, s) for s in st)]
        action.append(tuple(p))
    N = GComplex(SComplex(K.num_vertices, nerve), X.group, action)
    iso = tuple(range(K.num_vertices))
    if N.complex != K or N.vertex_action != X.vertex_action:
        raise AssertionError("nerve of the star cover differs from the complex")
    return StarNerve(N, iso)


def regularize(X: GComplex) -> GComplex:
    """Subdivide until the action is strictly regular (at most twice)."""
    report = regularity(X)
    if report.strictly_regular:
        return X
    Y = X.subdivide()
    if not report.r1:
        Y = Y.subdivide()
    if not regularity(Y).strictly_regular:
        raise AssertionError("action still irregular after subdivision")
    return Y
