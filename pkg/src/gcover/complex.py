"""Finite abstract simplicial complexes.

A complex is stored fully closed: every face of every simplex is present.
Simplices are sorted tuples of vertex indices. Vertices are the indices that
occur in some simplex; ``num_vertices`` is only an upper bound for them, so
subcomplexes keep the labels of the ambient complex.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property
from typing import NamedTuple

from .errors import (DuplicateVertex, EmptySimplex, IndexOutOfRange, NotAGraph,
                     NotASubcomplex)

Simplex = tuple[int, ...]


def _simplex_order(s: Simplex):
    return (len(s), s)


class SComplex:
    """Immutable finite simplicial complex; see `from_maximal`."""

    def __init__(self, num_vertices: int, simplices: Iterable[Simplex]):
        # callers guarantee the set is closed under faces
        self.num_vertices = num_vertices
        self._simplices = frozenset(simplices)

    @classmethod
    def from_maximal(cls, num_vertices: int,
                     maximal_simplices: Iterable[Iterable[int]]) -> SComplex:
        faces = set()
        for raw in maximal_simplices:
            s = tuple(sorted(int(v) for v in raw))
            if not s:
                raise EmptySimplex("empty simplex in input")
            if len(set(s)) != len(s):
                raise DuplicateVertex(f"repeated vertex in simplex {list(raw)}",
                                      simplex=list(s))
            if s[0] < 0 or s[-1] >= num_vertices:
                raise IndexOutOfRange(
                    f"simplex {list(s)} has a vertex outside 0..{num_vertices - 1}",
                    simplex=list(s))
            if s in faces:
                continue
            for k in range(1, len(s) + 1):
                faces.update(itertools.combinations(s, k))
        return cls(num_vertices, faces)

    # -- basic queries

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self._simplices

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices())

    def __len__(self):
        return len(self._simplices)

    def __eq__(self, other):
        return isinstance(other, SComplex) and self._simplices == other._simplices

    def __hash__(self):
        return hash(self._simplices)

    def __repr__(self):
        return f"<SComplex dim={self.dim} f={self.f_vector()}>"

    @cached_property
    def _sorted(self) -> tuple[Simplex, ...]:
        return tuple(sorted(self._simplices, key=_simplex_order))

    def simplices(self, dim: int | None = None) -> list[Simplex]:
        """Simplices ordered by dimension, then lexicographically."""
        if dim is None:
            return list(self._sorted)
        return [s for s in self._sorted if len(s) == dim + 1]

    @property
    def dim(self) -> int:
        return max((len(s) for s in self._simplices), default=0) - 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self._sorted if len(s) == 1)

    @cached_property
    def maximal_simplices(self) -> tuple[Simplex, ...]:
        cofaces = set()
        for s in self._simplices:
            for k in range(1, len(s)):
                cofaces.update(itertools.combinations(s, k))
        return tuple(s for s in self._sorted if s not in cofaces)

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for s in self._simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    def star(self, v: int) -> list[Simplex]:
        """Open star of a vertex: the simplices containing it."""
        return [s for s in self._sorted if v in s]

    def link(self, v: int) -> list[Simplex]:
        out = []
        for s in self._sorted:
            if v in s and len(s) > 1:
                out.append(tuple(x for x in s if x != v))
        return out

    def is_subcomplex_of(self, other: SComplex) -> bool:
        return self._simplices <= other._simplices

    def restrict(self, simplices: Iterable[Simplex]) -> SComplex:
        """Closure of the given simplices, as a subcomplex on the same labels."""
        return SComplex.from_maximal(self.num_vertices, simplices)

    def relabel(self, mapping: Sequence[int], num_vertices: int) -> SComplex:
        return SComplex.from_maximal(
            num_vertices, ([mapping[v] for v in s] for s in self.maximal_simplices))

    def to_json(self) -> dict:
        return {"num_vertices": self.num_vertices,
                "maximal_simplices": [list(s) for s in self.maximal_simplices]}


def from_maximal(num_vertices: int, maximal_simplices: Iterable[Iterable[int]]) -> SComplex:
    return SComplex.from_maximal(num_vertices, maximal_simplices)


def f_vector(K: SComplex) -> tuple[int, ...]:
    return K.f_vector()


def euler_characteristic(K: SComplex) -> int:
    return K.euler_characteristic()


# -- subdivision ------------------------------------------------------------

class Subdivision(NamedTuple):
    complex: SComplex
    faces: tuple[Simplex, ...]  # faces[i] is the simplex of K whose barycentre is vertex i


def barycentric_subdivision(K: SComplex) -> Subdivision:
    """First barycentric subdivision.

    New vertex ``i`` is the barycentre of ``faces[i]``; faces are numbered by
    dimension, then lexicographically, so the labelling is reproducible.
    """
    faces = tuple(K.simplices())
    index = {s: i for i, s in enumerate(faces)}
    chains = []
    for top in K.maximal_simplices:
        for order in itertools.permutations(top):
            chains.append([index[tuple(sorted(order[:k]))] for k in range(1, len(order) + 1)])
    return Subdivision(SComplex.from_maximal(len(faces), chains), faces)


# -- graphs -----------------------------------------------------------------

class _UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def connected_components(K: SComplex) -> list[list[int]]:
    uf = _UnionFind(K.vertices)
    for e in K.simplices(1):
        uf.union(*e)
    groups: dict[int, list[int]] = {}
    for v in K.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values())


def is_connected(K: SComplex) -> bool:
    return len(connected_components(K)) <= 1


def graph_betti(K: SComplex) -> tuple[int, int]:
    """(number of components, number of independent loops) of a graph."""
    if K.dim > 1:
        raise NotAGraph(f"complex has dimension {K.dim}", dim=K.dim)
    V = len(K.vertices)
    E = len(K.simplices(1))
    C = len(connected_components(K))
    return C, E - V + C


# -- surfaces ---------------------------------------------------------------

class SurfaceType(NamedTuple):
    orientable: bool
    genus: int  # handles if orientable, crosscaps otherwise


def _is_single_cycle(edges: list[Simplex]) -> bool:
    if not edges:
        return False
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(n) != 2 for n in adj.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def edge_triangles(K: SComplex) -> dict[Simplex, list[Simplex]]:
    out: dict[Simplex, list[Simplex]] = {e: [] for e in K.simplices(1)}
    for t in K.simplices(2):
        for e in itertools.combinations(t, 2):
            out[e].append(t)
    return out


def orient_triangles(K: SComplex) -> dict[Simplex, tuple[int, int, int]] | None:
    """Coherent orientation of a closed surface, or None if non-orientable.

    Each triangle is mapped to an ordered triple; adjacent triangles induce
    opposite directions on their common edge.
    """
    triangles = K.simplices(2)
    if not triangles:
        return {}
    by_edge = edge_triangles(K)
    oriented: dict[Simplex, tuple[int, int, int]] = {}
    for seed in triangles:
        if seed in oriented:
            continue
        oriented[seed] = seed
        queue = deque([seed])
        while queue:
            t = queue.popleft()
            a, b, c = oriented[t]
            for x, y in ((a, b), (b, c), (c, a)):
                for u in by_edge[tuple(sorted((x, y)))]:
                    if u == t:
                        continue
                    (z,) = set(u) - {x, y}
                    want = (y, x, z)
                    if u in oriented:
                        if not _same_cyclic(oriented[u], want):
                            return None
                    else:
                        oriented[u] = want
                        queue.append(u)
    return oriented


def _same_cyclic(p, q) -> bool:
    return q in (p, p[1:] + p[:1], p[2:] + p[:2])


def is_closed_surface(K: SComplex) -> SurfaceType | None:
    """Recognise a connected closed surface; None if K is not one."""
    if K.dim != 2 or any(len(s) != 3 for s in K.maximal_simplices):
        return None
    if any(len(ts) != 2 for ts in edge_triangles(K).values()):
        return None
    for v in K.vertices:
        if not _is_single_cycle([s for s in K.link(v) if len(s) == 2]):
            return None
    if not is_connected(K):
        return None
    chi = K.euler_characteristic()
    if orient_triangles(K) is not None:
        return SurfaceType(True, (2 - chi) // 2)
    return SurfaceType(False, 2 - chi)


# -- neighbourhoods ---------------------------------------------------------

class StarNeighborhood(NamedTuple):
    star: tuple[Simplex, ...]   # simplices meeting A in at least one vertex
    complement: SComplex        # K minus the open star; always a subcomplex


def open_star_neighborhood(K: SComplex, A: SComplex | Iterable[Iterable[int]]) -> StarNeighborhood:
    """Union N1(A) of the open stars of the vertices of a subcomplex A."""
    simplices = A.simplices() if isinstance(A, SComplex) else [tuple(sorted(s)) for s in A]
    present = set(simplices)
    for s in simplices:
        if s not in K:
            raise NotASubcomplex(f"{list(s)} is not a simplex of K", simplex=list(s))
        for k in range(1, len(s)):
            for f in itertools.combinations(s, k):
                if f not in present:
                    raise NotASubcomplex(f"face {list(f)} of {list(s)} is missing",
                                         simplex=list(f))
    verts = {v for s in simplices for v in s}
    star = tuple(s for s in K.simplices() if verts.intersection(s))
    rest = [s for s in K.simplices() if not verts.intersection(s)]
    return StarNeighborhood(star, SComplex(K.num_vertices, rest))


def full_subcomplex(K: SComplex, vertices: Iterable[int]) -> SComplex:
    keep = set(vertices)
    return SComplex(K.num_vertices, (s for s in K.simplices() if keep.issuperset(s)))
