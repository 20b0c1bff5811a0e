"""Finite permutation groups, subgroups and orbit types.

Permutations are plain tuples of images: ``p[i]`` is the image of ``i``.
They act on the left and compose as functions, ``(p*q)(x) = p(q(x))``.

Group elements are usually handled through their position in
``PermGroup.elements`` (the identity sits at index 0); subgroups are frozen
sets of such indices.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from functools import cached_property
from math import gcd

from .errors import GroupTooLarge, MixedGroups, NotAPermutation

Perm = tuple[int, ...]

DEFAULT_CAP = 2048
CAP_ENV_VAR = "GCOVER_GROUP_CAP"


def default_cap() -> int:
    """Element cap for group closures; ``$GCOVER_GROUP_CAP`` overrides it."""
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_CAP


# -- permutation helpers ----------------------------------------------------

def perm_check(images: Iterable[int], degree: int | None = None) -> Perm:
    p = tuple(int(i) for i in images)
    n = len(p) if degree is None else degree
    if len(p) != n or sorted(p) != list(range(n)):
        raise NotAPermutation(f"{list(p)} is not a permutation of 0..{n - 1}",
                              images=list(p), degree=n)
    return p


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Return p*q, i.e. apply q first."""
    return tuple(p[x] for x in q)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_cycles(p: Perm, singletons: bool = False) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i]:
            continue
        c = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            c.append(j)
            seen[j] = True
            j = p[j]
        if len(c) > 1 or singletons:
            cycles.append(tuple(c))
    return cycles


def perm_order(p: Perm) -> int:
    order = 1
    for c in perm_cycles(p):
        order = order * len(c) // gcd(order, len(c))
    return order


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation from disjoint cycles, e.g. ``[(0, 1, 2)]``."""
    images = list(range(degree))
    for c in cycles:
        for k, x in enumerate(c):
            images[x] = c[(k + 1) % len(c)]
    return perm_check(images, degree)


# -- groups -----------------------------------------------------------------

class PermGroup:
    """A finite group of permutations of ``{0, ..., degree-1}``.

    Instances are built by `close_generators`; the element list is complete
    and in breadth-first order from the identity over the generators.
    """

    def __init__(self, degree: int, generators: Sequence[Perm],
                 elements: Sequence[Perm], name: str | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.name = name
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.generator_indices = tuple(self.index[g] for g in self.generators)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} of order {self.order} on {self.degree} points>"

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _table(self) -> list[list[int]] | None:
        if self.order > 512:
            return None
        idx, els = self.index, self.elements
        return [[idx[perm_compose(a, b)] for b in els] for a in els]

    def mul(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]``."""
        table = self._table
        if table is not None:
            return table[i][j]
        return self.index[perm_compose(self.elements[i], self.elements[j])]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(self.index[perm_inverse(p)] for p in self.elements)

    def inv(self, i: int) -> int:
        return self._inverses[i]

    def product(self, indices: Iterable[int]) -> int:
        acc = 0
        for i in indices:
            acc = self.mul(acc, i)
        return acc

    def conj(self, g: int, h: int) -> int:
        """Index of g h g^-1."""
        return self.mul(self.mul(g, h), self.inv(g))

    @cached_property
    def _orders(self) -> tuple[int, ...]:
        return tuple(perm_order(p) for p in self.elements)

    def element_order(self, i: int) -> int:
        return self._orders[i]

    def closure(self, indices: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the given element indices."""
        gens = sorted(set(indices) - {0})
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def generates(self, indices: Iterable[int]) -> bool:
        return len(self.closure(indices)) == self.order

    def conjugacy_class(self, h: int) -> list[int]:
        return sorted({self.conj(g, h) for g in range(self.order)})

    def to_json(self) -> dict:
        data = {"degree": self.degree,
                "generators": [list(g) for g in self.generators]}
        if self.name:
            data["name"] = self.name
        return data


def close_generators(degree: int, generators: Iterable[Sequence[int]],
                     name: str | None = None, cap: int | None = None) -> PermGroup:
    """Close a set of permutations under composition.

    >>> close_generators(4, [(1, 0, 2, 3), (1, 2, 3, 0)]).order
    24
    """
    if degree < 1:
        raise NotAPermutation("degree must be at least 1", degree=degree)
    cap = default_cap() if cap is None else cap
    gens = [perm_check(g, degree) for g in generators]
    ident = perm_identity(degree)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = perm_compose(s, x)
            if y not in seen:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"group exceeds the cap of {cap} elements",
                                        cap=cap)
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return PermGroup(degree, gens, elements, name)


def cyclic_group(n: int) -> PermGroup:
    gens = [tuple((i + 1) % n for i in range(n))] if n > 1 else []
    return close_generators(n, gens, name=f"Z{n}")


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n > 1:
        gens.append(perm_from_cycles(n, [(0, 1)]))
    if n > 2:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return close_generators(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    gens = [perm_from_cycles(n, [(0, 1, k)]) for k in range(2, n)]
    return close_generators(n, gens, name=f"A{n}")


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return close_generators(n, [rot, ref], name=f"D{n}")


def direct_product(*groups: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the ground sets."""
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for s in g.generators:
            images = list(range(degree))
            for i, j in enumerate(s):
                images[offset + i] = offset + j
            gens.append(tuple(images))
        offset += g.degree
    name = "x".join(g.name or "?" for g in groups)
    return close_generators(degree, gens, name=name)


# -- subgroups --------------------------------------------------------------

class Subgroup:
    """A subgroup given by the indices of its elements in ``parent``."""

    __slots__ = ("parent", "elements")

    def __init__(self, parent: PermGroup, elements: Iterable[int]):
        self.parent = parent
        self.elements = frozenset(elements)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: Subgroup) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: Subgroup) -> bool:
        return self.elements < other.elements

    def __contains__(self, i: int) -> bool:
        return i in self.elements

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def perms(self) -> list[Perm]:
        return [self.parent.elements[i] for i in sorted(self.elements)]

    def conjugate(self, g: int) -> Subgroup:
        G = self.parent
        return Subgroup(G, (G.conj(g, h) for h in self.elements))

    def conjugates(self) -> list[Subgroup]:
        found = {self.conjugate(g) for g in range(self.parent.order)}
        return sorted(found, key=lambda s: s.key)

    def is_closed(self) -> bool:
        G = self.parent
        return (0 in self.elements
                and all(G.mul(a, b) in self.elements
                        for a in self.elements for b in self.elements))


def subgroups(G: PermGroup) -> list[Subgroup]:
    """All subgroups of G, by repeatedly joining cyclic subgroups.

    Every subgroup is a join of cyclic subgroups, so extending each known
    subgroup by each cyclic one until nothing new appears is exhaustive.
    Sorted by order, then by element indices.
    """
    cyclic = {G.closure([i]) for i in range(G.order)}
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        new = []
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                J = G.closure(H | C)
                if J not in found:
                    found.add(J)
                    new.append(J)
        frontier = new
    return sorted((Subgroup(G, s) for s in found), key=lambda s: (s.order, s.key))


class OrbitType:
    """Conjugacy class (H) of a subgroup, i.e. the type of an orbit G/H."""

    __slots__ = ("representative", "conjugates", "_members")

    def __init__(self, representative: Subgroup, conjugates: Sequence[Subgroup]):
        self.representative = representative
        self.conjugates = tuple(conjugates)
        self._members = frozenset(c.elements for c in self.conjugates)

    @classmethod
    def of(cls, H: Subgroup) -> OrbitType:
        conj = H.conjugates()
        return cls(conj[0], conj)

    @property
    def parent(self) -> PermGroup:
        return self.representative.parent

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.order, self.representative.key)

    def __contains__(self, H: Subgroup) -> bool:
        return H.parent is self.parent and H.elements in self._members

    def __eq__(self, other):
        return (isinstance(other, OrbitType) and self.parent is other.parent
                and self.representative == other.representative)

    def __hash__(self):
        return hash(self.representative)

    def __repr__(self):
        return f"<OrbitType of order {self.order}, {len(self.conjugates)} conjugates>"

    def dominates(self, other: OrbitType) -> bool:
        """(H) >= (K): some conjugate of K lies inside H."""
        if self.parent is not other.parent:
            raise MixedGroups("orbit types come from different groups")
        H = self.representative.elements
        return any(K.elements <= H for K in other.conjugates)

    def __ge__(self, other: OrbitType) -> bool:
        return self.dominates(other)

    def __le__(self, other: OrbitType) -> bool:
        return other.dominates(self)


class OrbitTypePoset:
    """Conjugacy classes of subgroups of G with the domination order."""

    def __init__(self, G: PermGroup, types: Sequence[OrbitType]):
        self.group = G
        self.types = tuple(sorted(types, key=lambda t: t.key))
        self._lookup = {c.elements: t for t in self.types for c in t.conjugates}

    def __len__(self):
        return len(self.types)

    def __iter__(self):
        return iter(self.types)

    def class_of(self, H: Subgroup) -> OrbitType:
        return self._lookup[H.elements]

    def leq(self, a: OrbitType, b: OrbitType) -> bool:
        return b.dominates(a)

    def covers(self) -> list[tuple[OrbitType, OrbitType]]:
        """Hasse diagram edges (a, b) with a < b and nothing in between."""
        out = []
        for a in self.types:
            for b in self.types:
                if a == b or not self.leq(a, b):
                    continue
                if not any(c != a and c != b and self.leq(a, c) and self.leq(c, b)
                           for c in self.types):
                    out.append((a, b))
        return out


def orbit_type_poset(G: PermGroup, subs: Sequence[Subgroup] | None = None) -> OrbitTypePoset:
    subs = subgroups(G) if subs is None else subs
    types = []
    seen = set()
    for H in subs:
        if H.elements in seen:
            continue
        t = OrbitType.of(H)
        seen.update(c.elements for c in t.conjugates)
        types.append(t)
    return OrbitTypePoset(G, types)


def is_linearly_ordered(types: Iterable[OrbitType]) -> bool:
    types = list(types)
    if len({id(t.parent) for t in types}) > 1:
        raise MixedGroups("orbit types come from different groups")
    return all(a.dominates(b) or b.dominates(a)
               for i, a in enumerate(types) for b in types[i + 1:])


# -- actions on points ------------------------------------------------------

Action = Callable[[Perm, Hashable], Hashable]


def stabilizer(G: PermGroup, action: Action, point: Hashable) -> Subgroup:
    """G_x = {g : g.x = x} for an action given as ``action(perm, x)``."""
    return Subgroup(G, (i for i, g in enumerate(G.elements) if action(g, point) == point))


def orbit(G: PermGroup, action: Action, point: Hashable) -> frozenset:
    return frozenset(action(g, point) for g in G.elements)


def permutation_action(g: Perm, x: int) -> int:
    """The defining action of a permutation group on its ground set."""
    return g[x]
