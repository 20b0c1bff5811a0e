"""Small standard complexes used as inputs and test fixtures."""

from __future__ import annotations

import itertools

from .complex import SComplex, from_maximal


def simplex(d: int) -> SComplex:
    """The full d-simplex on vertices 0..d."""
    return from_maximal(d + 1, [range(d + 1)])


def simplex_boundary(d: int) -> SComplex:
    """Boundary of the d-simplex, a (d-1)-sphere with d+1 vertices."""
    return from_maximal(d + 1, itertools.combinations(range(d + 1), d))


def cycle_graph(n: int) -> SComplex:
    return from_maximal(n, [(i, (i + 1) % n) for i in range(n)])


def octahedron() -> SComplex:
    """Boundary of the octahedron; antipodal pairs are (0,1), (2,3), (4,5)."""
    return from_maximal(6, [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)])


def torus7() -> SComplex:
    """The 7-vertex torus with triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return from_maximal(7, tris)


# Obtained from a connected sum of two 7-vertex tori by edge flips and one
# edge contraction; 10 vertices is the least possible for genus 2.
_GENUS2_10 = (
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 8), (0, 5, 6),
    (0, 6, 9), (0, 7, 8), (0, 7, 9), (1, 2, 5), (1, 3, 7), (1, 4, 5),
    (1, 4, 8), (1, 6, 7), (1, 6, 9), (1, 8, 9), (2, 3, 4), (2, 3, 6),
    (2, 5, 6), (3, 4, 5), (3, 6, 8), (3, 7, 9), (3, 8, 9), (6, 7, 8),
)


def genus2_minimal() -> SComplex:
    """A 10-vertex triangulation of the closed orientable genus-2 surface."""
    return from_maximal(10, _GENUS2_10)
