"""Equivariant covering type of finite G-graphs.

The graph is stratified by orbit type. Each stratum X'_(H) is what remains of
the cells of type exactly (H) once the open stars of cells of the other types
are removed; on one barycentric subdivision this is the full subcomplex on the
vertices of type (H). A stratum whose quotient has h independent loops
contributes ``bouquet_ct(h)`` orbits of sets to a minimal good G-cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complex import (SComplex, connected_components, full_subcomplex, graph_betti,
                      is_connected)
from .errors import NotAGraph, NotConnected, NotRegular
from .gcomplex import GComplex, check_r1
from .group import OrbitType, Subgroup


def bouquet_ct(h: int) -> int:
    """Covering type of a wedge of h circles: ceil((3 + sqrt(1 + 8h)) / 2)."""
    if h < 0:
        raise ValueError("h must be non-negative")
    s = math.isqrt(1 + 8 * h)
    if s * s < 1 + 8 * h:
        s += 1
    return (3 + s + 1) // 2


@dataclass(frozen=True)
class StratumReport:
    orbit_type: OrbitType
    stratum_subgraph: SComplex   # labelled by the vertices of sd(X)
    quotient_loops: int
    contribution: int
    components: int

    @property
    def degenerate(self) -> bool:
        """Strata without loops; the formula is applied verbatim (value 2)."""
        return self.quotient_loops == 0

    def to_json(self) -> dict:
        return {
            "orbit_type": {"order": self.orbit_type.order,
                           "representative": [list(p) for p in self.orbit_type.representative.perms()]},
            "stratum_f_vector": list(self.stratum_subgraph.f_vector()),
            "quotient_loops": self.quotient_loops,
            "quotient_components": self.components,
            "contribution": self.contribution,
            "degenerate": self.degenerate,
        }


def _check_graph(X: GComplex) -> None:
    if X.complex.dim > 1:
        raise NotAGraph(f"complex has dimension {X.complex.dim}", dim=X.complex.dim)
    ok, w = check_r1(X)
    if not ok:
        raise NotRegular("action flips an edge (R1 fails)", condition="R1",
                         witness=w.to_json(X.group))


def stratify(X: GComplex) -> list[StratumReport]:
    """Strata by orbit type, ordered by (type order, type key)."""
    _check_graph(X)
    Y = X.subdivide()
    G = X.group
    types: dict[OrbitType, list[int]] = {}
    for v in Y.complex.vertices:
        t = OrbitType.of(Subgroup(G, Y.vertex_stabilizer(v)))
        types.setdefault(t, []).append(v)
    reports = []
    for t in sorted(types, key=lambda t: (t.order, t.key)):
        sub = full_subcomplex(Y.complex, types[t])
        # the stratum is invariant, so its orbits give the quotient graph
        vorb = {min(Y.transporter(v)) for v in sub.vertices}
        eorb = {min(Y.act_simplex(g, e) for g in range(G.order)) for e in sub.simplices(1)}
        comps = _orbit_components(Y, sub)
        h = len(eorb) - len(vorb) + comps
        reports.append(StratumReport(t, sub, h, bouquet_ct(h), comps))
    return reports


def _orbit_components(Y: GComplex, sub: SComplex) -> int:
    """Number of components of sub/G: components of sub up to translation."""
    seen: set[int] = set()
    count = 0
    for comp in connected_components(sub):
        if comp[0] in seen:
            continue
        count += 1
        for v in comp:
            seen.update(Y.transporter(v))
    return count


def graph_covering_type(X: GComplex) -> tuple[int, list[StratumReport]]:
    """ct_G of a connected G-graph as the sum of stratum contributions."""
    _check_graph(X)
    if not is_connected(X.complex):
        raise NotConnected("graph is not connected")
    strata = stratify(X)
    return sum(s.contribution for s in strata), strata


def trivial_graph_ct(K: SComplex) -> int:
    """ct of a connected graph without group: the bouquet value of b1."""
    comps, b1 = graph_betti(K)
    if comps != 1:
        raise NotConnected("graph is not connected")
    return bouquet_ct(b1)
