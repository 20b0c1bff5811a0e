"""Finite group actions on simplicial complexes: regularity, quotients,
equivariant covering type of graphs, branched surface covers and bounds."""

from .complex import (SComplex, barycentric_subdivision, euler_characteristic, f_vector,
                      from_maximal, graph_betti, is_closed_surface, open_star_neighborhood)
from .errors import GcoverError
from .estimates import (BoundReport, arithmetic_bound, cohomology_sphere_bound,
                        cyclic_join_additivity, genus_lower_bound, projective_bound,
                        relative_sct_decomposition, sphere_zpk_bound)
from .gcomplex import (EquivariantFVector, GComplex, RegularityReport, build_action,
                       check_r1, check_r2, check_r3, equivariant_f_vector, fixed_subcomplex,
                       quotient, regularity, regularize, saturation, simplex_orbits,
                       star_cover_nerve)
from .graphct import StratumReport, bouquet_ct, graph_covering_type, stratify
from .group import (OrbitType, PermGroup, Subgroup, close_generators, cyclic_group,
                    dihedral_group, is_linearly_ordered, orbit, orbit_type_poset,
                    stabilizer, subgroups, symmetric_group)
from .surface import (BranchingData, GeneratingVector, LiftResult, check_generating_vector,
                      expand_for_lift, find_generating_vector, jungerman_ringel,
                      lift_triangulation, rh_genus, rh_quotient_genus, surface_cat_g,
                      surface_orbit_bounds)

__version__ = "0.1.0"
