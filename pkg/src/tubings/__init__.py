"""Flip graphs of graph associahedra and nestohedra.

Tubes, tubings, and nested sets; flip graphs with distances, diameters,
and geodesics; projections between nested complexes; face geodesic
properties; and Hamiltonian cycles through prescribed flips.
"""

from .bits import members, sets_to_lists, to_mask
from .building import (BuildingSet, BuildingSetError, NestedSet,
                       NestedSetError, Spine, complete_maximal, compatible,
                       nested_from_lists, nested_of, nested_to_json,
                       nested_to_lists, spine_of, validate_building_set,
                       validate_nested)
from .faces import (FaceError, common_upper_set, face_building_set,
                    face_property, face_vertex_ids, is_upper_ideal, normalize)
from .flips import (FlipError, FlipGraphIndex, GeodesicResult,
                    build_flip_graph, diameter, distance, eccentricity,
                    exchange_flip, fixed_root_subgraph, flip, geodesics,
                    graphical_flip, index_to_dot, index_to_json, seed_tubing)
from .graphs import (Graph, InputError, build_graph, components, family,
                     graph_to_json, is_connected, is_tube, load_graph, tubes)
from .hamiltonian import (HamiltonianError, classify_ridge, count_max_tubings,
                          enumerate_bridges, hamiltonian, hamiltonian_product,
                          hamiltonian_star, in_conflict, verify_cycle)
from .projection import (MonotonicityReport, ProjectionContext,
                         ProjectionError, SigmaReport, check_monotonicity,
                         check_sigma, preimages, sigma, sigma_element)

__all__ = [name for name in dir() if not name.startswith("_")]
