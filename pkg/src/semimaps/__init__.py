"""Semi-equivelar maps on surfaces of Euler characteristic zero."""
from .automorphism import (
    KERNEL,
    FlagSystem,
    MapAutomorphism,
    automorphism_group,
    face_orbits,
    find_isomorphism,
    group_order,
    is_face_transitive,
    is_isomorphic,
    is_vertex_transitive,
    vertex_orbits,
)
from .classify import Classification, TypeString, canonical_type, classify, face_cycle_type
from .enumerator import (
    DegreeMultiset,
    admissible_types,
    all_arrangements,
    expand_arrangements,
    solve_vertex_equation,
    violates_restriction,
)
from .errors import *  # noqa: F401,F403
from .polymap import (
    PolyhedralMap,
    SurfaceInfo,
    build_map,
    dual,
    format_map,
    parse_map,
    read_map,
    surface_info,
    vertex_link,
    write_map,
)
from .proof_graphs import AuxGraphSpec, auxiliary_graph, cycle_components, cycles, transitivity_obstruction
from .tilings import LatticeBasis, TilingSpec, builtin_tilings, get_tiling, torus_quotient

__version__ = "0.1.0"
