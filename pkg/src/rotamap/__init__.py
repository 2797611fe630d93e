"""Rotation systems on directed multigraphs: faces, genus, walk homotopy
and planar synthesis by path and spike additions."""
from .analysis import (
    Isomorphism,
    are_isomorphic,
    automorphisms,
    colouring_count,
    isomorphisms,
    iter_small_graphs,
)
from .cyclic import CyclicStruct, cycle_from_list, cycle_from_mapping, equal_up_to_relabel, step_count
from .errors import *  # noqa: F401,F403
from .faces import EulerReport, Face, boundary_walks, euler, face_lines, trace_faces, verify_face
from .graph import (
    Dart,
    Graph,
    Sense,
    Walk,
    build_graph,
    enumerate_quasi_simple_walks,
    is_biconnected,
    is_connected,
    make_family,
    make_walk,
    star,
    symmetrise,
    u_cycle,
)
from .homotopy import HomotopyVerdict, hcollapse_rewrites, homotopic, is_spherical_bruteforce
from .maps import RotationSystem, build_map, count_map_classes, embedding_key, enumerate_maps, map_count
from .synthesis import AdditionStep, PlanarState, base_state, face_division, path_addition, run_synthesis, spike_addition

__version__ = "0.1.0"
