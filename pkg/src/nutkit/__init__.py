"""Exact tools for nut graphs: nullity, automorphism groups, orbit counts,
named families, constructions and small-order enumeration."""

from .errors import NutkitError
from .graph import Graph, cartesian_product, edge, fuse_at, parse_graph6, subdivide_edge, write_graph6
from .linalg import IntegerMatrix, adjacency_matrix, determinant, kernel_basis, rank
from .nut import NullityReport, Verdict, edge_signatures, is_core, is_nut, nullity
from .symmetry import AutGroup, OrbitPartition, OrbitSignature, automorphism_group, omega, orbits

__version__ = "0.1.0"

__all__ = [
    "NutkitError", "Graph", "cartesian_product", "edge", "fuse_at", "parse_graph6", "subdivide_edge",
    "write_graph6", "IntegerMatrix", "adjacency_matrix", "determinant", "kernel_basis", "rank",
    "NullityReport", "Verdict", "edge_signatures", "is_core", "is_nut", "nullity", "AutGroup",
    "OrbitPartition", "OrbitSignature", "automorphism_group", "omega", "orbits",
]
