"""Hypercube subfamily graphs: Fibonacci and Lucas cubes, Fibonacci-run and
associated Mersenne graphs."""

from ._core import (
    DisconnectedGraph,
    ExcludedStringError,
    Graph,
    VerificationFailure,
    assoc_mersenne,
    build_graph,
    build_M_recursive,
    build_R_recursive,
    class_neighbors,
    edge_count_closed,
    edge_gf_coeffs,
    enumerate,
    far_vertex,
    fib,
    hamming,
    is_member,
    lucas,
    lucas_from_fib,
    majority,
    monotone_path,
    phi,
    phi_inverse,
    predicted_periphery,
    verify,
    weight,
)

__all__ = [
    "DisconnectedGraph",
    "ExcludedStringError",
    "Graph",
    "VerificationFailure",
    "assoc_mersenne",
    "build_graph",
    "build_M_recursive",
    "build_R_recursive",
    "class_neighbors",
    "edge_count_closed",
    "edge_gf_coeffs",
    "enumerate",
    "far_vertex",
    "fib",
    "hamming",
    "is_member",
    "lucas",
    "lucas_from_fib",
    "majority",
    "monotone_path",
    "phi",
    "phi_inverse",
    "predicted_periphery",
    "verify",
    "weight",
]
