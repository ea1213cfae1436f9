"""Doubly resolving sets in graphs: exact search, closed forms, constructions."""

from .constructive import (
    ConstructionError,
    construct_diametral,
    construct_tree_basis,
    construct_unicyclic,
    cycle_basis_preferring_branch_vertices,
)
from .families import Family, classify_n_minus_1, closed_form_psi, recognize
from .graph import (
    CycleStructure,
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    GraphParseError,
    TwinPartition,
    apsp,
    find_cycle,
    generate,
    is_connected,
    leaves,
    parse_graph,
    to_edge_list,
    to_json,
    twin_partition,
)
from .resolve import (
    FailureWitness,
    check_doubly_resolving,
    doubly_resolves,
    is_doubly_resolving_literal,
    is_doubly_resolving_set,
    is_resolving_set,
    metric_representation,
)
from .solver import (
    SolveResult,
    SolverCapError,
    forced_vertices,
    lower_bound,
    psi_brute_oracle,
    psi_exact,
    upper_bound,
)
