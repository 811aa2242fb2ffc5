"""Distance-based topological indices of connected graphs, centered on the
peripheral hyper-Wiener index, plus a self-auditing registry that checks
every registered closed form and bound against brute-force oracles."""

from .errors import (
    EdgeListSyntaxError,
    EmptyVertexSetError,
    GraphError,
    InvalidCodeError,
    InvalidParameterError,
    MalformedGraph6Error,
    NotATreeError,
    NotConnectedError,
    SelfLoopError,
    TooLargeError,
    TrivialGraphError,
    VertexRangeError,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    build_graph,
    cartesian_product,
    complement,
    distance_matrix,
    induced_subgraph,
    is_connected,
)
from .graphio import (
    EdgeListDocument,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    read_edge_list_document,
    write_edge_list,
    write_graph6,
)
from .indices import (
    IndexVector,
    hyper_wiener,
    index_vector,
    pendant_vertices,
    peripheral_distance_number,
    peripheral_hyper_wiener,
    peripheral_wiener,
    terminal_hyper_wiener,
    terminal_wiener,
    wiener,
)

__version__ = "0.1.0"

__all__ = [
    "DistanceMatrix",
    "EdgeListDocument",
    "EdgeListSyntaxError",
    "EmptyVertexSetError",
    "Graph",
    "GraphError",
    "IndexVector",
    "InvalidCodeError",
    "InvalidParameterError",
    "MalformedGraph6Error",
    "NotATreeError",
    "NotConnectedError",
    "SelfLoopError",
    "TooLargeError",
    "TrivialGraphError",
    "VertexRangeError",
    "build_graph",
    "cartesian_product",
    "complement",
    "distance_matrix",
    "hyper_wiener",
    "index_vector",
    "induced_subgraph",
    "is_connected",
    "iter_graph6",
    "parse_edge_list",
    "parse_graph6",
    "pendant_vertices",
    "peripheral_distance_number",
    "peripheral_hyper_wiener",
    "peripheral_wiener",
    "read_edge_list_document",
    "terminal_hyper_wiener",
    "terminal_wiener",
    "wiener",
    "write_edge_list",
    "write_graph6",
]
