"""Region Connection Calculus: algebra, constraint networks, vocabulary."""
from .algebra import (ALL, COMPOSITION, EMPTY, Rcc5, Rcc8, compose, compose_set, compose_sets, converse,
                      converse_bits, deterministic_chains, from_bits, names, rcc5_converse, to_bits, to_rcc5)
from .kernels import BACKEND
from .network import QCN, load_qcn, network_from_graph, path_consistency
from .vocabulary import S4E, property_iri, vocabulary_graph

__all__ = [
    "ALL", "BACKEND", "COMPOSITION", "EMPTY", "QCN", "Rcc5", "Rcc8", "S4E", "compose", "compose_set",
    "compose_sets", "converse", "converse_bits", "deterministic_chains", "from_bits", "load_qcn", "names",
    "network_from_graph", "path_consistency", "property_iri", "rcc5_converse", "to_bits", "to_rcc5",
    "vocabulary_graph",
]
