"""t-constrained de Bruijn graphs: construction, dominating sets and bounds."""

from cdbg.graph import Graph, GraphSpec, build
from cdbg.words import ParameterError, ResourceLimitError, count_words, enumerate_words

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphSpec",
    "ParameterError",
    "ResourceLimitError",
    "build",
    "count_words",
    "enumerate_words",
]
