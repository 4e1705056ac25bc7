"""Edge-ideal invariants of finite simple graphs: minimal vertex covers,
arithmetical-rank upper bounds for cactus graphs with proof-mirroring
derivation traces, certified radical generator constructions, and
Cohen-Macaulay / set-theoretic-complete-intersection classification."""

from .graphs import Graph, parse_edge_list

__all__ = ["Graph", "parse_edge_list"]
__version__ = "0.1.0"
