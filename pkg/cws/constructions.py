"""
CWS Codes - Constructions

Degenerate codes on short-cycle-free graphs: pair a graph of girth >= 5 with
the code {0^n, 1 off the minimum-degree vertices}. The word operators never
touch a minimum-degree vertex, so the weight-(δ+1) kernel elements rooted
there commute with every word operator.
"""
import logging

from core.exceptions import DomainError
from gf2.vectors import BitVector
from graphs.models import Graph

from .codes import ClassicalCode, CwsCode, classical_distance

logger = logging.getLogger(__name__)


def construct_degenerate_family(graph: Graph) -> CwsCode:
    """
    CwsCode (G, {0^n, indicator of V minus the minimum-degree vertices}).

    Requires girth >= 5 and a classical distance of at least δ+2.
    """
    girth = graph.girth()
    if girth is not None and girth <= 4:
        raise DomainError("graph has girth >= 5", f"girth is {girth}")
    delta = graph.min_degree
    low = graph.min_degree_vertices()
    word = BitVector.ones(graph.n)
    for v in low:
        word ^= BitVector.unit(graph.n, v)
    if word.weight() < delta + 2:
        raise DomainError(
            "classical distance >= δ+2",
            f"only {word.weight()} coordinates lie outside the {len(low)} minimum-degree vertices",
        )
    code = ClassicalCode.explicit([BitVector.zeros(graph.n), word])
    logger.debug(
        f"construct_degenerate_family: n={graph.n} delta={delta} "
        f"zero_coordinates={list(low)} classical_distance={classical_distance(code)}"
    )
    return CwsCode(graph, code)
