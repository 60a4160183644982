"""
Code Search - Services

Nondegenerate CWS code search. The Cl_S images of all errors of weight
below d are collected once; two basis states x, y are compatible when
x xor y avoids every image, and a clique of pairwise compatible states is a
code of distance at least d. Compatibility depends only on x xor y, so the
clique search fixes the zero word and runs over the neighbours of zero.

Also builds the projective-plane family whose distance grows with the
degree of the graph.
"""
import json
import logging
import time
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from django.conf import settings

from core.exceptions import BudgetExceededError, DimensionError, DomainError, FalsificationError
from cws.codes import ClassicalCode, CwsCode, classical_distance
from cws.services import DistanceResult, distance
from diagdist.services import cls_bits, diagonal_distance
from gf2.vectors import BitVector
from graphs.generators import projective_plane_incidence
from graphs.graph6 import graph6_or_none
from graphs.models import Graph
from pauli.operators import iter_weight_bits

from .clique import CliqueMode, CliqueResult, GraphAdjacency, max_clique

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClsImageSet:
    """{Cl_S(E) : 0 < wt(E) < d} as packed integers."""
    n: int
    d: int
    images: FrozenSet[int]

    def __contains__(self, value) -> bool:
        bits = value.bits if isinstance(value, BitVector) else value
        return bits in self.images

    def __len__(self) -> int:
        return len(self.images)

    def vectors(self) -> List[BitVector]:
        return [BitVector(self.n, bits) for bits in sorted(self.images)]


def cls_image_set(graph: Graph, d: int) -> ClsImageSet:
    if not 1 <= d <= graph.n:
        raise DomainError("1 <= d <= n", f"d={d}, n={graph.n}")
    images = set()
    for w in range(1, d):
        for z_bits, x_bits in iter_weight_bits(graph.n, w):
            images.add(cls_bits(graph.rows, z_bits, x_bits))
    return ClsImageSet(graph.n, d, frozenset(images))


@dataclass(frozen=True)
class CompatibilityGraph:
    """
    Cayley graph on all 2^n bitstrings: x ~ y iff x xor y is not an image.
    Never stored; adjacency is one xor and one set lookup.
    """
    graph: Graph
    d: int
    image_set: ClsImageSet
    diag_distance: int

    @property
    def vertex_count(self) -> int:
        return 1 << self.graph.n

    def adjacent(self, x: int, y: int) -> bool:
        return x != y and (x ^ y) not in self.image_set.images

    def zero_neighbors(self) -> List[int]:
        return [x for x in range(1, self.vertex_count) if x not in self.image_set.images]

    def materialise(self, max_n: Optional[int] = None) -> GraphAdjacency:
        """Adjacency over every bitstring, bounded by CWS_COMPATIBILITY_MAX_N."""
        cap = settings.CWS_COMPATIBILITY_MAX_N if max_n is None else max_n
        if self.graph.n > cap:
            raise BudgetExceededError("compatibility_max_n", cap, self.graph.n)
        return GraphAdjacency(range(self.vertex_count), self.adjacent)


def compatibility_graph(graph: Graph, d: int) -> CompatibilityGraph:
    """The compatibility graph for distance d; requires d <= Δ′(G)."""
    diag = diagonal_distance(graph).value
    if d > diag:
        raise DomainError("d <= diagonal distance", f"d={d}, diagonal distance={diag}")
    return CompatibilityGraph(graph, d, cls_image_set(graph, d), diag)


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    words: Tuple[BitVector, ...]
    requested_d: int
    verified_d: DistanceResult
    clique_method: str
    clique_complete: bool
    diag_distance: int
    elapsed: float = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.words)

    def cws_code(self) -> CwsCode:
        return CwsCode(self.graph, ClassicalCode.explicit(list(self.words), self.graph.n))


def search_code(
    graph: Graph,
    d: int,
    mode: str = CliqueMode.EXACT,
    time_budget: Optional[float] = None,
    max_vertices: Optional[int] = None,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
) -> SearchResult:
    """
    Largest code (exact mode) or a large code (greedy mode) of distance >= d
    found as a clique of the compatibility graph containing the zero word.
    The result is re-verified with the distance search.
    """
    started = time.monotonic()
    compat = compatibility_graph(graph, d)
    if graph.n > settings.CWS_COMPATIBILITY_MAX_N:
        raise BudgetExceededError("compatibility_max_n", settings.CWS_COMPATIBILITY_MAX_N, graph.n)
    candidates = GraphAdjacency(compat.zero_neighbors(), compat.adjacent)
    clique: CliqueResult = max_clique(
        candidates, mode, time_budget=time_budget, max_vertices=max_vertices, restarts=restarts, seed=seed
    )
    labels = (0,) + clique.vertices
    words = tuple(BitVector(graph.n, bits) for bits in labels)
    cws = CwsCode(graph, ClassicalCode.explicit(list(words), graph.n))

    verified = distance(cws, max_weight=min(d, graph.n))
    if verified.value < d:
        counterexample = {
            'n': graph.n,
            'graph6': graph6_or_none(graph),
            'd': d,
            'words': [str(w) for w in words],
            'witness': verified.witness.to_label() if verified.witness else None,
        }
        logger.error(f"SEARCH_FALSIFIED: {json.dumps(counterexample)}")
        raise FalsificationError("search soundness", counterexample)

    return SearchResult(
        graph=graph,
        words=words,
        requested_d=d,
        verified_d=verified,
        clique_method=mode,
        clique_complete=clique.complete,
        diag_distance=compat.diag_distance,
        elapsed=time.monotonic() - started,
    )


@dataclass(frozen=True)
class SqrtFamilyConstruction:
    """A projective-plane CWS code with its certified distance bound."""
    q: int
    cws: CwsCode
    delta: int
    delta_max: int
    classical_distance: int
    required_classical_distance: int    # strict lower bound: (δ+1)·δ_max
    certified_distance: int             # every error of weight <= δ is detected


def construct_sqrt_family(q: int, code: ClassicalCode) -> SqrtFamilyConstruction:
    """
    Pair the PG(2, q) incidence graph with `code`.

    When the classical distance exceeds (δ+1)·δ_max the code separates every
    Cl_S image of an error of weight <= δ, and the CWS distance is at least δ+1.
    """
    graph = projective_plane_incidence(q)
    if code.length != graph.n:
        raise DimensionError("construct_sqrt_family", graph.n, code.length)
    delta, delta_max = graph.min_degree, graph.max_degree
    bound = (delta + 1) * delta_max
    d_classical = classical_distance(code)
    if d_classical <= bound:
        raise DomainError(
            f"classical distance > (δ+1)·δ_max = {bound}",
            f"classical distance is {d_classical}",
        )
    return SqrtFamilyConstruction(
        q=q,
        cws=CwsCode(graph, code),
        delta=delta,
        delta_max=delta_max,
        classical_distance=d_classical,
        required_classical_distance=bound,
        certified_distance=delta + 1,
    )
