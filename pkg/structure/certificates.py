"""
V' Certificates

A V' certificate witnesses that a 4-cycle-free graph has diagonal distance
exactly δ. It is a set of δ vertices (δ even) such that

1. every member has degree δ,
2. every pair of members is joined by a path of length two, and these paths
   are pairwise edge-disjoint,
3. every member has exactly one neighbour inside the set.

Condition 3 splits V' into δ/2 adjacent pairs forming an induced matching,
so the search enumerates matchings over edges between degree-δ vertices.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from core.exceptions import DomainError
from graphs.models import Graph

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class EndCorCertificate:
    """A V' witness with its matched pairs and path midpoints."""
    delta: int
    v_prime: Tuple[int, ...]
    pairings: Tuple[Edge, ...]                  # (member, partner inside V')
    midpoints: Tuple[Tuple[Edge, int], ...]     # ((a, b), common neighbour)

    def midpoint_map(self) -> Dict[Edge, int]:
        return dict(self.midpoints)


def check_theorem_a_preconditions(graph: Graph) -> None:
    """Raise DomainError unless the graph is 4-cycle-free with minimum degree >= 2."""
    witness = graph.four_cycle_witness()
    if witness is not None:
        raise DomainError(
            "graph has no 4-cycle",
            f"vertices {witness[0]} and {witness[1]} share two neighbours",
        )
    if graph.min_degree < 2:
        raise DomainError("minimum degree >= 2", f"minimum degree is {graph.min_degree}")


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class _CertificateSearch:
    """Backtracking over induced matchings of degree-δ vertices."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.rows = graph.rows
        self.delta = graph.min_degree
        candidates = {v for v in range(graph.n) if graph.degree(v) == self.delta}
        self.edges = [(i, j) for i, j in graph.edges() if i in candidates and j in candidates]
        self.nodes_visited = 0

    def _paths_for(self, x: int, members: List[int], used: Set[Edge]) -> Optional[List[Tuple[Edge, int]]]:
        """Length-2 paths from x to each member, or None if one is missing or reuses an edge."""
        found = []
        new_edges: Set[Edge] = set()
        for y in members:
            common = self.rows[x] & self.rows[y]
            if not common:
                return None
            m = (common & -common).bit_length() - 1
            path_edges = {_edge(x, m), _edge(m, y)}
            if path_edges & used or path_edges & new_edges:
                return None
            new_edges |= path_edges
            found.append((_edge(x, y), m))
        return found

    def run(self) -> Optional[EndCorCertificate]:
        if self.delta % 2:
            return None
        return self._extend(0, [], [], 0, frozenset(), [])

    def _extend(
        self,
        start: int,
        pairs: List[Edge],
        members: List[int],
        member_mask: int,
        used: FrozenSet[Edge],
        midpoints: List[Tuple[Edge, int]],
    ) -> Optional[EndCorCertificate]:
        if len(pairs) == self.delta // 2:
            return self._certificate(pairs, members, midpoints)
        for k in range(start, len(self.edges)):
            self.nodes_visited += 1
            i, j = self.edges[k]
            if (member_mask >> i) & 1 or (member_mask >> j) & 1:
                continue
            # induced matching: the new pair sees no earlier member
            if self.rows[i] & member_mask or self.rows[j] & member_mask:
                continue
            used_now = set(used)
            paths_i = self._paths_for(i, members + [j], used_now)
            if paths_i is None:
                continue
            for (a, b), m in paths_i:
                used_now |= {_edge(a, m), _edge(m, b)}
            paths_j = self._paths_for(j, members, used_now)
            if paths_j is None:
                continue
            for (a, b), m in paths_j:
                used_now |= {_edge(a, m), _edge(m, b)}
            found = self._extend(
                k + 1,
                pairs + [(i, j)],
                members + [i, j],
                member_mask | (1 << i) | (1 << j),
                frozenset(used_now),
                midpoints + paths_i + paths_j,
            )
            if found is not None:
                return found
        return None

    def _certificate(
        self, pairs: List[Edge], members: List[int], midpoints: List[Tuple[Edge, int]]
    ) -> EndCorCertificate:
        pairings = []
        for i, j in pairs:
            pairings.extend([(i, j), (j, i)])
        return EndCorCertificate(
            delta=self.delta,
            v_prime=tuple(sorted(members)),
            pairings=tuple(sorted(pairings)),
            midpoints=tuple(sorted(midpoints)),
        )


def end_cor_certificate(graph: Graph) -> Optional[EndCorCertificate]:
    """
    First V' certificate in lexicographic edge order, or None.

    Raises DomainError when the graph has a 4-cycle or a vertex of degree < 2.
    """
    check_theorem_a_preconditions(graph)
    search = _CertificateSearch(graph)
    certificate = search.run()
    logger.debug(
        f"end_cor_certificate: n={graph.n} delta={search.delta} "
        f"found={certificate is not None} nodes={search.nodes_visited}"
    )
    return certificate


def certificate_triangles(graph: Graph, certificate: EndCorCertificate) -> List[Tuple[int, int, int]]:
    """
    The δ/2 triangles carried by a certificate: each matched pair together
    with the midpoint of its length-2 path. They are pairwise edge-disjoint.
    """
    midpoint = certificate.midpoint_map()
    triangles = []
    for a, b in certificate.pairings:
        if a < b:
            m = midpoint[_edge(a, b)]
            if not (graph.has_edge(a, m) and graph.has_edge(b, m)):
                raise DomainError("certificate belongs to this graph", f"({a}, {b}, {m}) is not a triangle")
            triangles.append((a, b, m))
    return triangles


def verify_certificate(graph: Graph, certificate: EndCorCertificate) -> List[str]:
    """Re-check every certificate condition from scratch; returns violations."""
    errors = []
    members = set(certificate.v_prime)
    delta = graph.min_degree
    if len(members) != delta:
        errors.append(f"V' has {len(members)} vertices, expected {delta}")
    if delta % 2:
        errors.append(f"δ = {delta} is odd")
    mask = 0
    for v in members:
        mask |= 1 << v
    for v in sorted(members):
        if graph.degree(v) != delta:
            errors.append(f"vertex {v} has degree {graph.degree(v)}")
        inside = (graph.rows[v] & mask).bit_count()
        if inside != 1:
            errors.append(f"vertex {v} has {inside} neighbours inside V'")
    midpoint = certificate.midpoint_map()
    used: Set[Edge] = set()
    ordered = sorted(members)
    for x in range(len(ordered)):
        for y in range(x + 1, len(ordered)):
            a, b = ordered[x], ordered[y]
            m = midpoint.get((a, b))
            if m is None or not (graph.has_edge(a, m) and graph.has_edge(m, b)):
                errors.append(f"no length-2 path recorded between {a} and {b}")
                continue
            path_edges = {_edge(a, m), _edge(m, b)}
            if path_edges & used:
                errors.append(f"path {a}-{m}-{b} reuses an edge")
            used |= path_edges
    return errors
