"""
Graph Generators

Deterministic constructors for the named graphs used throughout the project,
the projective-plane incidence family and a seeded random 4-cycle-free
generator.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from typing import List, Tuple

from core.exceptions import UnsupportedParameterError

from .models import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratedGraph:
    """A generated graph together with whether the requested target was met."""
    graph: Graph
    target_min_degree: int
    target_met: bool
    seed: int


def cycle(n: int) -> Graph:
    if n < 3:
        raise UnsupportedParameterError("n", n, "a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q ** 0.5) + 1))


def _projective_points(q: int) -> List[Tuple[int, int, int]]:
    """Normalised representatives of PG(2, q): first nonzero coordinate is 1."""
    points = []
    for vec in itertools.product(range(q), repeat=3):
        nonzero = [x for x in vec if x]
        if nonzero and nonzero[0] == 1:
            points.append(vec)
    return sorted(points)


def projective_plane_incidence(q: int) -> Graph:
    """
    Point-line incidence graph of PG(2, q) for prime q.

    Vertices 0..m-1 are points and m..2m-1 are lines (m = q^2 + q + 1), both
    in lexicographic order of their normalised coordinates. A point and a
    line are adjacent when their dot product vanishes mod q. The result is
    bipartite, (q+1)-regular and has girth 6.
    """
    if not _is_prime(q):
        raise UnsupportedParameterError("q", q, "projective planes are built over prime fields only")
    points = _projective_points(q)
    m = len(points)
    edges = []
    for p_index, point in enumerate(points):
        for l_index, line in enumerate(points):
            if sum(a * b for a, b in zip(point, line)) % q == 0:
                edges.append((p_index, m + l_index))
    return Graph.from_edges(2 * m, edges)


def closes_four_cycle(rows: List[int], i: int, j: int) -> bool:
    """Adding i -- j closes a 4-cycle iff a path of length 3 joins i and j."""
    reach = 0
    rest = rows[i]
    while rest:
        low = rest & -rest
        reach |= rows[low.bit_length() - 1]
        rest ^= low
    # reach = vertices at walk-distance 2 from i; a neighbour of j among them closes the cycle
    return bool(reach & rows[j] & ~(1 << i))


def random_c4_free(n: int, target_min_degree: int, seed: int) -> GeneratedGraph:
    """
    Seeded random graph without 4-cycles.

    Vertex pairs are visited in an order shuffled by `seed`; a pair becomes an
    edge when it is not already one, does not close a 4-cycle and at least one
    endpoint still sits below the target degree. Generation stops once the
    target minimum degree is met or every pair has been considered. The
    target is best effort and reported through `target_met`.
    """
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    rows = [0] * n
    degrees = [0] * n

    for i, j in pairs:
        if n and min(degrees) >= target_min_degree:
            break
        if degrees[i] >= target_min_degree and degrees[j] >= target_min_degree:
            continue
        if closes_four_cycle(rows, i, j):
            continue
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        degrees[i] += 1
        degrees[j] += 1

    graph = Graph(n, tuple(rows))
    met = graph.min_degree >= target_min_degree
    if not met:
        logger.debug(
            f"random_c4_free: target {target_min_degree} not met "
            f"(n={n}, seed={seed}, min_degree={graph.min_degree})"
        )
    return GeneratedGraph(graph=graph, target_min_degree=target_min_degree, target_met=met, seed=seed)
