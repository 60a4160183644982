"""
Graph Models

Simple undirected graphs stored as adjacency bitsets. These are plain
immutable dataclasses; nothing here touches the database.
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Tuple

from core.exceptions import DimensionError
from gf2.vectors import BitMatrix, BitVector


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    `rows[i]` is the neighbourhood of vertex i packed as an integer; the
    adjacency matrix is symmetric with a zero diagonal.
    """
    n: int
    rows: Tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise DimensionError("Graph", f"{self.n} adjacency rows", len(self.rows))
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise DimensionError("Graph row", f"bits within {self.n}", i)
            if (row >> i) & 1:
                raise ValueError(f"Self-loop at vertex {i}")
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"Adjacency is not symmetric at ({i}, {j})")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"Self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionError("Graph.from_edges", f"vertices in [0, {n})", (i, j))
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, (0,) * n)

    # Adjacency

    @property
    def adjacency(self) -> Tuple[BitVector, ...]:
        """Neighbourhood rows r_i as BitVectors."""
        return tuple(BitVector(self.n, row) for row in self.rows)

    def row(self, vertex: int) -> BitVector:
        return BitVector(self.n, self.rows[vertex])

    def adjacency_matrix(self) -> BitMatrix:
        return BitMatrix(self.n, self.n, self.adjacency)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, vertex: int) -> List[int]:
        return list(self.row(vertex).support())

    def degree(self, vertex: int) -> int:
        return self.rows[vertex].bit_count()

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def min_degree_vertices(self) -> Tuple[int, ...]:
        delta = self.min_degree
        return tuple(v for v, d in enumerate(self.degrees) if d == delta)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.has_edge(i, j)]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def common_neighbors(self, i: int, j: int) -> int:
        """Packed set of common neighbours of i and j."""
        return self.rows[i] & self.rows[j]

    def remove_edge(self, i: int, j: int) -> 'Graph':
        if not self.has_edge(i, j):
            raise ValueError(f"No edge ({i}, {j}) to remove")
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        return Graph(self.n, tuple(rows))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= self.rows[low.bit_length() - 1]
                rest ^= low
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    # Structural predicates

    def four_cycle_witness(self) -> Optional[Tuple[int, int]]:
        """A vertex pair with at least two common neighbours, if any."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] & self.rows[j]).bit_count() >= 2:
                    return (i, j)
        return None

    def has_four_cycle(self) -> bool:
        return self.four_cycle_witness() is not None

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle (BFS from every vertex), None if acyclic."""
        best = None
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                v = queue.popleft()
                if best is not None and 2 * dist[v] >= best:
                    break
                for w in self.neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif parent[v] != w:
                        length = dist[v] + dist[w] + 1
                        if best is None or length < best:
                            best = length
        return best
