"""
Maximum Clique

Exact branch-and-bound with greedy-colouring bounds over integer bitsets,
and a seeded iterated-greedy heuristic. Vertices are positions 0..V-1 of a
`GraphAdjacency`; each position carries an integer label.

Exact mode visits vertices in ascending position order when colouring, so
the returned clique is reproducible. It stops at the time budget and then
returns the best clique found with `complete=False`.
"""
import logging
import random
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from django.conf import settings

from core.exceptions import BudgetExceededError
from graphs.models import Graph

logger = logging.getLogger(__name__)


class CliqueMode:
    EXACT = "exact"
    GREEDY = "greedy"

    CHOICES = (EXACT, GREEDY)


@dataclass(frozen=True)
class CliqueResult:
    vertices: Tuple[int, ...]       # labels, ascending
    mode: str
    complete: bool                  # exact search finished within its budget
    nodes: int
    elapsed: float = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)


class GraphAdjacency:
    """
    Undirected graph given by an adjacency oracle over labelled vertices.

    Neighbour bitsets are computed on first use and cached.
    """

    def __init__(self, labels: Sequence[int], adjacent: Callable[[int, int], bool]):
        self.labels = list(labels)
        self.adjacent = adjacent
        self._rows: Optional[List[int]] = None

    @classmethod
    def from_graph(cls, graph: Graph) -> 'GraphAdjacency':
        adjacency = cls(range(graph.n), graph.has_edge)
        adjacency._rows = list(graph.rows)
        return adjacency

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def rows(self) -> List[int]:
        if self._rows is None:
            size = len(self.labels)
            rows = [0] * size
            for i in range(size):
                a = self.labels[i]
                for j in range(i + 1, size):
                    if self.adjacent(a, self.labels[j]):
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
            self._rows = rows
        return self._rows

    def is_clique(self, labels: Sequence[int]) -> bool:
        return all(
            self.adjacent(labels[i], labels[j])
            for i in range(len(labels))
            for j in range(i + 1, len(labels))
        )


def _bit_positions(bits: int) -> List[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


class _BranchAndBound:
    """Colour-bounded clique search on bitsets."""

    CLOCK_INTERVAL = 1024

    def __init__(self, rows: List[int], deadline: float, incumbent: List[int]):
        self.rows = rows
        self.deadline = deadline
        self.best = list(incumbent)
        self.nodes = 0
        self.timed_out = False

    def _colour_sort(self, candidates: int) -> Tuple[List[int], List[int]]:
        order: List[int] = []
        bounds: List[int] = []
        colour = 0
        uncoloured = candidates
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                v = low.bit_length() - 1
                available &= ~self.rows[v] & ~low
                uncoloured &= ~low
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(self, chosen: List[int], candidates: int) -> None:
        self.nodes += 1
        if self.nodes % self.CLOCK_INTERVAL == 0 and time.monotonic() > self.deadline:
            self.timed_out = True
        if self.timed_out:
            return
        order, bounds = self._colour_sort(candidates)
        for index in range(len(order) - 1, -1, -1):
            if len(chosen) + bounds[index] <= len(self.best):
                return
            v = order[index]
            chosen.append(v)
            remaining = candidates & self.rows[v]
            if remaining:
                self.expand(chosen, remaining)
            elif len(chosen) > len(self.best):
                self.best = list(chosen)
            chosen.pop()
            candidates &= ~(1 << v)
            if self.timed_out:
                return


def _greedy_from_order(rows: List[int], order: Sequence[int]) -> List[int]:
    chosen: List[int] = []
    allowed = -1
    for v in order:
        if (allowed >> v) & 1:
            chosen.append(v)
            allowed &= rows[v]
    return chosen


def _greedy_from_oracle(adjacency: GraphAdjacency, order: Sequence[int]) -> List[int]:
    chosen: List[int] = []
    for v in order:
        label = adjacency.labels[v]
        if all(adjacency.adjacent(label, adjacency.labels[u]) for u in chosen):
            chosen.append(v)
    return chosen


def max_clique(
    adjacency: GraphAdjacency,
    mode: str = CliqueMode.EXACT,
    time_budget: Optional[float] = None,
    max_vertices: Optional[int] = None,
    restarts: Optional[int] = None,
    seed: Optional[int] = None,
) -> CliqueResult:
    """
    A clique of `adjacency`, maximum in exact mode.

    Exact mode raises BudgetExceededError when the graph has more vertices
    than the configured budget. Greedy mode runs `restarts` passes, the first
    in ascending order and the rest in orders shuffled by `seed`, and keeps
    the first largest clique.
    """
    started = time.monotonic()
    size = len(adjacency)
    if size == 0:
        return CliqueResult((), mode, True, 0, 0.0)

    if mode == CliqueMode.EXACT:
        cap = settings.CWS_CLIQUE_EXACT_MAX_VERTICES if max_vertices is None else max_vertices
        if size > cap:
            raise BudgetExceededError("clique_exact_max_vertices", cap, size)
        budget = settings.CWS_CLIQUE_TIME_BUDGET if time_budget is None else time_budget
        rows = adjacency.rows
        incumbent = _greedy_from_order(rows, range(size))
        search = _BranchAndBound(rows, started + budget, incumbent)
        search.expand([], (1 << size) - 1)
        chosen, complete, nodes = search.best, not search.timed_out, search.nodes
        if not complete:
            logger.warning(f"max_clique: time budget {budget}s exhausted, best size {len(chosen)}")
    elif mode == CliqueMode.GREEDY:
        count = settings.CWS_CLIQUE_GREEDY_RESTARTS if restarts is None else restarts
        rng = random.Random(settings.CWS_DEFAULT_SEED if seed is None else seed)
        order = list(range(size))
        chosen = []
        for attempt in range(max(1, count)):
            if attempt:
                rng.shuffle(order)
            found = _greedy_from_oracle(adjacency, order)
            if len(found) > len(chosen):
                chosen = found
        complete, nodes = False, max(1, count)
    else:
        raise ValueError(f"Unknown clique mode {mode!r}")

    labels = tuple(sorted(adjacency.labels[v] for v in chosen))
    elapsed = time.monotonic() - started
    logger.debug(f"max_clique: mode={mode} vertices={size} size={len(labels)} nodes={nodes} elapsed={elapsed:.3f}")
    return CliqueResult(vertices=labels, mode=mode, complete=complete, nodes=nodes, elapsed=elapsed)
