"""
Reports - Corpora

Graph and code corpora the verification suites run over. Every generator is
seeded and yields the same sequence for the same arguments.
"""
import logging
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional

from cws.codes import ClassicalCode, CwsCode
from diagdist.services import cls_bits, diagonal_distance
from gf2.vectors import BitVector
from graphs.generators import closes_four_cycle, random_c4_free
from graphs.models import Graph
from pauli.operators import iter_weight_bits

logger = logging.getLogger(__name__)


def c4_free_graphs(n: int, min_degree: int = 2) -> Iterator[Graph]:
    """
    Connected 4-cycle-free graphs on n vertices with minimum degree at least
    `min_degree`.

    Labelled enumeration restricted to labellings whose degrees do not
    increase with the vertex label. Every isomorphism class appears at least
    once; some appear more than once.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    # index of the pair that completes vertex i's row
    row_end = {}
    for index, (i, _) in enumerate(pairs):
        row_end[i] = index
    rows = [0] * n
    degrees = [0] * n

    def row_ok(i: int) -> bool:
        if degrees[i] < min_degree:
            return False
        return i == 0 or degrees[i] <= degrees[i - 1]

    def extend(index: int) -> Iterator[Graph]:
        if index == len(pairs):
            last = n - 1
            if degrees[last] < min_degree or (last and degrees[last] > degrees[last - 1]):
                return
            graph = Graph(n, tuple(rows))
            if graph.is_connected():
                yield graph
            return
        i, j = pairs[index]
        finishing = row_end[i] == index

        if not closes_four_cycle(rows, i, j):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            degrees[i] += 1
            degrees[j] += 1
            if not finishing or row_ok(i):
                yield from extend(index + 1)
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
            degrees[i] -= 1
            degrees[j] -= 1

        if not finishing or row_ok(i):
            yield from extend(index + 1)

    if n < 2:
        return
    yield from extend(0)


def exhaustive_c4_free_corpus(max_n: int, min_degree: int = 2) -> List[Graph]:
    graphs: List[Graph] = []
    for n in range(min_degree + 1, max_n + 1):
        found = list(c4_free_graphs(n, min_degree))
        logger.debug(f"exhaustive_c4_free_corpus: n={n} graphs={len(found)}")
        graphs.extend(found)
    return graphs


def random_c4_free_corpus(
    count: int, seed: int, min_n: int = 8, max_n: int = 12, min_degree: int = 2
) -> List[Graph]:
    """
    `count` random 4-cycle-free graphs with min_n <= n <= max_n and minimum
    degree at least `min_degree`. Attempts that miss the degree target are
    discarded.
    """
    rng = random.Random(seed)
    graphs: List[Graph] = []
    attempts = 0
    while len(graphs) < count and attempts < 20 * max(count, 1):
        attempts += 1
        n = rng.randint(min_n, max_n)
        target = rng.choice((min_degree, min_degree + 1))
        generated = random_c4_free(n, target, rng.getrandbits(32))
        if generated.graph.min_degree >= min_degree:
            graphs.append(generated.graph)
    if len(graphs) < count:
        logger.warning(f"random_c4_free_corpus: produced {len(graphs)} of {count} graphs after {attempts} attempts")
    return graphs


@dataclass(frozen=True)
class CwsInstance:
    """A corpus code; `constructed` codes detect every error of weight <= Δ′."""
    cws: CwsCode
    constructed: bool = False


def _random_graph(rng: random.Random, n: int) -> Graph:
    if rng.random() < 0.3:
        return random_c4_free(n, rng.randint(1, 3), rng.getrandbits(32)).graph
    p = rng.uniform(0.2, 0.8)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def _ball(rows: List[int], vertex: int, radius: int) -> int:
    """Vertices within `radius` steps of `vertex`, as a bitset."""
    reached = frontier = 1 << vertex
    for _ in range(radius):
        step = 0
        while frontier:
            low = frontier & -frontier
            step |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = step & ~reached
        reached |= step
    return reached


def short_cycle_free_graph(rng: random.Random, n: int) -> Graph:
    """
    A random forest plus extra edges between vertices at distance >= 4, so
    the graph has girth >= 5 or no cycle. Forests may leave isolated vertices.
    """
    rows = [0] * n
    for v in range(1, n):
        if rng.random() < 0.8:
            u = rng.randrange(v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    for _ in range(n):
        i, j = rng.sample(range(n), 2)
        if not (_ball(rows, i, 3) >> j) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def degenerate_words(graph: Graph, rng: random.Random, size: int) -> List[int]:
    """
    Up to `size` words such that (G, C) detects every error of weight <= Δ′(G).

    Each word has even overlap with the X-part of every such error whose
    Cl_S image is zero, and no two words differ by a nonzero image. Any code
    with two or more of these words is degenerate.
    """
    reach = diagonal_distance(graph).value
    images = set()
    kernel = set()
    for w in range(1, reach + 1):
        for z_bits, x_bits in iter_weight_bits(graph.n, w):
            image = cls_bits(graph.rows, z_bits, x_bits)
            if image:
                images.add(image)
            else:
                kernel.add(x_bits)
    allowed = [c for c in range(1 << graph.n) if not any((c & x).bit_count() & 1 for x in kernel)]
    rng.shuffle(allowed)
    words: List[int] = []
    for c in allowed:
        if all((c ^ word) not in images for word in words):
            words.append(c)
            if len(words) == size:
                break
    return words


def _cws(graph: Graph, words: Iterable[int]) -> CwsCode:
    code = ClassicalCode.explicit([BitVector(graph.n, bits) for bits in sorted(words)], graph.n)
    return CwsCode(graph, code)


def random_cws_instances(
    count: int,
    seed: int,
    max_n: int = 8,
    min_words: int = 2,
    max_words: int = 8,
    min_n: int = 3,
) -> Iterator[CwsInstance]:
    """
    Seeded random CWS codes with explicit word lists; no word is forced.

    About half the instances are constructed with `degenerate_words`, on a
    short-cycle-free graph or a random one. When a construction finds fewer
    than `min_words` words the instance falls back to random words. Random
    codes draw half the time under a mask, so some coordinates stay zero in
    every word.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(min_n, max_n)
        size = rng.randint(min_words, max_words)
        if rng.random() < 0.5:
            graph = short_cycle_free_graph(rng, n) if rng.random() < 0.5 else _random_graph(rng, n)
            words = degenerate_words(graph, rng, size)
            if len(words) >= min_words:
                produced += 1
                yield CwsInstance(_cws(graph, words), constructed=True)
                continue

        graph = _random_graph(rng, n)
        mask: Optional[int] = rng.getrandbits(n) if rng.random() < 0.5 else None
        free = n if mask is None else bin(mask).count('1')
        size = min(size, 1 << free)
        if size < min_words:
            continue
        chosen = set()
        while len(chosen) < size:
            bits = rng.getrandbits(n)
            chosen.add(bits if mask is None else bits & mask)
        produced += 1
        yield CwsInstance(_cws(graph, chosen))
