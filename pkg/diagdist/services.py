"""
Diagonal Distance - Services

The Cl_S error-transfer map and three ways of computing the diagonal distance
of a graph:

- `diagonal_distance`: exact search over the X-part u by increasing Hamming
  weight, pruned once weight(u) reaches the best value found.
- `oracle_diagonal_distance`: unpruned enumeration of all 2^n - 1 nonzero u,
  vectorised with numpy. Used only to cross-check.
- `theorem_a_value`: the fast path for 4-cycle-free graphs with minimum
  degree at least 2, driven by the V' certificate search.

The zeros of Cl_S are exactly {(A u | u)}, so every search runs over u alone
and the value of u is |supp(u) ∪ supp(A u)|.

Ties between witnesses are broken by (weight(u), support of u), which is the
first u met in the canonical enumeration.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from core.exceptions import BudgetExceededError, DimensionError, DomainError, FalsificationError
from gf2.vectors import BitVector
from graphs.graph6 import graph6_or_none
from graphs.models import Graph
from pauli.operators import PauliVector
from structure.certificates import check_theorem_a_preconditions, end_cor_certificate

logger = logging.getLogger(__name__)


class DistanceMethod:
    """How a diagonal distance was obtained."""
    EXACT_SEARCH = "exact-search"
    ORACLE = "oracle"
    THEOREM_A_FAST_PATH = "theorem-a-fast-path"

    CHOICES = (EXACT_SEARCH, ORACLE, THEOREM_A_FAST_PATH)


@dataclass(frozen=True)
class DiagDistanceResult:
    """Diagonal distance with the u that realises it."""
    value: int
    witness_u: BitVector
    witness_pauli: PauliVector      # (A u | u)
    method: str

    @property
    def n(self) -> int:
        return self.witness_u.length


def neighborhood_sum(rows: Sequence[int], u_bits: int) -> int:
    """A·u for packed adjacency rows: xor of the rows indexed by supp(u)."""
    total = 0
    while u_bits:
        low = u_bits & -u_bits
        total ^= rows[low.bit_length() - 1]
        u_bits ^= low
    return total


def cls_bits(rows: Sequence[int], z_bits: int, x_bits: int) -> int:
    """Cl_S on packed integers."""
    return z_bits ^ neighborhood_sum(rows, x_bits)


def cls_map(graph: Graph, error: PauliVector) -> BitVector:
    """Cl_S(Z(v)X(u)) = v xor (sum of r_i over i in supp(u))."""
    if error.n != graph.n:
        raise DimensionError("cls_map", graph.n, error.n)
    return BitVector(graph.n, cls_bits(graph.rows, error.z_part.bits, error.x_part.bits))


def witness_key(u_bits: int) -> Tuple[int, Tuple[int, ...]]:
    support = []
    rest = u_bits
    while rest:
        low = rest & -rest
        support.append(low.bit_length() - 1)
        rest ^= low
    return len(support), tuple(support)


def kernel_pauli(graph: Graph, u_bits: int) -> PauliVector:
    """The kernel element (A u | u)."""
    return PauliVector.from_bits(graph.n, neighborhood_sum(graph.rows, u_bits), u_bits)


def _result(graph: Graph, u_bits: int, method: str) -> DiagDistanceResult:
    pauli = kernel_pauli(graph, u_bits)
    return DiagDistanceResult(
        value=pauli.symplectic_weight(),
        witness_u=BitVector(graph.n, u_bits),
        witness_pauli=pauli,
        method=method,
    )


def _require_vertices(graph: Graph) -> None:
    if graph.n < 1:
        raise DomainError("graph has at least one vertex", "n = 0")


def diagonal_distance(graph: Graph) -> DiagDistanceResult:
    """
    Exact diagonal distance by pruned search.

    u is enumerated by increasing Hamming weight in itertools.combinations
    order; since the value of u is at least weight(u), the search stops as
    soon as the weight reaches the best value found.
    """
    _require_vertices(graph)
    rows = graph.rows
    best: Optional[int] = None
    best_u = 0
    visited = 0
    for w in range(1, graph.n + 1):
        if best is not None and w >= best:
            break
        for support in itertools.combinations(range(graph.n), w):
            u_bits = 0
            image = 0
            for i in support:
                u_bits |= 1 << i
                image ^= rows[i]
            visited += 1
            value = (image | u_bits).bit_count()
            if best is None or value < best:
                best = value
                best_u = u_bits
    logger.debug(f"diagonal_distance: n={graph.n} value={best} visited={visited}")
    return _result(graph, best_u, DistanceMethod.EXACT_SEARCH)


def neighborhood_sums(graph: Graph) -> np.ndarray:
    """A·u for every u in [0, 2^n), indexed by the packed value of u."""
    images = np.zeros(1 << graph.n, dtype=np.uint64)
    for i, row in enumerate(graph.rows):
        half = 1 << i
        images[half:2 * half] = images[:half] ^ np.uint64(row)
    return images


def oracle_diagonal_distance(graph: Graph, max_n: Optional[int] = None) -> DiagDistanceResult:
    """Unpruned reference: evaluate every nonzero u."""
    _require_vertices(graph)
    cap = settings.CWS_ORACLE_MAX_N if max_n is None else max_n
    if graph.n > cap:
        raise BudgetExceededError("oracle_max_n", cap, graph.n)

    images = neighborhood_sums(graph)
    u = np.arange(1 << graph.n, dtype=np.uint64)
    values = np.bitwise_count(images | u)[1:]
    best = int(values.min())
    candidates = np.flatnonzero(values == best) + 1
    best_u = min((int(c) for c in candidates), key=witness_key)
    logger.debug(f"oracle_diagonal_distance: n={graph.n} value={best} ties={len(candidates)}")
    return _result(graph, best_u, DistanceMethod.ORACLE)


def theorem_a_value(graph: Graph) -> DiagDistanceResult:
    """
    Diagonal distance of a 4-cycle-free graph with minimum degree >= 2.

    The value is δ when a V' certificate exists (witness: indicator of V')
    and δ+1 otherwise (witness: e_v at the least minimum-degree vertex).
    """
    check_theorem_a_preconditions(graph)
    delta = graph.min_degree
    certificate = end_cor_certificate(graph)
    if certificate is not None:
        u_bits = 0
        for v in certificate.v_prime:
            u_bits |= 1 << v
        expected = delta
    else:
        u_bits = 1 << graph.min_degree_vertices()[0]
        expected = delta + 1

    result = _result(graph, u_bits, DistanceMethod.THEOREM_A_FAST_PATH)
    if result.value != expected:
        raise FalsificationError(
            "theorem-a witness weight",
            {
                'n': graph.n,
                'graph6': graph6_or_none(graph),
                'expected': expected,
                'witness_u': str(result.witness_u),
                'value': result.value,
            },
        )
    return result
