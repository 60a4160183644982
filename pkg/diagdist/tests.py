"""
Diagonal Distance Tests - Cl_S map, exact search, oracle and fast path
"""
import random
from unittest.mock import patch

from django.test import SimpleTestCase, override_settings

from core.exceptions import BudgetExceededError, DimensionError, DomainError, FalsificationError
from diagdist.services import (
    DistanceMethod,
    cls_map,
    diagonal_distance,
    oracle_diagonal_distance,
    theorem_a_value,
)
from gf2.vectors import BitVector
from graphs.generators import complete, cycle, path, petersen, projective_plane_incidence, random_c4_free
from graphs.models import Graph
from pauli.operators import PauliVector
from structure.certificates import EndCorCertificate


class ClsMapTestCase(SimpleTestCase):
    """The error-transfer map"""

    def test_single_x(self):
        image = cls_map(cycle(5), PauliVector.single(5, 0, 'X'))
        self.assertEqual(image, BitVector.from_string("01001"))

    def test_pure_z_is_identity(self):
        v = BitVector.from_string("10110")
        self.assertEqual(cls_map(cycle(5), PauliVector(v, BitVector.zeros(5))), v)

    def test_linearity(self):
        g = petersen()
        rng = random.Random(2)
        for _ in range(50):
            e1 = PauliVector.from_bits(10, rng.getrandbits(10), rng.getrandbits(10))
            e2 = PauliVector.from_bits(10, rng.getrandbits(10), rng.getrandbits(10))
            self.assertEqual(cls_map(g, e1 ^ e2), cls_map(g, e1) ^ cls_map(g, e2))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            cls_map(cycle(5), PauliVector.identity(4))


class DiagonalDistanceTestCase(SimpleTestCase):
    """Exact search against the oracle"""

    def assertValidResult(self, graph, result):
        self.assertEqual(result.witness_pauli.symplectic_weight(), result.value)
        self.assertTrue(cls_map(graph, result.witness_pauli).is_zero())
        self.assertFalse(result.witness_u.is_zero())

    def test_named_values(self):
        expected = [(complete(3), 2), (cycle(5), 3), (complete(4), 2), (petersen(), 4)]
        for graph, value in expected:
            exact = diagonal_distance(graph)
            oracle = oracle_diagonal_distance(graph)
            self.assertEqual(exact.value, value)
            self.assertEqual(oracle.value, value)
            self.assertValidResult(graph, exact)
            self.assertValidResult(graph, oracle)

    def test_heawood_value(self):
        self.assertEqual(oracle_diagonal_distance(projective_plane_incidence(2)).value, 4)

    def test_triangle_witness(self):
        result = diagonal_distance(complete(3))
        self.assertEqual(result.witness_u, BitVector.from_string("110"))
        self.assertEqual(result.method, DistanceMethod.EXACT_SEARCH)

    def test_small_graphs(self):
        self.assertEqual(oracle_diagonal_distance(Graph.empty(1)).value, 1)
        self.assertEqual(oracle_diagonal_distance(path(2)).value, 2)
        self.assertEqual(diagonal_distance(Graph.empty(1)).value, 1)
        with self.assertRaises(DomainError):
            diagonal_distance(Graph.empty(0))

    def test_exact_agrees_with_oracle(self):
        rng = random.Random(17)
        for _ in range(40):
            n = rng.randint(2, 9)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
            g = Graph.from_edges(n, edges)
            exact = diagonal_distance(g)
            oracle = oracle_diagonal_distance(g)
            self.assertEqual(exact.value, oracle.value)
            self.assertEqual(exact.witness_u, oracle.witness_u)
            self.assertLessEqual(exact.value, g.min_degree + 1)

    def test_oracle_cap(self):
        with self.assertRaises(BudgetExceededError):
            oracle_diagonal_distance(cycle(12), max_n=10)

    @override_settings(CWS_ORACLE_MAX_N=6)
    def test_oracle_cap_from_settings(self):
        with self.assertRaises(BudgetExceededError):
            oracle_diagonal_distance(cycle(7))


class TheoremATestCase(SimpleTestCase):
    """Fast path for 4-cycle-free graphs"""

    def test_values(self):
        self.assertEqual(theorem_a_value(complete(3)).value, 2)
        self.assertEqual(theorem_a_value(cycle(5)).value, 3)
        self.assertEqual(theorem_a_value(projective_plane_incidence(2)).value, 4)
        self.assertEqual(theorem_a_value(petersen()).value, 4)

    def test_witness_shapes(self):
        result = theorem_a_value(cycle(5))
        self.assertEqual(result.witness_u, BitVector.unit(5, 0))
        self.assertEqual(result.witness_pauli.z_part, BitVector.from_string("01001"))
        self.assertEqual(result.method, DistanceMethod.THEOREM_A_FAST_PATH)
        self.assertEqual(theorem_a_value(complete(3)).witness_u, BitVector.from_string("110"))

    def test_preconditions(self):
        with self.assertRaises(DomainError):
            theorem_a_value(complete(4))
        with self.assertRaises(DomainError):
            theorem_a_value(path(4))

    def test_wrong_witness_is_reported_with_graph6(self):
        bogus = EndCorCertificate(delta=2, v_prime=(0, 1), pairings=((0, 1), (1, 0)), midpoints=())
        with patch('diagdist.services.end_cor_certificate', return_value=bogus):
            with self.assertRaises(FalsificationError) as raised:
                theorem_a_value(cycle(5))
        self.assertEqual(raised.exception.counterexample['graph6'], 'Dhc')
        self.assertEqual(raised.exception.counterexample['expected'], 2)

    def test_agrees_with_engines(self):
        graphs = [cycle(n) for n in range(3, 10)] + [petersen()]
        graphs += [random_c4_free(n, 2, seed).graph for n in range(6, 11) for seed in range(4)]
        for g in graphs:
            if g.has_four_cycle() or g.min_degree < 2:
                continue
            fast = theorem_a_value(g).value
            self.assertIn(fast, (g.min_degree, g.min_degree + 1))
            self.assertGreater(2 * fast, g.min_degree)
            self.assertEqual(fast, diagonal_distance(g).value)
            self.assertEqual(fast, oracle_diagonal_distance(g).value)
