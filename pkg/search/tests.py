"""
Search Tests - image sets, compatibility graph, clique search and code search
"""
import random
from unittest.mock import patch

import networkx as nx
from django.test import SimpleTestCase

from core.exceptions import BudgetExceededError, DimensionError, DomainError, FalsificationError
from cws.codes import ClassicalCode
from cws.services import DistanceResult, DistanceStatus, distance
from gf2.vectors import BitVector
from graphs.generators import complete, cycle, petersen, random_c4_free
from graphs.models import Graph
from search.clique import CliqueMode, GraphAdjacency, max_clique
from search.services import cls_image_set, compatibility_graph, construct_sqrt_family, search_code


def bits(text: str) -> int:
    return BitVector.from_string(text).bits


class ImageSetTestCase(SimpleTestCase):
    """Cl_S images of low-weight errors"""

    def test_c5_weight_one_images(self):
        images = cls_image_set(cycle(5), 2)
        self.assertEqual(len(images), 15)
        g = cycle(5)
        for i in range(5):
            self.assertIn(1 << i, images)
            self.assertIn(g.rows[i], images)
            self.assertIn((1 << i) ^ g.rows[i], images)

    def test_d_one_is_empty(self):
        self.assertEqual(len(cls_image_set(petersen(), 1)), 0)

    def test_all_ones_missing_at_d_three(self):
        images = cls_image_set(cycle(5), 3)
        self.assertNotIn(BitVector.ones(5), images)
        self.assertEqual(len(images), 30)

    def test_zero_absent_below_diagonal_distance(self):
        self.assertNotIn(0, cls_image_set(petersen(), 4))

    def test_range(self):
        with self.assertRaises(DomainError):
            cls_image_set(cycle(5), 0)


class CompatibilityGraphTestCase(SimpleTestCase):
    """Cayley-graph adjacency"""

    def test_adjacency(self):
        compat = compatibility_graph(cycle(5), 2)
        self.assertTrue(compat.adjacent(bits("00000"), bits("11111")))
        self.assertFalse(compat.adjacent(bits("00000"), bits("10000")))

    def test_d_one_is_complete(self):
        compat = compatibility_graph(cycle(5), 1)
        self.assertEqual(len(compat.zero_neighbors()), 31)

    def test_translation_invariance(self):
        compat = compatibility_graph(cycle(5), 2)
        rng = random.Random(8)
        for _ in range(200):
            x, y, t = (rng.getrandbits(5) for _ in range(3))
            self.assertEqual(compat.adjacent(x, y), compat.adjacent(x ^ t, y ^ t))

    def test_requires_nondegenerate_regime(self):
        with self.assertRaises(DomainError):
            compatibility_graph(cycle(5), 4)

    def test_materialise_cap(self):
        with self.assertRaises(BudgetExceededError):
            compatibility_graph(cycle(5), 2).materialise(max_n=4)


class MaxCliqueTestCase(SimpleTestCase):
    """Exact and greedy clique search"""

    def test_named_graphs(self):
        self.assertEqual(max_clique(GraphAdjacency.from_graph(complete(8))).size, 8)
        self.assertEqual(max_clique(GraphAdjacency.from_graph(Graph.empty(6))).size, 1)
        self.assertEqual(max_clique(GraphAdjacency.from_graph(cycle(5))).size, 2)

    def test_matches_networkx(self):
        rng = random.Random(21)
        for _ in range(25):
            n = rng.randint(4, 16)
            g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.6])
            nx_graph = nx.Graph()
            nx_graph.add_nodes_from(range(n))
            nx_graph.add_edges_from(g.edges())
            expected = max(len(c) for c in nx.find_cliques(nx_graph))
            adjacency = GraphAdjacency.from_graph(g)
            exact = max_clique(adjacency)
            greedy = max_clique(adjacency, CliqueMode.GREEDY, restarts=4, seed=3)
            self.assertEqual(exact.size, expected)
            self.assertTrue(exact.complete)
            self.assertTrue(adjacency.is_clique(exact.vertices))
            self.assertTrue(adjacency.is_clique(greedy.vertices))
            self.assertGreaterEqual(exact.size, greedy.size)

    def test_vertex_budget(self):
        with self.assertRaises(BudgetExceededError):
            max_clique(GraphAdjacency.from_graph(petersen()), max_vertices=5)

    def test_zero_time_budget_returns_partial_clique(self):
        rng = random.Random(11)
        n = 200
        dense = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.9])
        adjacency = GraphAdjacency.from_graph(dense)
        result = max_clique(adjacency, CliqueMode.EXACT, time_budget=0.0)
        self.assertFalse(result.complete)
        self.assertTrue(result.vertices)
        self.assertTrue(adjacency.is_clique(result.vertices))

    def test_greedy_is_seeded(self):
        adjacency = GraphAdjacency.from_graph(random_c4_free(30, 3, 2).graph)
        first = max_clique(adjacency, CliqueMode.GREEDY, restarts=8, seed=5)
        second = max_clique(adjacency, CliqueMode.GREEDY, restarts=8, seed=5)
        self.assertEqual(first.vertices, second.vertices)


class SearchCodeTestCase(SimpleTestCase):
    """Clique-based code search"""

    def test_five_qubit_code(self):
        result = search_code(cycle(5), 3)
        self.assertEqual([str(w) for w in result.words], ["00000", "11111"])
        self.assertEqual(result.verified_d.status, DistanceStatus.EXACT)
        self.assertEqual(result.verified_d.value, 3)

    def test_distance_two_regression(self):
        result = search_code(cycle(5), 2, CliqueMode.EXACT)
        self.assertEqual(result.size, 6)
        self.assertTrue(result.clique_complete)
        full = distance(result.cws_code())
        self.assertGreaterEqual(full.value, 2)

    def test_words_pairwise_compatible(self):
        result = search_code(cycle(5), 2)
        compat = compatibility_graph(cycle(5), 2)
        words = [w.bits for w in result.words]
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                self.assertTrue(compat.adjacent(words[i], words[j]))

    def test_greedy_mode(self):
        greedy = search_code(cycle(5), 2, CliqueMode.GREEDY, restarts=8, seed=1)
        self.assertLessEqual(greedy.size, 6)
        self.assertGreaterEqual(greedy.verified_d.value, 2)

    def test_unsound_result_is_reported_with_graph6(self):
        weak = DistanceResult(status=DistanceStatus.EXACT, value=1, searched_weight=1, errors_checked=1)
        with patch('search.services.distance', return_value=weak):
            with self.assertRaises(FalsificationError) as raised:
                search_code(cycle(5), 2)
        self.assertEqual(raised.exception.counterexample['graph6'], 'Dhc')
        self.assertIsNone(raised.exception.counterexample['witness'])

    def test_beyond_diagonal_distance(self):
        with self.assertRaises(DomainError):
            search_code(complete(4), 3)


class SqrtFamilyTestCase(SimpleTestCase):
    """Projective-plane family"""

    def test_accepts_repetition_code(self):
        construction = construct_sqrt_family(2, ClassicalCode.from_strings(["0" * 14, "1" * 14]))
        self.assertEqual(construction.required_classical_distance, 12)
        self.assertEqual(construction.classical_distance, 14)
        self.assertEqual(construction.certified_distance, 4)

    def test_accepts_distance_thirteen(self):
        construction = construct_sqrt_family(2, ClassicalCode.from_strings(["0" * 14, "1" * 13 + "0"]))
        self.assertEqual(construction.classical_distance, 13)

    def test_rejects_distance_twelve(self):
        with self.assertRaises(DomainError):
            construct_sqrt_family(2, ClassicalCode.from_strings(["0" * 14, "1" * 12 + "00"]))

    def test_rejects_wrong_length(self):
        with self.assertRaises(DimensionError):
            construct_sqrt_family(2, ClassicalCode.from_strings(["0" * 7, "1" * 7]))

    def test_certified_distance_holds(self):
        construction = construct_sqrt_family(2, ClassicalCode.from_strings(["0" * 14, "1" * 14]))
        result = distance(construction.cws, max_weight=3)
        self.assertEqual(result.status, DistanceStatus.LOWER_BOUND)
        self.assertEqual(result.value, 4)
        # a stabilizer generator anticommutes with Z(1^14)
        self.assertEqual(str(distance(construction.cws, max_weight=4)), "exact(4)")
