"""
Graph Tests - models, generators and text formats
"""
import itertools

import networkx as nx
from django.test import SimpleTestCase

from core.exceptions import ParseError, UnsupportedParameterError
from graphs.generators import (
    complete,
    complete_bipartite,
    cycle,
    path,
    petersen,
    projective_plane_incidence,
    random_c4_free,
)
from graphs.graph6 import from_adjacency_list, from_graph6, graph6_or_none, to_adjacency_list, to_graph6
from graphs.models import Graph


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


class GraphModelTestCase(SimpleTestCase):
    """Adjacency invariants and structural predicates"""

    def test_rejects_asymmetric_rows(self):
        with self.assertRaises(ValueError):
            Graph(2, (0b10, 0b00))

    def test_rejects_self_loop(self):
        with self.assertRaises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_degrees(self):
        g = complete_bipartite(2, 3)
        self.assertEqual(g.degrees, (3, 3, 2, 2, 2))
        self.assertEqual(g.min_degree, 2)
        self.assertEqual(g.max_degree, 3)
        self.assertEqual(g.min_degree_vertices(), (2, 3, 4))

    def test_four_cycle_detection(self):
        self.assertFalse(cycle(5).has_four_cycle())
        self.assertTrue(complete_bipartite(2, 2).has_four_cycle())
        self.assertTrue(complete(4).has_four_cycle())
        self.assertFalse(complete(3).has_four_cycle())
        self.assertFalse(petersen().has_four_cycle())

    def test_girth_named_graphs(self):
        self.assertEqual(complete(3).girth(), 3)
        self.assertEqual(cycle(5).girth(), 5)
        self.assertEqual(complete_bipartite(2, 2).girth(), 4)
        self.assertEqual(petersen().girth(), 5)
        self.assertIsNone(path(6).girth())
        self.assertIsNone(Graph.empty(4).girth())

    def test_girth_matches_networkx(self):
        for n in range(3, 7):
            for seed in range(5):
                g = random_c4_free(n, 2, seed).graph
                expected = nx.girth(to_networkx(g))
                actual = g.girth()
                if expected == float('inf'):
                    self.assertIsNone(actual)
                else:
                    self.assertEqual(actual, expected)
        self.assertEqual(cycle(8).girth(), nx.girth(to_networkx(cycle(8))))

    def test_four_cycle_agrees_with_girth(self):
        for g in (cycle(4), cycle(6), complete_bipartite(2, 3), petersen(), projective_plane_incidence(2)):
            girth = g.girth()
            if girth == 4:
                self.assertTrue(g.has_four_cycle())
            if girth is None or girth >= 5:
                self.assertFalse(g.has_four_cycle())

    def test_connectivity(self):
        self.assertTrue(cycle(6).is_connected())
        self.assertFalse(Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected())

    def test_remove_edge(self):
        g = cycle(5).remove_edge(0, 1)
        self.assertFalse(g.has_edge(0, 1))
        self.assertEqual(g.edge_count, 4)
        self.assertIsNone(g.girth())


class GeneratorTestCase(SimpleTestCase):
    """Named graphs and families"""

    def test_petersen(self):
        g = petersen()
        self.assertEqual(g.n, 10)
        self.assertEqual(set(g.degrees), {3})
        self.assertEqual(g.edge_count, 15)

    def test_heawood(self):
        g = projective_plane_incidence(2)
        self.assertEqual(g.n, 14)
        self.assertEqual(set(g.degrees), {3})
        self.assertEqual(g.girth(), 6)
        self.assertFalse(g.has_four_cycle())

    def test_projective_plane_order_three(self):
        g = projective_plane_incidence(3)
        self.assertEqual(g.n, 26)
        self.assertEqual(set(g.degrees), {4})
        self.assertEqual(g.girth(), 6)

    def test_projective_plane_is_bipartite(self):
        g = projective_plane_incidence(2)
        self.assertTrue(nx.is_bipartite(to_networkx(g)))

    def test_non_prime_order_rejected(self):
        with self.assertRaises(UnsupportedParameterError):
            projective_plane_incidence(4)
        with self.assertRaises(UnsupportedParameterError):
            projective_plane_incidence(1)

    def test_random_c4_free_has_no_four_cycle(self):
        result = random_c4_free(20, 3, 7)
        self.assertFalse(result.graph.has_four_cycle())
        self.assertEqual(result.target_met, result.graph.min_degree >= 3)

    def test_random_c4_free_is_deterministic(self):
        first = random_c4_free(12, 3, 42)
        second = random_c4_free(12, 3, 42)
        self.assertEqual(first.graph, second.graph)

    def test_random_c4_free_reports_unmet_target(self):
        # Four vertices cannot reach minimum degree 3 without K4
        result = random_c4_free(4, 3, 1)
        self.assertFalse(result.target_met)
        self.assertFalse(result.graph.has_four_cycle())


class Graph6TestCase(SimpleTestCase):
    """graph6 and adjacency-list formats"""

    def test_cycle_five(self):
        self.assertEqual(to_graph6(cycle(5)), "Dhc")

    def test_matches_networkx_bytes(self):
        for g in (cycle(5), complete(4), petersen(), projective_plane_incidence(2), Graph.empty(1)):
            expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
            self.assertEqual(to_graph6(g), expected)

    def test_round_trip(self):
        graphs = [cycle(n) for n in range(3, 9)] + [petersen(), projective_plane_incidence(3)]
        graphs += [random_c4_free(15, 3, seed).graph for seed in range(5)]
        for g in graphs:
            self.assertEqual(from_graph6(to_graph6(g)), g)

    def test_header_is_accepted(self):
        self.assertEqual(from_graph6(">>graph6<<Dhc\n"), cycle(5))

    def test_all_graphs_on_four_vertices(self):
        pairs = list(itertools.combinations(range(4), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(4, [p for k, p in enumerate(pairs) if (mask >> k) & 1])
            self.assertEqual(from_graph6(to_graph6(g)), g)

    def test_malformed_input(self):
        for bad in ("", "D", "Dhcc", "D\x7fc", "&Dhc", ":Dhc", "~??", "Dh "):
            with self.assertRaises(ParseError, msg=bad):
                from_graph6(bad)

    def test_nonzero_padding_rejected(self):
        # n=3 uses 3 data bits; the low three bits of the group must be zero
        self.assertEqual(to_graph6(complete(3)), "Bw")
        with self.assertRaises(ParseError):
            from_graph6("Bx")

    def test_graph6_or_none(self):
        self.assertEqual(graph6_or_none(cycle(5)), "Dhc")
        self.assertIsNone(graph6_or_none(Graph.empty(63)))

    def test_adjacency_list_round_trip(self):
        g = projective_plane_incidence(3)
        self.assertEqual(from_adjacency_list(to_adjacency_list(g)), g)

    def test_adjacency_list_rejects_one_directional_edge(self):
        with self.assertRaises(ParseError):
            from_adjacency_list("3\n0: 1\n1:\n2:\n")
