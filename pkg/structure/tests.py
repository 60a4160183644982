"""
Structure Tests - Property A, degree gap, Γ classification and V' certificates
"""
import itertools

from django.test import SimpleTestCase, override_settings

from core.exceptions import BudgetExceededError, ContractError, DomainError
from diagdist.services import oracle_diagonal_distance
from gf2.vectors import BitVector
from graphs.generators import complete, complete_bipartite, cycle, petersen, projective_plane_incidence, random_c4_free
from graphs.models import Graph
from structure.certificates import certificate_triangles, end_cor_certificate, verify_certificate
from structure.columns import ColumnSystem, degree_gap, property_a_check
from structure.gamma import (
    GammaCondition,
    classify_gamma,
    corollary_violations,
    enumerate_zero_sum_subsets,
    main_lemma_violations,
)


def brute_force_zero_sums(system: ColumnSystem, max_size: int):
    found = []
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(range(len(system)), size):
            if system.subset_sum(subset).is_zero():
                found.append(subset)
    return found


class ColumnSystemTestCase(SimpleTestCase):
    """Property A and the degree gap"""

    def test_graph_system_layout(self):
        system = ColumnSystem.from_graph(cycle(5))
        self.assertEqual(len(system), 10)
        self.assertTrue(all(system.weight(j) == 1 for j in range(5)))
        self.assertEqual(system.label(0), "e0")
        self.assertEqual(system.label(5), "a0")
        self.assertEqual(system.columns[5], BitVector.from_string("01001"))

    def test_property_a(self):
        self.assertTrue(property_a_check(ColumnSystem.from_graph(cycle(5))).holds)
        result = property_a_check(ColumnSystem.from_graph(complete_bipartite(2, 2)))
        self.assertFalse(result.holds)
        self.assertEqual(len(result.shared_support), 2)
        i, j = result.violating_pair
        self.assertGreaterEqual(i, 4)

    def test_property_a_on_unit_columns(self):
        system = ColumnSystem.from_columns([BitVector.unit(4, k) for k in range(4)])
        self.assertTrue(property_a_check(system).holds)

    def test_property_a_matches_four_cycle_test(self):
        graphs = [cycle(n) for n in range(3, 8)] + [complete(4), complete_bipartite(2, 3), petersen()]
        graphs += [random_c4_free(9, 3, seed).graph for seed in range(4)]
        for pairs_mask in range(0, 64, 5):
            pairs = list(itertools.combinations(range(4), 2))
            graphs.append(Graph.from_edges(4, [p for k, p in enumerate(pairs) if (pairs_mask >> k) & 1]))
        for g in graphs:
            self.assertEqual(property_a_check(ColumnSystem.from_graph(g)).holds, not g.has_four_cycle())

    def test_degree_gap(self):
        self.assertEqual(degree_gap(ColumnSystem.from_graph(cycle(5))).value, 2)
        self.assertEqual(degree_gap(ColumnSystem.from_graph(petersen())).value, 3)
        system = ColumnSystem.from_columns([
            BitVector.from_string("1000"),
            BitVector.from_string("1100"),
            BitVector.from_string("0111"),
        ])
        gap = degree_gap(system, required=3)
        self.assertFalse(gap.defined)
        self.assertIn("weight 2", gap.reason)

    def test_degree_gap_undefined_without_heavy_columns(self):
        system = ColumnSystem.from_columns([BitVector.unit(3, 0)])
        self.assertFalse(degree_gap(system).defined)


class GammaClassificationTestCase(SimpleTestCase):
    """The five-way classification"""

    def setUp(self):
        self.k3 = ColumnSystem.from_graph(complete(3))
        self.c5 = ColumnSystem.from_graph(cycle(5))

    def test_empty_gamma(self):
        self.assertEqual(classify_gamma(self.c5, []).conditions, (GammaCondition.O,))

    def test_condition_b(self):
        # a0 and a1 sit at indices 3 and 4
        result = classify_gamma(self.k3, [3, 4, 0, 1])
        self.assertEqual(result.conditions, (GammaCondition.B,))
        self.assertEqual((result.gamma1_size, result.gamma_delta_size), (2, 2))

    def test_condition_c(self):
        result = classify_gamma(self.c5, [5, 1, 4])
        self.assertEqual(result.conditions, (GammaCondition.C,))

    def test_nonzero_sum_rejected(self):
        with self.assertRaises(ContractError):
            classify_gamma(self.c5, [0, 1])

    def test_condition_a2(self):
        # all three adjacency columns of K3 sum to zero
        result = classify_gamma(self.k3, [3, 4, 5])
        self.assertEqual(result.conditions, (GammaCondition.A2,))


class ZeroSumEnumerationTestCase(SimpleTestCase):
    """Meet-in-the-middle enumeration"""

    def test_c5_pairs(self):
        system = ColumnSystem.from_graph(cycle(5))
        self.assertEqual(list(enumerate_zero_sum_subsets(system, 2)), [])

    def test_c5_triples_are_condition_c(self):
        system = ColumnSystem.from_graph(cycle(5))
        subsets = list(enumerate_zero_sum_subsets(system, 3))
        self.assertEqual(len(subsets), 5)
        for subset in subsets:
            self.assertIn(GammaCondition.C, classify_gamma(system, subset).conditions)
        self.assertEqual(subsets, brute_force_zero_sums(system, 3))

    def test_k3_triples(self):
        system = ColumnSystem.from_graph(complete(3))
        subsets = list(enumerate_zero_sum_subsets(system, 3))
        self.assertEqual(subsets, brute_force_zero_sums(system, 3))
        self.assertEqual(len(subsets), 4)
        condition_c = [s for s in subsets if GammaCondition.C in classify_gamma(system, s).conditions]
        self.assertEqual(len(condition_c), 3)
        self.assertIn((3, 4, 5), subsets)

    def test_matches_brute_force(self):
        for g in (petersen(), cycle(6), random_c4_free(7, 2, 3).graph):
            system = ColumnSystem.from_graph(g)
            self.assertEqual(list(enumerate_zero_sum_subsets(system, 5)), brute_force_zero_sums(system, 5))

    def test_budgets(self):
        system = ColumnSystem.from_graph(petersen())
        with self.assertRaises(BudgetExceededError):
            list(enumerate_zero_sum_subsets(system, 7, max_columns=10))
        with self.assertRaises(BudgetExceededError):
            list(enumerate_zero_sum_subsets(system, 7, max_partials=100))

    @override_settings(CWS_ZERO_SUM_MAX_COLUMNS=8)
    def test_column_budget_from_settings(self):
        with self.assertRaises(BudgetExceededError):
            list(enumerate_zero_sum_subsets(ColumnSystem.from_graph(cycle(5)), 3))

    def test_main_lemma_and_corollary_on_small_graphs(self):
        for g in (cycle(5), cycle(6), complete(3), petersen()):
            system = ColumnSystem.from_graph(g)
            delta = g.min_degree
            subsets = list(enumerate_zero_sum_subsets(system, 2 * delta + 1))
            self.assertEqual(main_lemma_violations(system, subsets), [])
            self.assertEqual(corollary_violations(system, subsets), [])

    def test_corollary_requires_weight_delta_columns(self):
        uniform = ColumnSystem.from_columns([BitVector.from_string(s) for s in ("1100", "0110", "1010", "1110")])
        self.assertEqual(corollary_violations(uniform, [(0, 1, 2)], 2), [])

        # a weight-4 column completes the triple, so A.2 holds but the corollary does not
        mixed = ColumnSystem.from_columns([BitVector.from_string(s) for s in ("1100", "0011", "1111")])
        self.assertIn(GammaCondition.A2, classify_gamma(mixed, (0, 1, 2), 2).conditions)
        (violation,) = corollary_violations(mixed, [(0, 1, 2)], 2)
        self.assertEqual(violation['weights'], [2, 2, 4])

    def test_corollary_rejects_small_subsets(self):
        # a repeated column gives a zero-sum pair
        system = ColumnSystem.from_columns([BitVector.from_string(s) for s in ("110", "110", "011")])
        (violation,) = corollary_violations(system, [(0, 1)], 2)
        self.assertEqual(violation["labels"], ["c0", "c1"])


class CertificateTestCase(SimpleTestCase):
    """V' certificate search"""

    def test_triangle(self):
        certificate = end_cor_certificate(complete(3))
        self.assertEqual(certificate.v_prime, (0, 1))
        self.assertEqual(certificate.midpoint_map()[(0, 1)], 2)
        self.assertEqual(verify_certificate(complete(3), certificate), [])
        self.assertEqual(certificate_triangles(complete(3), certificate), [(0, 1, 2)])

    def test_absent_certificates(self):
        self.assertIsNone(end_cor_certificate(cycle(5)))
        self.assertIsNone(end_cor_certificate(petersen()))
        self.assertIsNone(end_cor_certificate(projective_plane_incidence(2)))

    def test_preconditions(self):
        with self.assertRaises(DomainError):
            end_cor_certificate(complete(4))
        with self.assertRaises(DomainError):
            end_cor_certificate(Graph.from_edges(3, [(0, 1), (1, 2)]))

    def test_two_triangles_sharing_a_vertex(self):
        # bowtie: triangles 0-1-2 and 2-3-4; degree-2 vertices 0, 1, 3, 4
        bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        certificate = end_cor_certificate(bowtie)
        self.assertIsNotNone(certificate)
        self.assertEqual(verify_certificate(bowtie, certificate), [])

    def test_iff_against_oracle(self):
        graphs = [cycle(n) for n in range(3, 9)] + [petersen()]
        graphs += [random_c4_free(n, 2, seed).graph for n in range(5, 10) for seed in range(3)]
        for g in graphs:
            if g.has_four_cycle() or g.min_degree < 2:
                continue
            oracle = oracle_diagonal_distance(g)
            self.assertEqual(end_cor_certificate(g) is not None, oracle.value == g.min_degree)
