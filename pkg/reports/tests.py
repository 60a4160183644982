"""
Reports Tests - corpora, suites and the management commands
"""
import json
import random
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

import networkx as nx
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from core.exceptions import BudgetExceededError, ExitCode, FalsificationError
from cws.codes import ClassicalCode, CwsCode
from cws.services import DegeneracyVerdict, degeneracy_classify
from cws.validators import check_necessary_conditions
from gf2.vectors import BitVector
from graphs.generators import complete, cycle
from graphs.models import Graph
from reports.corpus import (
    c4_free_graphs,
    degenerate_words,
    exhaustive_c4_free_corpus,
    random_c4_free_corpus,
    random_cws_instances,
    short_cycle_free_graph,
)
from reports.suites import MainLemmaSuite, NamedValuesSuite, SuiteCase, SuiteContext, SuiteStatus, TheoremASuite, TheoremBSuite


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


def run(*args, **options):
    """Run a command and return (report, returncode)."""
    out = StringIO()
    try:
        call_command(*args, stdout=out, **options)
        code = ExitCode.OK
    except CommandError as exc:
        code = exc.returncode
    text = out.getvalue()
    return (json.loads(text) if text.strip() else None), code


class CorpusTestCase(SimpleTestCase):
    """Graph and code corpora"""

    def test_five_vertex_graphs(self):
        graphs = list(c4_free_graphs(5))
        self.assertEqual(len(graphs), 15)
        bowtie = nx.Graph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        classes = [nx.cycle_graph(5), bowtie]
        for graph in graphs:
            g = to_networkx(graph)
            self.assertTrue(any(nx.is_isomorphic(g, c) for c in classes))
        for c in classes:
            self.assertTrue(any(nx.is_isomorphic(to_networkx(graph), c) for graph in graphs))

    def test_six_vertex_graphs_satisfy_filters(self):
        graphs = list(c4_free_graphs(6))
        self.assertTrue(graphs)
        for graph in graphs:
            self.assertFalse(graph.has_four_cycle())
            self.assertTrue(graph.is_connected())
            self.assertGreaterEqual(graph.min_degree, 2)
            degrees = graph.degrees
            self.assertEqual(list(degrees), sorted(degrees, reverse=True))

    def test_no_four_vertex_graphs(self):
        self.assertEqual(list(c4_free_graphs(4)), [])
        self.assertEqual(len(exhaustive_c4_free_corpus(5)), 16)

    def test_random_corpus(self):
        graphs = random_c4_free_corpus(20, seed=3)
        self.assertEqual(len(graphs), 20)
        self.assertEqual(graphs, random_c4_free_corpus(20, seed=3))
        for graph in graphs:
            self.assertTrue(8 <= graph.n <= 12)
            self.assertGreaterEqual(graph.min_degree, 2)
            self.assertFalse(graph.has_four_cycle())

    def test_random_cws_instances(self):
        instances = list(random_cws_instances(60, seed=2))
        self.assertEqual(len(instances), 60)
        self.assertEqual(instances, list(random_cws_instances(60, seed=2)))
        for instance in instances:
            self.assertTrue(3 <= instance.cws.n <= 8)
            self.assertTrue(2 <= instance.cws.code.size <= 8)
        self.assertTrue(any(not any(w.is_zero() for w in i.cws.code.words) for i in instances))
        constructed = [i for i in instances if i.constructed]
        self.assertTrue(constructed)
        for instance in constructed:
            self.assertEqual(degeneracy_classify(instance.cws).verdict, DegeneracyVerdict.DEGENERATE)

    def test_corpus_size_cap(self):
        for instance in random_cws_instances(20, seed=5, max_n=4):
            self.assertLessEqual(instance.cws.n, 4)

    def test_degenerate_words(self):
        # vertex 4 is isolated, so every word must vanish there
        graph = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)])
        words = degenerate_words(graph, random.Random(4), 4)
        self.assertGreaterEqual(len(words), 2)
        self.assertTrue(all(not (bits >> 4) & 1 for bits in words))
        code = ClassicalCode.explicit([BitVector(5, bits) for bits in sorted(words)], 5)
        cws = CwsCode(graph, code)
        report = degeneracy_classify(cws)
        self.assertEqual(report.verdict, DegeneracyVerdict.DEGENERATE)
        self.assertTrue(check_necessary_conditions(cws, report).passed)

    def test_short_cycle_free_graph(self):
        rng = random.Random(9)
        for n in range(3, 12):
            graph = short_cycle_free_graph(rng, n)
            self.assertEqual(graph.n, n)
            girth = graph.girth()
            self.assertTrue(girth is None or girth >= 5)


class SuiteTestCase(SimpleTestCase):
    """Suites on small corpora"""

    def test_named_values_pass(self):
        result = NamedValuesSuite().run(SuiteContext(max_n=5, samples=0, seed=1))
        self.assertEqual(result.status, SuiteStatus.PASS)
        self.assertEqual(result.cases, 5)

    def test_theorem_a_small_corpus(self):
        result = TheoremASuite().run(SuiteContext(max_n=6, samples=10, seed=1))
        self.assertEqual(result.status, SuiteStatus.PASS)
        self.assertEqual(result.passed, result.cases)

    def test_theorem_b_tallies(self):
        result = TheoremBSuite().run(SuiteContext(max_n=5, samples=15, seed=1))
        self.assertEqual(result.status, SuiteStatus.PASS)
        self.assertEqual(result.cases, 60)
        self.assertGreaterEqual(result.tallies.get('constructed_degenerate', 0), 1)
        self.assertGreaterEqual(result.tallies.get('without_zero_word', 0), 1)

    @override_settings(CWS_CODE_CORPUS_MAX_N=5)
    def test_theorem_b_corpus_cap_from_settings(self):
        cases = list(TheoremBSuite().cases(SuiteContext(max_n=7, samples=5, seed=3)))
        self.assertEqual(len(cases), 20)
        self.assertTrue(all(case.graph.n <= 5 for case in cases))

    def test_theorem_b_needs_a_degenerate_instance(self):
        with patch.object(TheoremBSuite, 'tally', return_value=()):
            result = TheoremBSuite().run(SuiteContext(max_n=5, samples=25, seed=1))
        self.assertEqual(result.status, SuiteStatus.FAIL)
        self.assertEqual(result.falsifications[-1].case, 'corpus')

    def test_main_lemma_dump_classifies_flagged_subsets(self):
        flagged = [{'gamma': [5, 1, 4], 'labels': ['a0', 'e1', 'e4'], 'reason': 'forced'}]
        with patch('reports.suites.main_lemma_violations', return_value=flagged):
            detail = MainLemmaSuite().check(SuiteCase('c5', cycle(5)))
        (classification,) = detail['classifications']
        self.assertEqual(classification['gamma'], [1, 4, 5])
        self.assertEqual(classification['conditions'], ['C'])
        self.assertEqual(classification['delta'], 2)

    @override_settings(CWS_ORACLE_MAX_N=7)
    def test_budget_is_not_falsification(self):
        result = TheoremASuite().run(SuiteContext(max_n=5, samples=5, seed=1))
        self.assertEqual(result.status, SuiteStatus.BUDGET_EXHAUSTED)
        self.assertEqual(result.falsifications, [])
        self.assertEqual(len(result.budget_exhausted), 5)


class DiagCommandTestCase(SimpleTestCase):
    """diag"""

    def test_c5(self):
        report, code = run('diag', graph6='Dhc')
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual(report['command'], ['diag', '--graph6', 'Dhc', '--seed', '1'])
        self.assertEqual(report['results']['graph']['graph6'], 'Dhc')
        diag = report['results']['diag_distance']
        self.assertEqual(diag['value'], 3)
        self.assertEqual(diag['witness_u'], '10000')
        self.assertEqual(diag['method'], 'exact-search')

    def test_field_order(self):
        report, _ = run('diag', gen='petersen')
        self.assertEqual(list(report), ['schema_version', 'command', 'inputs', 'results', 'timing'])
        self.assertEqual(report['results']['diag_distance']['value'], 4)

    def test_fast_path_with_oracle(self):
        report, code = run('diag', gen='pg', q=2, fast_path=True, oracle=True)
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual(report['results']['diag_distance']['method'], 'theorem-a-fast-path')
        self.assertEqual(report['results']['diag_distance']['value'], 4)
        self.assertTrue(report['results']['agreement'])
        self.assertIsNone(report['results']['certificate'])

    def test_fast_path_certificate(self):
        report, code = run('diag', graph6='Bw', fast_path=True)
        self.assertEqual(code, ExitCode.OK)
        certificate = report['results']['certificate']
        self.assertEqual(certificate['delta'], 2)
        self.assertEqual(certificate['v_prime'], [0, 1])
        self.assertEqual(certificate['midpoints'], [{'pair': [0, 1], 'midpoint': 2}])
        self.assertEqual(certificate['triangles'], [[0, 1, 2]])
        self.assertEqual(report['results']['diag_distance']['value'], 2)

    def test_deterministic_payload(self):
        first, _ = run('diag', gen='random-c4-free', n=10, target=2, oracle=True)
        second, _ = run('diag', gen='random-c4-free', n=10, target=2, oracle=True)
        first.pop('timing')
        second.pop('timing')
        self.assertEqual(first, second)

    def test_parse_error(self):
        report, code = run('diag', graph6='&Dhc')
        self.assertIsNone(report)
        self.assertEqual(code, ExitCode.PARSE_ERROR)

    def test_missing_graph_source(self):
        _, code = run('diag')
        self.assertEqual(code, ExitCode.PARSE_ERROR)

    def test_oracle_cap(self):
        _, code = run('diag', graph6='Dhc', oracle=True, oracle_max_n=4)
        self.assertEqual(code, ExitCode.BUDGET_EXHAUSTED)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'report.json'
            report, code = run('diag', graph6='Dhc', out=str(path))
            self.assertIsNone(report)
            self.assertEqual(code, ExitCode.OK)
            self.assertEqual(json.loads(path.read_text())['results']['diag_distance']['value'], 3)

    def test_graph_file_adjacency_list(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'k3.txt'
            path.write_text("3\n0: 1 2\n1: 0 2\n2: 0 1\n")
            report, _ = run('diag', graph_file=str(path))
            self.assertEqual(report['results']['graph']['graph6'], 'Bw')
            self.assertEqual(report['results']['diag_distance']['value'], 2)


class ClassifyCommandTestCase(SimpleTestCase):
    """classify"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def code_file(self, text: str) -> str:
        path = Path(self.tmp.name) / 'code.txt'
        path.write_text(text)
        return str(path)

    def test_five_qubit_code(self):
        report, code = run('classify', self.code_file("Dhc\n00000\n11111\n"))
        self.assertEqual(code, ExitCode.OK)
        degeneracy = report['results']['degeneracy']
        self.assertEqual(degeneracy['verdict'], 'nondegenerate')
        self.assertEqual(degeneracy['distance']['status'], 'exact')
        self.assertEqual(degeneracy['distance']['value'], 3)
        self.assertEqual(degeneracy['diag_distance']['value'], 3)
        self.assertIsNone(report['results']['necessary_conditions_check'])

    def test_single_word_flagged(self):
        report, code = run('classify', self.code_file("Dhc\n00000\n"))
        self.assertEqual(code, ExitCode.OK)
        self.assertTrue(report['results']['degeneracy']['single_word'])
        self.assertTrue(report['results']['necessary_conditions_check']['passed'])

    def test_unresolved_with_small_budget(self):
        report, _ = run('classify', self.code_file("Dhc\n00000\n"), max_weight=1)
        self.assertEqual(report['results']['degeneracy']['verdict'], 'unresolved')

    def test_malformed_file(self):
        _, code = run('classify', self.code_file("Dhc\n0000x\n"))
        self.assertEqual(code, ExitCode.PARSE_ERROR)

    def test_missing_file(self):
        _, code = run('classify', str(Path(self.tmp.name) / 'absent.txt'))
        self.assertEqual(code, ExitCode.PARSE_ERROR)


class SearchCommandTestCase(SimpleTestCase):
    """search"""

    def test_c5_distance_two(self):
        report, code = run('search', graph6='Dhc', d=2, mode='exact')
        self.assertEqual(code, ExitCode.OK)
        search = report['results']['search']
        self.assertEqual(search['size'], 6)
        self.assertEqual(search['words'][0], '00000')
        self.assertGreaterEqual(search['verified_d']['value'], 2)

    def test_beyond_diagonal_distance(self):
        _, code = run('search', graph6='Dhc', d=4)
        self.assertEqual(code, ExitCode.FAILURE)

    def test_random_seed_is_echoed(self):
        report, _ = run('search', gen='cycle', n=5, d=2, mode='greedy', seed='random')
        seed = report['inputs']['seed']
        self.assertIsInstance(seed, int)
        self.assertIn(str(seed), report['command'])

    def test_falsification_is_reported(self):
        counterexample = {'n': 5, 'graph6': 'Dhc', 'd': 2, 'words': ['00000'], 'witness': 'XIIII'}
        with patch(
            'reports.management.commands.search.search_code',
            side_effect=FalsificationError('search soundness', counterexample),
        ):
            report, code = run('search', graph6='Dhc', d=2)
        self.assertEqual(code, ExitCode.FALSIFICATION)
        falsification = report['results']['falsification']
        self.assertEqual(falsification['property'], 'search soundness')
        self.assertEqual(falsification['counterexample']['graph6'], 'Dhc')


class VerifyCommandTestCase(SimpleTestCase):
    """verify"""

    def test_named_values(self):
        report, code = run('verify', suite=['named-values'])
        self.assertEqual(code, ExitCode.OK)
        (suite,) = report['results']['suites']
        self.assertEqual(suite['status'], 'pass')
        self.assertEqual(suite['passed'], 5)

    def test_small_corpus_suites(self):
        report, code = run(
            'verify', suite=['theorem-a', 'end-cor', 'main-lemma', 'graph6'], max_n=6, samples=10
        )
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual([s['name'] for s in report['results']['suites']], ['theorem-a', 'end-cor', 'main-lemma', 'graph6'])
        self.assertTrue(all(s['status'] == 'pass' for s in report['results']['suites']))

    def test_unknown_suite(self):
        _, code = run('verify', suite=['no-such-suite'])
        self.assertEqual(code, ExitCode.PARSE_ERROR)

    def test_falsification_dump(self):
        with patch.object(NamedValuesSuite, 'check', return_value={'forced': True}):
            report, code = run('verify', suite=['named-values'])
        self.assertEqual(code, ExitCode.FALSIFICATION)
        (suite,) = report['results']['suites']
        self.assertEqual(suite['status'], 'fail')
        self.assertEqual(suite['falsifications'][1]['graph6'], 'Dhc')
        self.assertEqual(suite['falsifications'][1]['detail'], {'forced': True})

    def test_budget_exhaustion(self):
        with patch.object(NamedValuesSuite, 'check', side_effect=BudgetExceededError('oracle_max_n', 1, 5)):
            report, code = run('verify', suite=['named-values'])
        self.assertEqual(code, ExitCode.BUDGET_EXHAUSTED)
        self.assertEqual(report['results']['suites'][0]['status'], 'budget-exhausted')


class GraphInputTestCase(SimpleTestCase):
    """Generator options"""

    def test_generator_parameters_required(self):
        _, code = run('diag', gen='complete-bipartite', a=2)
        self.assertEqual(code, ExitCode.PARSE_ERROR)

    def test_two_sources_rejected(self):
        _, code = run('diag', graph6='Dhc', gen='petersen')
        self.assertEqual(code, ExitCode.PARSE_ERROR)

    def test_generated_graph_matches_library(self):
        report, _ = run('diag', gen='complete', n=4)
        self.assertEqual(report['results']['graph']['edge_count'], complete(4).edge_count)
        report, _ = run('diag', gen='cycle', n=5)
        self.assertEqual(report['results']['graph']['graph6'], 'Dhc')
        self.assertEqual(report['results']['graph']['n'], cycle(5).n)
