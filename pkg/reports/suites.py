"""
Reports - Property Suites

Each suite checks one structural property on every case of a seeded corpus.
A failed case is a falsification and is dumped with the graph6 string and the
full witness so it can be replayed alone. A case that runs out of budget is
recorded separately and never counts as a falsification.

Suites follow the validator-chain shape: a common base class, one subclass
per property and a registry in run order.
"""
import json
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional

from django.conf import settings

from core.exceptions import BudgetExceededError, FalsificationError
from cws.codes import ClassicalCode, CwsCode
from cws.services import DegeneracyVerdict, DistanceStatus, degeneracy_classify, distance
from cws.validators import check_necessary_conditions
from diagdist.services import diagonal_distance, oracle_diagonal_distance, theorem_a_value
from graphs.generators import complete, cycle, petersen, projective_plane_incidence
from graphs.graph6 import from_graph6, graph6_or_none, to_graph6
from graphs.models import Graph
from search.clique import CliqueMode
from search.services import construct_sqrt_family, search_code
from structure.certificates import end_cor_certificate, verify_certificate
from structure.columns import ColumnSystem
from structure.gamma import classify_gamma, corollary_violations, enumerate_zero_sum_subsets, main_lemma_violations

from .corpus import CwsInstance, exhaustive_c4_free_corpus, random_c4_free_corpus, random_cws_instances
from .serializers import GammaClassificationSerializer

logger = logging.getLogger(__name__)


class SuiteStatus:
    PASS = "pass"
    FAIL = "fail"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SuiteCase:
    label: str
    graph: Graph
    payload: Any = None


@dataclass(frozen=True)
class Counterexample:
    case: str
    graph6: Optional[str]
    detail: Dict[str, Any]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    passed: int = 0
    falsifications: List[Counterexample] = field(default_factory=list)
    budget_exhausted: List[Counterexample] = field(default_factory=list)
    tallies: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        if self.falsifications:
            return SuiteStatus.FAIL
        if self.budget_exhausted:
            return SuiteStatus.BUDGET_EXHAUSTED
        return SuiteStatus.PASS


class SuiteContext:
    """Corpus parameters shared by every suite of one verify run; corpora are built once."""

    def __init__(self, max_n: int, samples: int, seed: int):
        self.max_n = max_n
        self.samples = samples
        self.seed = seed

    @cached_property
    def exhaustive_graphs(self) -> List[Graph]:
        return exhaustive_c4_free_corpus(self.max_n)

    @cached_property
    def random_graphs(self) -> List[Graph]:
        return random_c4_free_corpus(self.samples, self.seed)

    def c4_free_cases(self) -> List[SuiteCase]:
        cases = [SuiteCase(f"exhaustive/{i}", g) for i, g in enumerate(self.exhaustive_graphs)]
        cases.extend(SuiteCase(f"random/{i}", g) for i, g in enumerate(self.random_graphs))
        return cases

    def cws_instances(self) -> Iterable[CwsInstance]:
        return random_cws_instances(4 * self.samples, self.seed, max_n=settings.CWS_CODE_CORPUS_MAX_N)


class PropertySuite(ABC):
    """Base class for a property checked case by case."""

    name = ""

    @abstractmethod
    def cases(self, context: SuiteContext) -> Iterable[SuiteCase]:
        pass

    @abstractmethod
    def check(self, case: SuiteCase) -> Optional[Dict[str, Any]]:
        """None when the property holds, otherwise the counterexample detail."""
        pass

    def tally(self, case: SuiteCase) -> Iterable[str]:
        """Counters to bump for a passing case."""
        return ()

    def run(self, context: SuiteContext) -> SuiteResult:
        started = time.monotonic()
        result = SuiteResult(self.name)
        for case in self.cases(context):
            result.cases += 1
            try:
                failure = self.check(case)
            except BudgetExceededError as exc:
                result.budget_exhausted.append(
                    Counterexample(case.label, graph6_or_none(case.graph), {'budget': exc.budget, 'limit': exc.limit})
                )
                continue
            except FalsificationError as exc:
                failure = {'property': exc.property_name, **exc.counterexample}
            if failure is None:
                result.passed += 1
                for key in self.tally(case):
                    result.tallies[key] = result.tallies.get(key, 0) + 1
                continue
            counterexample = Counterexample(case.label, graph6_or_none(case.graph), failure)
            result.falsifications.append(counterexample)
            logger.error(
                f"SUITE_FALSIFIED: {json.dumps({'suite': self.name, 'case': case.label, 'graph6': counterexample.graph6, 'detail': failure}, default=str)}"
            )
        result.elapsed = time.monotonic() - started
        logger.info(
            f"SUITE_FINISHED: {json.dumps({'suite': self.name, 'status': result.status, 'cases': result.cases, 'passed': result.passed})}"
        )
        return result


def _witness_detail(result) -> Dict[str, Any]:
    return {
        'value': result.value,
        'witness_u': str(result.witness_u),
        'witness_pauli': result.witness_pauli.to_label(),
        'method': result.method,
    }


class TheoremASuite(PropertySuite):
    """Δ′ ∈ {δ, δ+1} for 4-cycle-free graphs with δ >= 2."""

    name = "theorem-a"

    def cases(self, context):
        return context.c4_free_cases()

    def check(self, case):
        delta = case.graph.min_degree
        oracle = oracle_diagonal_distance(case.graph)
        if oracle.value in (delta, delta + 1):
            return None
        return {'delta': delta, **_witness_detail(oracle)}


class EndCorSuite(PropertySuite):
    """A V′ certificate exists iff Δ′ = δ, and every certificate found re-verifies."""

    name = "end-cor"

    def cases(self, context):
        return context.c4_free_cases()

    def check(self, case):
        delta = case.graph.min_degree
        oracle = oracle_diagonal_distance(case.graph)
        certificate = end_cor_certificate(case.graph)
        if (certificate is not None) != (oracle.value == delta):
            return {
                'delta': delta,
                'certificate_found': certificate is not None,
                **_witness_detail(oracle),
            }
        if certificate is not None:
            violations = verify_certificate(case.graph, certificate)
            if violations:
                return {'delta': delta, 'v_prime': list(certificate.v_prime), 'violations': violations}
        return None


class FastPathSuite(PropertySuite):
    """Fast path, pruned exact search and oracle agree."""

    name = "fast-path"

    def cases(self, context):
        return context.c4_free_cases()

    def check(self, case):
        fast = theorem_a_value(case.graph)
        exact = diagonal_distance(case.graph)
        oracle = oracle_diagonal_distance(case.graph)
        if fast.value == exact.value == oracle.value:
            return None
        return {'fast_path': fast.value, 'exact_search': exact.value, 'oracle': _witness_detail(oracle)}


class NamedValuesSuite(PropertySuite):
    """Oracle values of small named graphs."""

    name = "named-values"

    def cases(self, context):
        return [
            SuiteCase("K3", complete(3), 2),
            SuiteCase("C5", cycle(5), 3),
            SuiteCase("K4", complete(4), 2),
            SuiteCase("Petersen", petersen(), 4),
            SuiteCase("Heawood", projective_plane_incidence(2), 4),
        ]

    def check(self, case):
        oracle = oracle_diagonal_distance(case.graph)
        if oracle.value == case.payload:
            return None
        return {'expected': case.payload, **_witness_detail(oracle)}


class MainLemmaSuite(PropertySuite):
    """
    Every zero-sum column subset of (I|A) of size <= 2δ+1 meets one of the
    five conditions, none is smaller than δ+1, and every size-(δ+1) subset is
    condition C or δ+1 columns of weight exactly δ.
    """

    name = "main-lemma"

    def cases(self, context):
        return [SuiteCase(f"exhaustive/{i}", g) for i, g in enumerate(context.exhaustive_graphs)]

    def check(self, case):
        delta = case.graph.min_degree
        system = ColumnSystem.from_graph(case.graph)
        subsets = list(enumerate_zero_sum_subsets(system, 2 * delta + 1))
        unclassified = main_lemma_violations(system, subsets, delta)
        corollary = corollary_violations(system, subsets, delta)
        if not unclassified and not corollary:
            return None
        flagged = [tuple(v['gamma']) for v in unclassified + corollary]
        return {
            'delta': delta,
            'unclassified': unclassified,
            'corollary': corollary,
            'classifications': GammaClassificationSerializer(
                [classify_gamma(system, gamma, delta) for gamma in dict.fromkeys(flagged)], many=True
            ).data,
        }


class HalfDeltaSuite(PropertySuite):
    """Δ′ > δ/2."""

    name = "half-delta"

    def cases(self, context):
        return context.c4_free_cases()

    def check(self, case):
        oracle = oracle_diagonal_distance(case.graph)
        if 2 * oracle.value > case.graph.min_degree:
            return None
        return {'delta': case.graph.min_degree, **_witness_detail(oracle)}


class TheoremBSuite(PropertySuite):
    """
    Every degenerate code has a short cycle or classically degenerate
    coordinates, and with girth >= 5 every minimum-degree vertex is such a
    coordinate. Constructed instances must come out degenerate, and a corpus
    of `floor_cases` or more instances must hold at least one of them.
    """

    name = "theorem-b"
    floor_cases = 100

    def cases(self, context):
        for i, instance in enumerate(context.cws_instances()):
            prefix = "constructed" if instance.constructed else "cws"
            yield SuiteCase(f"{prefix}/{i}", instance.cws.graph, instance)

    def check(self, case):
        instance: CwsInstance = case.payload
        cws = instance.cws
        report = degeneracy_classify(cws)
        detail = {
            'words': [str(w) for w in cws.code.words],
            'diag_distance': report.diag_distance.value,
            'distance': str(report.distance),
        }
        if report.verdict != DegeneracyVerdict.DEGENERATE:
            if instance.constructed:
                return {**detail, 'expected': DegeneracyVerdict.DEGENERATE, 'verdict': report.verdict}
            return None
        result = check_necessary_conditions(cws, report)
        if result.passed:
            return None
        return {**detail, 'failures': [{'check': c.name, 'detail': c.detail} for c in result.failures]}

    def tally(self, case):
        instance: CwsInstance = case.payload
        if not any(word.is_zero() for word in instance.cws.code.words):
            yield "without_zero_word"
        if instance.constructed:
            yield "constructed_degenerate"
            girth = case.graph.girth()
            if girth is None or girth >= 5:
                yield "constructed_degenerate_girth_5"

    def run(self, context):
        result = super().run(context)
        if result.cases >= self.floor_cases and not result.tallies.get("constructed_degenerate"):
            result.falsifications.append(
                Counterexample("corpus", None, {'reason': f"no degenerate instance among {result.cases} codes"})
            )
            logger.error(f"SUITE_FALSIFIED: {json.dumps({'suite': self.name, 'case': 'corpus', 'cases': result.cases})}")
        return result


class Graph6Suite(PropertySuite):
    """Byte-exact graph6 round trip."""

    name = "graph6"

    def cases(self, context):
        cases = [SuiteCase("C5", cycle(5), "Dhc")]
        cases.extend(context.c4_free_cases())
        return cases

    def check(self, case):
        text = to_graph6(case.graph)
        if case.payload is not None and text != case.payload:
            return {'expected': case.payload, 'encoded': text}
        decoded = from_graph6(text)
        if decoded != case.graph or to_graph6(decoded) != text:
            return {'encoded': text, 'decoded_edges': decoded.edges()}
        return None


class FiveQubitSuite(PropertySuite):
    """(C5, {00000, 11111}) has distance exactly 3 = Δ′ and is nondegenerate."""

    name = "five-qubit"

    def cases(self, context):
        code = ClassicalCode.from_strings(["00000", "11111"])
        return [SuiteCase("five-qubit", cycle(5), CwsCode(cycle(5), code))]

    def check(self, case):
        report = degeneracy_classify(case.payload, max_weight=5)
        if (
            report.distance.status == DistanceStatus.EXACT
            and report.distance.value == 3
            and report.diag_distance.value == 3
            and report.verdict == DegeneracyVerdict.NONDEGENERATE
        ):
            return None
        return {'distance': str(report.distance), 'diag_distance': report.diag_distance.value, 'verdict': report.verdict}


class SearchSuite(PropertySuite):
    """Exact search on C5: K = 6 at d = 2 and K = 2 at d = 3, each re-verified by full enumeration."""

    name = "search"

    def cases(self, context):
        return [SuiteCase("C5/d=2", cycle(5), (2, 6)), SuiteCase("C5/d=3", cycle(5), (3, 2))]

    def check(self, case):
        d, expected = case.payload
        result = search_code(case.graph, d, CliqueMode.EXACT)
        full = distance(result.cws_code())
        if result.size == expected and full.value >= d:
            return None
        return {'d': d, 'expected_size': expected, 'words': [str(w) for w in result.words], 'distance': str(full)}


class SqrtFamilySuite(PropertySuite):
    """The PG(2, 2) family with the repetition code detects every error of weight <= δ."""

    name = "sqrt-family"

    def cases(self, context):
        code = ClassicalCode.from_strings(["0" * 14, "1" * 14])
        return [SuiteCase("pg(2,2)/repetition", projective_plane_incidence(2), code)]

    def check(self, case):
        construction = construct_sqrt_family(2, case.payload)
        result = distance(construction.cws, max_weight=construction.delta)
        if result.value >= construction.certified_distance:
            return None
        return {
            'certified_distance': construction.certified_distance,
            'distance': str(result),
            'witness': result.witness.to_label() if result.witness else None,
        }


SUITES: Dict[str, PropertySuite] = {
    suite.name: suite
    for suite in (
        NamedValuesSuite(),
        TheoremASuite(),
        EndCorSuite(),
        FastPathSuite(),
        HalfDeltaSuite(),
        MainLemmaSuite(),
        TheoremBSuite(),
        Graph6Suite(),
        FiveQubitSuite(),
        SearchSuite(),
        SqrtFamilySuite(),
    )
}


def run_suites(names: Iterable[str], context: SuiteContext) -> List[SuiteResult]:
    return [SUITES[name].run(context) for name in names]
