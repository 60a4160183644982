"""
CWS Tests - classical codes, detection, distance, degeneracy and necessary conditions
"""
import dataclasses
import random

from django.test import SimpleTestCase, override_settings

from core.exceptions import ContractError, DomainError, InconsistentReportError, ParseError, UndefinedDistanceError
from cws.codes import (
    ClassicalCode,
    CwsCode,
    classical_degenerate_components,
    classical_distance,
    format_cws_code,
    parse_cws_code,
)
from cws.constructions import construct_degenerate_family
from cws.services import (
    DegeneracyVerdict,
    DetectionReason,
    DifferenceSet,
    DistanceStatus,
    degeneracy_classify,
    detects_error,
    distance,
)
from cws.validators import check_necessary_conditions
from gf2.vectors import BitMatrix, BitVector
from graphs.generators import complete, cycle, petersen, projective_plane_incidence
from graphs.models import Graph
from pauli.operators import PauliVector, enumerate_by_weight


def code(*words: str) -> ClassicalCode:
    return ClassicalCode.from_strings(words)


def five_qubit_code() -> CwsCode:
    return CwsCode(cycle(5), code("00000", "11111"))


def heawood_minus_edge() -> Graph:
    heawood = projective_plane_incidence(2)
    i, j = heawood.edges()[0]
    return heawood.remove_edge(i, j)


class ClassicalCodeTestCase(SimpleTestCase):
    """Distance and degenerate coordinates"""

    def test_distance(self):
        self.assertEqual(classical_distance(code("00000", "11111")), 5)
        self.assertEqual(classical_distance(ClassicalCode.linear(BitMatrix.from_strings(["110", "011"]))), 2)
        self.assertEqual(classical_distance(code("000", "001", "010")), 1)

    def test_distance_undefined(self):
        with self.assertRaises(UndefinedDistanceError):
            classical_distance(code("0000"))

    def test_degenerate_components(self):
        self.assertEqual(classical_degenerate_components(code("000", "011")), [0])
        self.assertEqual(classical_degenerate_components(code("00000", "11111")), [])
        self.assertEqual(classical_degenerate_components(code("0000")), [0, 1, 2, 3])

    def test_linear_expansion(self):
        linear = ClassicalCode.linear(BitMatrix.from_strings(["110", "011", "101"]))
        self.assertEqual(linear.size, 4)
        self.assertEqual(len(set(linear.words)), 4)

    def test_duplicate_words_rejected(self):
        with self.assertRaises(ValueError):
            code("010", "010")


class CodeFormatTestCase(SimpleTestCase):
    """CWS code text format"""

    def test_parse(self):
        cws = parse_cws_code("# five qubit code\nDhc\n00000\n11111\n")
        self.assertEqual(cws.graph, cycle(5))
        self.assertEqual(cws.code.size, 2)

    def test_round_trip(self):
        cws = five_qubit_code()
        self.assertEqual(parse_cws_code(format_cws_code(cws)), cws)
        linear = CwsCode(cycle(5), ClassicalCode.linear(BitMatrix.from_strings(["11000", "00110"])))
        self.assertEqual(parse_cws_code(format_cws_code(linear)), linear)

    def test_malformed(self):
        for text in ("", "Dhc\n", "Dhc\n0000\n", "Dhc\n0010x\n", "Dhc\n00000\n00000\n", "D\n00000\n"):
            with self.assertRaises(ParseError, msg=text):
                parse_cws_code(text)


class DetectionTestCase(SimpleTestCase):
    """Error detection clauses"""

    def test_z_error_detected(self):
        result = detects_error(five_qubit_code(), PauliVector.single(5, 0, 'Z'))
        self.assertTrue(result.detected)
        self.assertEqual(result.cls_image, BitVector.unit(5, 0))

    def test_low_weight_errors_detected(self):
        cws = five_qubit_code()
        errors = list(enumerate_by_weight(5, 1)) + list(enumerate_by_weight(5, 2))
        self.assertEqual(len(errors), 105)
        for error in errors:
            self.assertTrue(detects_error(cws, error).detected, error.to_label())

    def test_zero_image_commuting_error(self):
        cws = CwsCode(complete(3), code("000", "111"))
        error = PauliVector(BitVector.from_string("110"), BitVector.from_string("110"))
        result = detects_error(cws, error)
        self.assertTrue(result.cls_image.is_zero())
        self.assertTrue(result.detected)

    def test_zero_image_anticommuting_error(self):
        cws = CwsCode(complete(3), code("000", "100"))
        error = PauliVector(BitVector.from_string("011"), BitVector.from_string("100"))
        result = detects_error(cws, error)
        self.assertFalse(result.detected)
        self.assertEqual(result.reason, DetectionReason.ZERO_IMAGE_ANTICOMMUTES)

    def test_difference_hit(self):
        cws = CwsCode(cycle(5), code("00000", "00001"))
        result = detects_error(cws, PauliVector.single(5, 4, 'Z'))
        self.assertEqual(result.reason, DetectionReason.DIFFERENCE_HIT)

    def test_identity_rejected(self):
        with self.assertRaises(ContractError):
            detects_error(five_qubit_code(), PauliVector.identity(5))

    def test_difference_set_modes_agree(self):
        rng = random.Random(4)
        words = list({rng.getrandbits(8) for _ in range(12)})
        full = DifferenceSet(words)
        lookup = DifferenceSet(words, max_pairs=0)
        self.assertTrue(full.materialised)
        self.assertFalse(lookup.materialised)
        for s in range(256):
            self.assertEqual(s in full, s in lookup)


class DistanceTestCase(SimpleTestCase):
    """Distance search"""

    def test_five_qubit_code(self):
        result = distance(five_qubit_code(), 5)
        self.assertEqual(result.status, DistanceStatus.EXACT)
        self.assertEqual(result.value, 3)
        self.assertFalse(detects_error(five_qubit_code(), result.witness).detected)

    def test_single_zero_word(self):
        result = distance(CwsCode(complete(3), code("000")), 3)
        self.assertEqual(result.status, DistanceStatus.LOWER_BOUND)
        self.assertEqual(result.value, 4)

    def test_distance_one(self):
        result = distance(CwsCode(cycle(5), code("00000", "00001")))
        self.assertEqual(str(result), "exact(1)")
        self.assertEqual(result.witness.to_label(), "IIIIZ")

    def test_budget_above_n(self):
        with self.assertRaises(DomainError):
            distance(five_qubit_code(), 6)

    def test_lighter_errors_detected(self):
        rng = random.Random(9)
        for _ in range(10):
            n = rng.randint(3, 6)
            g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
            words = list({BitVector(n, rng.getrandbits(n)) for _ in range(3)})
            if len(words) < 2:
                continue
            cws = CwsCode(g, ClassicalCode.explicit(words))
            result = distance(cws)
            for w in range(1, min(result.value, n + 1)):
                for error in enumerate_by_weight(n, w):
                    self.assertTrue(detects_error(cws, error).detected)


class DegeneracyTestCase(SimpleTestCase):
    """Classification and necessary conditions"""

    def test_five_qubit_code_nondegenerate(self):
        report = degeneracy_classify(five_qubit_code())
        self.assertEqual(report.verdict, DegeneracyVerdict.NONDEGENERATE)
        self.assertEqual(report.distance.value, 3)
        self.assertEqual(report.diag_distance.value, 3)

    def test_k4_regression(self):
        report = degeneracy_classify(CwsCode(complete(4), code("0000", "1111")))
        self.assertEqual(report.diag_distance.value, 2)
        self.assertEqual(str(report.distance), "exact(1)")
        self.assertEqual(report.distance.witness.to_label(), "YIII")
        self.assertEqual(report.verdict, DegeneracyVerdict.NONDEGENERATE)

    def test_single_zero_word_flagged(self):
        report = degeneracy_classify(CwsCode(cycle(5), code("00000")))
        self.assertTrue(report.single_word)
        self.assertEqual(report.verdict, DegeneracyVerdict.DEGENERATE)

    def test_unresolved_with_small_budget(self):
        report = degeneracy_classify(CwsCode(cycle(5), code("00000")), max_weight=1)
        self.assertEqual(report.verdict, DegeneracyVerdict.UNRESOLVED)
        self.assertEqual(report.weight_budget, 1)

    @override_settings(CWS_DISTANCE_WEIGHT_CAP=5)
    def test_budget_floor_from_settings(self):
        report = degeneracy_classify(five_qubit_code())
        self.assertEqual(report.weight_budget, 5)

    def test_necessary_conditions_pass_on_degenerate_code(self):
        cws = CwsCode(complete(3), code("000"))
        report = degeneracy_classify(cws)
        result = check_necessary_conditions(cws, report)
        self.assertTrue(result.passed)

    def test_nondegenerate_report_rejected(self):
        cws = five_qubit_code()
        with self.assertRaises(ContractError):
            check_necessary_conditions(cws, degeneracy_classify(cws))

    def test_forged_report_rejected(self):
        cws = five_qubit_code()
        forged = dataclasses.replace(degeneracy_classify(cws), verdict=DegeneracyVerdict.DEGENERATE)
        with self.assertRaises(InconsistentReportError):
            check_necessary_conditions(cws, forged)

    def test_random_degenerate_instances_satisfy_conditions(self):
        rng = random.Random(1)
        for _ in range(60):
            n = rng.randint(3, 6)
            g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
            words = list({BitVector(n, rng.getrandbits(n) & rng.getrandbits(n)) for _ in range(rng.randint(2, 4))})
            if len(words) < 2:
                continue
            cws = CwsCode(g, ClassicalCode.explicit(words))
            report = degeneracy_classify(cws)
            if report.verdict == DegeneracyVerdict.DEGENERATE:
                self.assertTrue(check_necessary_conditions(cws, report).passed)


class ConstructionTestCase(SimpleTestCase):
    """Degenerate codes on girth >= 5 graphs"""

    def test_heawood_minus_edge_is_degenerate(self):
        cws = construct_degenerate_family(heawood_minus_edge())
        self.assertEqual(classical_degenerate_components(cws.code), list(cws.graph.min_degree_vertices()))
        report = degeneracy_classify(cws)
        self.assertEqual(report.diag_distance.value, 3)
        self.assertGreaterEqual(report.distance.value, 4)
        self.assertEqual(report.verdict, DegeneracyVerdict.DEGENERATE)
        self.assertTrue(check_necessary_conditions(cws, report).passed)

    def test_rejects_short_cycles(self):
        with self.assertRaises(DomainError):
            construct_degenerate_family(complete(4))

    def test_rejects_regular_graphs(self):
        # every vertex has minimum degree, so the second word would be zero
        with self.assertRaises(DomainError):
            construct_degenerate_family(petersen())
