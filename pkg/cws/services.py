"""
CWS Codes - Services

Error detection, distance search and degeneracy classification.

An error E is detected by (G, C) iff both
  (i)  Cl_S(E) is not a codeword difference c_i xor c_j (i != j), and
  (ii) Cl_S(E) != 0, or Z(c) commutes with E for every codeword c.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence

from django.conf import settings

from core.exceptions import ContractError, DimensionError, DomainError
from diagdist.services import DiagDistanceResult, cls_bits, diagonal_distance
from gf2.vectors import BitVector
from pauli.operators import PauliVector, count_by_weight, iter_weight_bits

from .codes import CwsCode, classical_degenerate_components

logger = logging.getLogger(__name__)


class DetectionReason:
    DETECTED = "detected"
    DIFFERENCE_HIT = "image equals a codeword difference"
    ZERO_IMAGE_ANTICOMMUTES = "image is zero and E anticommutes with some word operator"


class DistanceStatus:
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


class DegeneracyVerdict:
    DEGENERATE = "degenerate"
    NONDEGENERATE = "nondegenerate"
    UNRESOLVED = "unresolved"


class DifferenceSet:
    """
    Membership in {c_i xor c_j : i != j}.

    Materialised as a set when K^2 fits under the configured cap; otherwise
    s is tested by looking up c xor s in the word set for every word c.
    """

    def __init__(self, words: Sequence[int], max_pairs: Optional[int] = None):
        cap = settings.CWS_DIFFERENCE_SET_MAX_PAIRS if max_pairs is None else max_pairs
        self.words = list(words)
        self.word_set: FrozenSet[int] = frozenset(self.words)
        self.materialised = len(self.words) ** 2 <= cap
        self.differences: FrozenSet[int] = frozenset()
        if self.materialised:
            self.differences = frozenset(
                a ^ b for i, a in enumerate(self.words) for b in self.words[i + 1:]
            )

    def __contains__(self, s: int) -> bool:
        if self.materialised:
            return s in self.differences
        if s == 0:
            return False
        return any((c ^ s) in self.word_set for c in self.words)


@dataclass(frozen=True)
class DetectionResult:
    detected: bool
    reason: str
    cls_image: BitVector


@dataclass(frozen=True)
class DistanceResult:
    """
    exact(d): a weight-d error is undetected and all lighter errors are
    detected. lower_bound(w): every error of weight < w is detected.
    """
    status: str
    value: int
    searched_weight: int
    errors_checked: int
    witness: Optional[PauliVector] = None

    @property
    def is_exact(self) -> bool:
        return self.status == DistanceStatus.EXACT

    def __str__(self) -> str:
        return f"{self.status}({self.value})"


@dataclass(frozen=True)
class NecessaryConditions:
    has_short_cycle: bool
    classically_degenerate: bool
    degenerate_components: List[int]


@dataclass(frozen=True)
class DegeneracyReport:
    verdict: str
    diag_distance: DiagDistanceResult
    distance: DistanceResult
    necessary_conditions: NecessaryConditions
    weight_budget: int
    single_word: bool


class _Detector:
    """Packed-integer detection for one code, reused across many errors."""

    def __init__(self, cws: CwsCode):
        self.rows = cws.graph.rows
        self.words = [w.bits for w in cws.code.words]
        self.differences = DifferenceSet(self.words)

    def check(self, z_bits: int, x_bits: int):
        image = cls_bits(self.rows, z_bits, x_bits)
        if image in self.differences:
            return image, DetectionReason.DIFFERENCE_HIT
        if image == 0 and any((c & x_bits).bit_count() & 1 for c in self.words):
            return image, DetectionReason.ZERO_IMAGE_ANTICOMMUTES
        return image, DetectionReason.DETECTED


def detects_error(cws: CwsCode, error: PauliVector) -> DetectionResult:
    """Whether (G, C) detects E, with the clause that failed when it does not."""
    if error.n != cws.n:
        raise DimensionError("detects_error", cws.n, error.n)
    if error.is_identity():
        raise ContractError("detects_error is undefined for the identity error")
    image, reason = _Detector(cws).check(error.z_part.bits, error.x_part.bits)
    return DetectionResult(
        detected=reason == DetectionReason.DETECTED,
        reason=reason,
        cls_image=BitVector(cws.n, image),
    )


def distance(cws: CwsCode, max_weight: Optional[int] = None) -> DistanceResult:
    """
    First weight with an undetected error, searching errors in canonical
    order up to `max_weight` (default n).
    """
    n = cws.n
    if max_weight is None:
        max_weight = n
    if not 0 <= max_weight <= n:
        raise DomainError("max_weight <= n", f"max_weight={max_weight}, n={n}")

    detector = _Detector(cws)
    checked = 0
    for w in range(1, max_weight + 1):
        for z_bits, x_bits in iter_weight_bits(n, w):
            checked += 1
            _, reason = detector.check(z_bits, x_bits)
            if reason != DetectionReason.DETECTED:
                logger.debug(f"distance: n={n} exact={w} checked={checked}")
                return DistanceResult(
                    status=DistanceStatus.EXACT,
                    value=w,
                    searched_weight=w,
                    errors_checked=checked,
                    witness=PauliVector.from_bits(n, z_bits, x_bits),
                )
        logger.debug(f"distance: n={n} weight {w} clear ({count_by_weight(n, w)} errors)")
    return DistanceResult(
        status=DistanceStatus.LOWER_BOUND,
        value=max_weight + 1,
        searched_weight=max_weight,
        errors_checked=checked,
    )


def necessary_conditions(cws: CwsCode) -> NecessaryConditions:
    girth = cws.graph.girth()
    components = classical_degenerate_components(cws.code)
    return NecessaryConditions(
        has_short_cycle=girth is not None and girth <= 4,
        classically_degenerate=bool(components),
        degenerate_components=components,
    )


def verdict_for(diag: int, result: DistanceResult) -> str:
    """Degenerate iff d > Δ′; a lower bound above Δ′ already settles it."""
    if result.is_exact:
        return DegeneracyVerdict.DEGENERATE if result.value > diag else DegeneracyVerdict.NONDEGENERATE
    if result.value > diag:
        return DegeneracyVerdict.DEGENERATE
    return DegeneracyVerdict.UNRESOLVED


def degeneracy_classify(cws: CwsCode, max_weight: Optional[int] = None) -> DegeneracyReport:
    """
    Compare the code distance against the diagonal distance.

    The distance search runs to max(Δ′+1, CWS_DISTANCE_WEIGHT_CAP) unless
    `max_weight` is given, clamped to n.
    """
    diag = diagonal_distance(cws.graph)
    if max_weight is None:
        budget = max(diag.value + 1, settings.CWS_DISTANCE_WEIGHT_CAP)
    else:
        budget = max_weight
    budget = min(budget, cws.n)
    result = distance(cws, budget)
    verdict = verdict_for(diag.value, result)
    report = DegeneracyReport(
        verdict=verdict,
        diag_distance=diag,
        distance=result,
        necessary_conditions=necessary_conditions(cws),
        weight_budget=budget,
        single_word=cws.code.size == 1,
    )
    logger.debug(f"degeneracy_classify: n={cws.n} verdict={verdict} diag={diag.value} distance={result}")
    return report
