"""
CWS Codes - Necessary-Condition Validators

Checks that a degenerate CWS code has what degeneracy requires: a cycle of
length 3 or 4 in the graph, or a classical code that is zero on some
coordinate. For graphs of girth at least 5 every minimum-degree vertex must
be such a coordinate.

Each rule is a single-responsibility validator; `NecessaryConditionChain`
runs them in order and aggregates the failures.
"""
import json
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional

from core.exceptions import ContractError, InconsistentReportError

from .codes import CwsCode
from .services import DegeneracyReport, DegeneracyVerdict, degeneracy_classify, necessary_conditions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of one validator."""
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class NecessaryConditionResult:
    passed: bool
    checks: List[ConditionCheck] = field(default_factory=list)

    @property
    def failures(self) -> List[ConditionCheck]:
        return [check for check in self.checks if not check.passed]


class NecessaryConditionValidator(ABC):
    """Base class for degeneracy validators."""

    name = ""

    @abstractmethod
    def validate(self, cws: CwsCode, report: DegeneracyReport) -> Optional[ConditionCheck]:
        """Return a check record, or None when the rule does not apply."""


class ReportConsistencyValidator(NecessaryConditionValidator):
    """The report must match a fresh classification of the same code."""

    name = "report_consistency"

    def validate(self, cws: CwsCode, report: DegeneracyReport) -> Optional[ConditionCheck]:
        fresh = degeneracy_classify(cws, max_weight=report.weight_budget)
        if fresh.verdict != report.verdict:
            raise InconsistentReportError(report.verdict, fresh.verdict)
        if fresh.necessary_conditions != report.necessary_conditions:
            raise InconsistentReportError(
                f"{report.verdict} with {report.necessary_conditions}",
                f"{fresh.verdict} with {fresh.necessary_conditions}",
            )
        return ConditionCheck(self.name, True)


class ShortCycleOrClassicalDegeneracyValidator(NecessaryConditionValidator):
    """girth <= 4, or some coordinate is zero in every codeword."""

    name = "short_cycle_or_classically_degenerate"

    def validate(self, cws: CwsCode, report: DegeneracyReport) -> Optional[ConditionCheck]:
        conditions = necessary_conditions(cws)
        passed = conditions.has_short_cycle or conditions.classically_degenerate
        detail = "" if passed else "graph has girth >= 5 and every coordinate is used by some codeword"
        return ConditionCheck(self.name, passed, detail)


class MinDegreeCoverageValidator(NecessaryConditionValidator):
    """With girth >= 5, every minimum-degree vertex is a zero coordinate of C."""

    name = "min_degree_coordinates_degenerate"

    def validate(self, cws: CwsCode, report: DegeneracyReport) -> Optional[ConditionCheck]:
        conditions = necessary_conditions(cws)
        if conditions.has_short_cycle:
            return None
        zero = set(conditions.degenerate_components)
        missing = [v for v in cws.graph.min_degree_vertices() if v not in zero]
        detail = f"minimum-degree vertices {missing} carry codeword support" if missing else ""
        return ConditionCheck(self.name, not missing, detail)


class NecessaryConditionChain:
    """Runs the validators in order and aggregates their checks."""

    def __init__(self, validators: Optional[List[NecessaryConditionValidator]] = None):
        self.validators = validators or self._default_validators()

    def _default_validators(self) -> List[NecessaryConditionValidator]:
        return [
            ReportConsistencyValidator(),
            ShortCycleOrClassicalDegeneracyValidator(),
            MinDegreeCoverageValidator(),
        ]

    def validate(self, cws: CwsCode, report: DegeneracyReport) -> NecessaryConditionResult:
        checks = []
        for validator in self.validators:
            check = validator.validate(cws, report)
            if check is not None:
                checks.append(check)
        return NecessaryConditionResult(passed=all(c.passed for c in checks), checks=checks)


def check_necessary_conditions(
    cws: CwsCode,
    report: DegeneracyReport,
    chain: Optional[NecessaryConditionChain] = None,
) -> NecessaryConditionResult:
    """
    Validate a degenerate report against the necessary conditions.

    Raises ContractError when the report is not degenerate and
    InconsistentReportError when it does not match a recomputation.
    """
    if report.verdict != DegeneracyVerdict.DEGENERATE:
        raise ContractError(f"Necessary conditions apply to degenerate codes only, got '{report.verdict}'")
    result = (chain or NecessaryConditionChain()).validate(cws, report)
    if not result.passed:
        failures = [{'check': c.name, 'detail': c.detail} for c in result.failures]
        logger.error(f"NECESSARY_CONDITION_FAILED: {json.dumps(failures)}")
    return result
