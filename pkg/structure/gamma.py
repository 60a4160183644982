"""
Zero-Sum Column Subsets

Classification of a zero-sum subset Γ of a column system into the five
cases O, A.1, A.2, B and C, and a meet-in-the-middle enumerator of all
zero-sum subsets up to a given size.

With δ the degree gap, Γ_1 the weight-1 members and Γ_δ the members of
weight > 1:

- O:   Γ is empty
- A.1: |Γ_1| >= δ+1
- A.2: |Γ_δ| >= δ+1
- B:   |Γ| = 2δ with |Γ_1| = |Γ_δ| = δ
- C:   Γ is one weight-δ column together with the δ identity columns of its
       support
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from django.conf import settings

from core.exceptions import BudgetExceededError, ContractError, DimensionError, DomainError

from .columns import ColumnSystem, degree_gap

logger = logging.getLogger(__name__)


class GammaCondition:
    O = "O"  # noqa: E741
    A1 = "A.1"
    A2 = "A.2"
    B = "B"
    C = "C"

    ALL = (O, A1, A2, B, C)


@dataclass(frozen=True)
class GammaClassification:
    gamma: Tuple[int, ...]
    conditions: Tuple[str, ...]
    gamma1_size: int
    gamma_delta_size: int
    delta: int

    @property
    def is_classified(self) -> bool:
        return bool(self.conditions)


def _resolve_delta(system: ColumnSystem, delta: Optional[int]) -> int:
    if delta is not None:
        return delta
    gap = degree_gap(system)
    if not gap.defined:
        raise DomainError("column system has a degree gap", gap.reason)
    return gap.value


def classify_gamma(
    system: ColumnSystem, gamma: Iterable[int], delta: Optional[int] = None
) -> GammaClassification:
    """Every condition among O, A.1, A.2, B, C that holds for Γ."""
    members = tuple(sorted(set(gamma)))
    for index in members:
        if not 0 <= index < len(system):
            raise DimensionError("classify_gamma", f"column index in [0, {len(system)})", index)
    total = system.subset_sum(members)
    if not total.is_zero():
        raise ContractError(f"Γ = {list(members)} does not sum to zero (sum {total})")
    delta = _resolve_delta(system, delta)

    light = [i for i in members if system.weight(i) == 1]
    heavy = [i for i in members if system.weight(i) > 1]

    conditions = []
    if not members:
        conditions.append(GammaCondition.O)
    if len(light) >= delta + 1:
        conditions.append(GammaCondition.A1)
    if len(heavy) >= delta + 1:
        conditions.append(GammaCondition.A2)
    if len(members) == 2 * delta and len(light) == delta and len(heavy) == delta:
        conditions.append(GammaCondition.B)
    if len(heavy) == 1 and system.weight(heavy[0]) == delta and len(light) == delta:
        support = set(system.columns[heavy[0]].support())
        light_rows = {system.columns[i].support()[0] for i in light}
        if light_rows == support:
            conditions.append(GammaCondition.C)

    return GammaClassification(
        gamma=members,
        conditions=tuple(conditions),
        gamma1_size=len(light),
        gamma_delta_size=len(heavy),
        delta=delta,
    )


def _half_sums(
    indices: List[int], columns: List[int], max_size: int
) -> Dict[int, List[Tuple[int, ...]]]:
    """Sum -> subsets (as index tuples, up to max_size) of one half."""
    table: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)

    def walk(start: int, chosen: Tuple[int, ...], total: int) -> None:
        table[total].append(chosen)
        if len(chosen) == max_size:
            return
        for k in range(start, len(indices)):
            walk(k + 1, chosen + (indices[k],), total ^ columns[indices[k]])

    walk(0, (), 0)
    return table


def partial_count(columns: int, max_size: int) -> int:
    """Partial sums stored by the meet-in-the-middle split of `columns` columns."""
    left = columns // 2
    right = columns - left
    return sum(comb(left, k) + comb(right, k) for k in range(max_size + 1))


def enumerate_zero_sum_subsets(
    system: ColumnSystem,
    max_size: int,
    max_columns: Optional[int] = None,
    max_partials: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """
    Every nonempty subset of at most `max_size` columns summing to zero,
    ordered by size and then lexicographically.

    The columns are split in two halves; subsets of each half are bucketed by
    their sum and a zero-sum subset is a left and right subset with equal sums.
    Exceeding either budget raises BudgetExceededError before any output.
    """
    column_cap = settings.CWS_ZERO_SUM_MAX_COLUMNS if max_columns is None else max_columns
    partial_cap = settings.CWS_ZERO_SUM_MAX_PARTIALS if max_partials is None else max_partials
    m = len(system)
    if m > column_cap:
        raise BudgetExceededError("zero_sum_max_columns", column_cap, m)
    max_size = min(max_size, m)
    needed = partial_count(m, max_size)
    if needed > partial_cap:
        raise BudgetExceededError("zero_sum_max_partials", partial_cap, needed)

    bits = [column.bits for column in system.columns]
    left = list(range(m // 2))
    right = list(range(m // 2, m))
    left_table = _half_sums(left, bits, max_size)
    right_table = _half_sums(right, bits, max_size)

    found = []
    for total, right_subsets in right_table.items():
        left_subsets = left_table.get(total)
        if not left_subsets:
            continue
        for r in right_subsets:
            for lft in left_subsets:
                if len(lft) + len(r) > max_size or not (lft or r):
                    continue
                found.append(lft + r)
    found.sort(key=lambda s: (len(s), s))
    logger.debug(f"enumerate_zero_sum_subsets: columns={m} max_size={max_size} found={len(found)}")
    return iter(found)


def corollary_violations(
    system: ColumnSystem, subsets: Iterable[Tuple[int, ...]], delta: Optional[int] = None
) -> List[dict]:
    """
    Zero-sum subsets contradicting the minimum-size corollary: anything
    smaller than δ+1, and any size-(δ+1) subset that is neither condition C
    nor δ+1 columns of weight exactly δ.
    """
    delta = _resolve_delta(system, delta)
    violations = []
    for subset in subsets:
        labels = [system.label(i) for i in subset]
        if len(subset) < delta + 1:
            violations.append({
                'gamma': list(subset),
                'labels': labels,
                'reason': f"size {len(subset)} < δ+1 = {delta + 1}",
            })
        elif len(subset) == delta + 1:
            classification = classify_gamma(system, subset, delta)
            uniform = all(system.weight(i) == delta for i in subset)
            if GammaCondition.C not in classification.conditions and not uniform:
                violations.append({
                    'gamma': list(subset),
                    'labels': labels,
                    'weights': [system.weight(i) for i in subset],
                    'reason': "size δ+1 but neither condition C nor all of weight δ",
                })
    return violations


def main_lemma_violations(
    system: ColumnSystem, subsets: Iterable[Tuple[int, ...]], delta: Optional[int] = None
) -> List[dict]:
    """Zero-sum subsets that satisfy none of the five conditions."""
    delta = _resolve_delta(system, delta)
    violations = []
    for subset in subsets:
        classification = classify_gamma(system, subset, delta)
        if not classification.is_classified:
            violations.append({
                'gamma': list(subset),
                'labels': [system.label(i) for i in subset],
                'sizes': [classification.gamma1_size, classification.gamma_delta_size],
            })
    return violations
