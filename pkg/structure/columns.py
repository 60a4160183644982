"""
Column Systems

A collection S of equal-length binary columns, usually the 2n columns of
(I | A_G): identity columns e_0..e_{n-1} first, then adjacency columns
a_0..a_{n-1}.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from core.exceptions import DimensionError
from gf2.vectors import BitVector
from graphs.models import Graph


class ColumnOrigin:
    """Where a column of a system comes from."""
    IDENTITY = "identity"
    ADJACENCY = "adjacency"
    OTHER = "other"

    PREFIX = {IDENTITY: "e", ADJACENCY: "a", OTHER: "c"}


@dataclass(frozen=True)
class PropertyAResult:
    holds: bool
    violating_pair: Optional[Tuple[int, int]] = None
    shared_support: Tuple[int, ...] = ()


@dataclass(frozen=True)
class DegreeGap:
    """The degree gap δ, or None with the reason it is undefined."""
    value: Optional[int]
    reason: str = ""

    @property
    def defined(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class ColumnSystem:
    length: int
    columns: Tuple[BitVector, ...]
    origins: Tuple[str, ...]
    # vertex index each column was built from, -1 for free-standing columns
    sources: Tuple[int, ...]

    def __post_init__(self):
        if not len(self.columns) == len(self.origins) == len(self.sources):
            raise DimensionError("ColumnSystem", len(self.columns), (len(self.origins), len(self.sources)))
        for column in self.columns:
            if column.length != self.length:
                raise DimensionError("ColumnSystem column", self.length, column.length)

    @classmethod
    def from_graph(cls, graph: Graph) -> 'ColumnSystem':
        """Columns of (I | A_G)."""
        n = graph.n
        columns = tuple(BitVector.unit(n, j) for j in range(n)) + graph.adjacency
        origins = (ColumnOrigin.IDENTITY,) * n + (ColumnOrigin.ADJACENCY,) * n
        return cls(n, columns, origins, tuple(range(n)) * 2)

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector]) -> 'ColumnSystem':
        if not columns:
            raise DimensionError("ColumnSystem.from_columns", "at least one column", 0)
        length = columns[0].length
        origins = tuple(
            ColumnOrigin.IDENTITY if c.weight() == 1 else ColumnOrigin.OTHER for c in columns
        )
        return cls(length, tuple(columns), origins, (-1,) * len(columns))

    def __len__(self) -> int:
        return len(self.columns)

    def weight(self, index: int) -> int:
        return self.columns[index].weight()

    def label(self, index: int) -> str:
        origin = self.origins[index]
        source = self.sources[index] if self.sources[index] >= 0 else index
        return f"{ColumnOrigin.PREFIX[origin]}{source}"

    def subset_sum(self, indices: Sequence[int]) -> BitVector:
        bits = 0
        for index in indices:
            bits ^= self.columns[index].bits
        return BitVector(self.length, bits)


def property_a_check(system: ColumnSystem) -> PropertyAResult:
    """Every two distinct columns share at most one support coordinate."""
    columns = system.columns
    for i in range(len(columns)):
        for j in range(i + 1, len(columns)):
            shared = columns[i].bits & columns[j].bits
            if shared.bit_count() >= 2:
                return PropertyAResult(False, (i, j), BitVector(system.length, shared).support())
    return PropertyAResult(True)


def degree_gap(system: ColumnSystem, required: Optional[int] = None) -> DegreeGap:
    """
    The δ >= 2 with every column of weight 1 or >= δ and some column of weight
    exactly δ. Only the smallest weight above 1 can qualify.
    """
    weights = [column.weight() for column in system.columns]
    if any(w == 0 for w in weights):
        return DegreeGap(None, "system contains a zero column")
    heavy = [w for w in weights if w > 1]
    if not heavy:
        return DegreeGap(None, "no column has weight greater than 1")
    delta = min(heavy)
    if required is not None and delta != required:
        if delta < required:
            return DegreeGap(None, f"a column of weight {delta} violates the dichotomy for δ={required}")
        return DegreeGap(None, f"no column has weight exactly {required}")
    return DegreeGap(delta)
