"""
CWS Codes - Domain Types

Classical codes (an explicit word list or a linear generator) and CWS codes,
the pair of a graph and a classical code on its vertices. The standard-form
stabilizer generators S_i = X(e_i)Z(r_i) are always derived from the graph.

Text format for a CWS code: the graph in graph6 on the first line, then one
codeword bitstring per line. A line `linear` switches the remaining lines to
generator rows. Blank lines and lines starting with '#' are ignored.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from core.exceptions import DimensionError, ParseError, UndefinedDistanceError
from gf2.linalg import rank, row_space
from gf2.vectors import BitMatrix, BitVector
from graphs.graph6 import from_graph6, to_graph6
from graphs.models import Graph

logger = logging.getLogger(__name__)


class CodeProvenance:
    EXPLICIT = "explicit"
    LINEAR = "linear"


@dataclass(frozen=True)
class ClassicalCode:
    """A binary code of length n: explicit distinct words or a linear span."""
    length: int
    provenance: str
    explicit_words: Tuple[BitVector, ...] = ()
    generator: Optional[BitMatrix] = None

    def __post_init__(self):
        if self.provenance == CodeProvenance.LINEAR:
            if self.generator is None:
                raise ValueError("A linear code needs a generator matrix")
            if self.generator.cols != self.length:
                raise DimensionError("ClassicalCode generator", self.length, self.generator.cols)
            return
        seen = set()
        for word in self.explicit_words:
            if word.length != self.length:
                raise DimensionError("ClassicalCode word", self.length, word.length)
            if word in seen:
                raise ValueError(f"Duplicate codeword {word}")
            seen.add(word)

    @classmethod
    def explicit(cls, words: Sequence[BitVector], length: Optional[int] = None) -> 'ClassicalCode':
        if length is None:
            if not words:
                raise DimensionError("ClassicalCode.explicit", "length for an empty code", None)
            length = words[0].length
        return cls(length, CodeProvenance.EXPLICIT, tuple(words))

    @classmethod
    def from_strings(cls, words: Iterable[str]) -> 'ClassicalCode':
        return cls.explicit([BitVector.from_string(w) for w in words])

    @classmethod
    def linear(cls, generator: BitMatrix) -> 'ClassicalCode':
        return cls(generator.cols, CodeProvenance.LINEAR, (), generator)

    @cached_property
    def words(self) -> Tuple[BitVector, ...]:
        """All codewords; a linear code is expanded on first access."""
        if self.provenance == CodeProvenance.LINEAR:
            return tuple(row_space(self.generator))
        return self.explicit_words

    @property
    def size(self) -> int:
        if self.provenance == CodeProvenance.LINEAR:
            return 1 << rank(self.generator)
        return len(self.explicit_words)

    @property
    def is_linear(self) -> bool:
        return self.provenance == CodeProvenance.LINEAR


@dataclass(frozen=True)
class CwsCode:
    """The pair (G, C); codeword coordinates are graph vertices."""
    graph: Graph
    code: ClassicalCode

    def __post_init__(self):
        if self.code.length != self.graph.n:
            raise DimensionError("CwsCode", self.graph.n, self.code.length)

    @property
    def n(self) -> int:
        return self.graph.n


def classical_distance(code: ClassicalCode) -> int:
    """Minimum Hamming distance between distinct codewords."""
    if code.size < 2:
        raise UndefinedDistanceError(code.size)
    if code.is_linear:
        return min(w.weight() for w in code.words if not w.is_zero())
    bits = [w.bits for w in code.words]
    best = code.length
    for i in range(len(bits)):
        for j in range(i + 1, len(bits)):
            best = min(best, (bits[i] ^ bits[j]).bit_count())
    return best


def classical_degenerate_components(code: ClassicalCode) -> List[int]:
    """Coordinates that are zero in every codeword."""
    used = 0
    for word in code.words:
        used |= word.bits
    return [i for i in range(code.length) if not (used >> i) & 1]


def parse_cws_code(text: str, source: str = "cws code") -> CwsCode:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if not lines:
        raise ParseError(source, "empty input")
    graph = from_graph6(lines[0])

    linear = False
    rows: List[BitVector] = []
    for number, line in enumerate(lines[1:], start=2):
        if line.lower() == CodeProvenance.LINEAR:
            if rows or linear:
                raise ParseError(source, "'linear' must come directly after the graph line")
            linear = True
            continue
        if any(ch not in '01' for ch in line):
            raise ParseError(source, f"line {number} is not a bitstring: {line!r}")
        if len(line) != graph.n:
            raise ParseError(source, f"line {number} has length {len(line)}, graph has {graph.n} vertices")
        rows.append(BitVector.from_string(line))
    if not rows:
        raise ParseError(source, "no codewords")

    if linear:
        code = ClassicalCode.linear(BitMatrix.from_rows(rows))
    else:
        if len(set(rows)) != len(rows):
            raise ParseError(source, "duplicate codewords")
        code = ClassicalCode.explicit(rows)
    logger.debug(f"parse_cws_code: n={graph.n} provenance={code.provenance} rows={len(rows)}")
    return CwsCode(graph, code)


def format_cws_code(cws: CwsCode) -> str:
    lines = [to_graph6(cws.graph)]
    if cws.code.is_linear:
        lines.append(CodeProvenance.LINEAR)
        lines.extend(cws.code.generator.to_strings())
    else:
        lines.extend(str(word) for word in cws.code.words)
    return '\n'.join(lines) + '\n'
