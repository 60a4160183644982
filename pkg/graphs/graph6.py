"""
Graph Text Formats

graph6 (short form, n <= 62) and a plain adjacency-list format for larger
graphs.

graph6 layout: one character n+63, then the upper triangle of the adjacency
matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), padded
with zeros to a multiple of six bits, each six-bit group big-endian plus 63.
"""
from typing import List, Optional

from core.exceptions import ParseError

from .models import Graph

GRAPH6_HEADER = '>>graph6<<'
GRAPH6_MAX_N = 62
_OFFSET = 63


def _pair_order(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(graph: Graph) -> str:
    """Encode a graph in graph6 short form (no header, no newline)."""
    if graph.n > GRAPH6_MAX_N:
        raise ValueError(
            f"graph6 short form supports n <= {GRAPH6_MAX_N}; use the adjacency-list format"
        )
    bits = [1 if graph.has_edge(i, j) else 0 for i, j in _pair_order(graph.n)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(graph.n + _OFFSET)]
    for start in range(0, len(bits), 6):
        group = 0
        for bit in bits[start:start + 6]:
            group = (group << 1) | bit
        chars.append(chr(group + _OFFSET))
    return ''.join(chars)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 short-form string. Raises ParseError on malformed input."""
    source = 'graph6'
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError(source, "empty input")
    if s[0] == '&':
        raise ParseError(source, "digraph6 (directed) input is not accepted")
    if s[0] == ':' or s[0] == ';':
        raise ParseError(source, "sparse6 input is not accepted")
    for position, ch in enumerate(s):
        if not _OFFSET <= ord(ch) <= 126:
            raise ParseError(source, f"character {ch!r} at position {position} is out of range")
    if s[0] == '~':
        raise ParseError(source, f"only the short form (n <= {GRAPH6_MAX_N}) is supported")

    n = ord(s[0]) - _OFFSET
    pair_count = n * (n - 1) // 2
    expected = -(-pair_count // 6)
    body = s[1:]
    if len(body) < expected:
        raise ParseError(source, f"expected {expected} data characters for n={n}, got {len(body)}")
    if len(body) > expected:
        raise ParseError(source, f"trailing characters after {expected} data characters")

    bits: List[int] = []
    for ch in body:
        group = ord(ch) - _OFFSET
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[pair_count:]):
        raise ParseError(source, "non-zero padding bits")

    edges = [pair for pair, bit in zip(_pair_order(n), bits) if bit]
    return Graph.from_edges(n, edges)


def to_adjacency_list(graph: Graph) -> str:
    """First line n, then one line `i: j k ...` per vertex."""
    lines = [str(graph.n)]
    for v in range(graph.n):
        neighbors = ' '.join(str(w) for w in graph.neighbors(v))
        lines.append(f"{v}: {neighbors}".rstrip())
    return '\n'.join(lines) + '\n'


def from_adjacency_list(text: str) -> Graph:
    source = 'adjacency list'
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if not lines:
        raise ParseError(source, "empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(source, f"first line must be the vertex count, got {lines[0]!r}")
    if n < 0:
        raise ParseError(source, "negative vertex count")

    rows = [0] * n
    seen = set()
    for line in lines[1:]:
        head, sep, tail = line.partition(':')
        if not sep:
            raise ParseError(source, f"missing ':' in line {line!r}")
        try:
            v = int(head)
            neighbors = [int(tok) for tok in tail.split()]
        except ValueError:
            raise ParseError(source, f"non-integer entry in line {line!r}")
        if not 0 <= v < n or v in seen:
            raise ParseError(source, f"bad or repeated vertex label {v}")
        seen.add(v)
        for w in neighbors:
            if not 0 <= w < n:
                raise ParseError(source, f"neighbour {w} of vertex {v} out of range")
            if w == v:
                raise ParseError(source, f"self-loop at vertex {v}")
            rows[v] |= 1 << w
    for v in range(n):
        for w in range(n):
            if (rows[v] >> w) & 1 and not (rows[w] >> v) & 1:
                raise ParseError(source, f"edge ({v}, {w}) is listed in one direction only")
    return Graph(n, tuple(rows))


def graph6_or_none(graph: Graph) -> Optional[str]:
    """graph6 for graphs the short form covers, None beyond it."""
    return to_graph6(graph) if graph.n <= GRAPH6_MAX_N else None
