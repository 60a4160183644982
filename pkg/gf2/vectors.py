"""
GF(2) Vectors and Matrices

Bit-packed binary vectors and row-major binary matrices. A vector packs its
coordinates into one arbitrary-precision integer (coordinate i is bit i), so
xor, and, or and popcount run word-at-a-time inside CPython. The `words`
view exposes the same bits as 64-bit machine words.

String form: character i is coordinate i, so "011" has bits 1 and 2 set.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from core.exceptions import DimensionError

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


def _mask(length: int) -> int:
    return (1 << length) - 1


@dataclass(frozen=True)
class BitVector:
    """
    Immutable binary vector of fixed length.

    Bits beyond `length` are always zero, so equality and hashing are plain
    integer comparisons.
    """
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError("BitVector", "non-negative length", self.length)
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError("BitVector", f"bits within length {self.length}", bin(self.bits))

    # Constructors

    @classmethod
    def zeros(cls, length: int) -> 'BitVector':
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> 'BitVector':
        return cls(length, _mask(length))

    @classmethod
    def from_int(cls, length: int, bits: int) -> 'BitVector':
        """Build from an integer, dropping bits beyond `length`."""
        return cls(length, bits & _mask(length))

    @classmethod
    def unit(cls, length: int, index: int) -> 'BitVector':
        if not 0 <= index < length:
            raise DimensionError("BitVector.unit", f"index in [0, {length})", index)
        return cls(length, 1 << index)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> 'BitVector':
        bits = 0
        for index in indices:
            if not 0 <= index < length:
                raise DimensionError("BitVector.from_indices", f"index in [0, {length})", index)
            bits |= 1 << index
        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str) -> 'BitVector':
        """Parse a string of '0'/'1' characters; character i is coordinate i."""
        text = text.strip()
        if any(ch not in '01' for ch in text):
            raise ValueError(f"Not a bit string: {text!r}")
        bits = 0
        for index, ch in enumerate(text):
            if ch == '1':
                bits |= 1 << index
        return cls(len(text), bits)

    @classmethod
    def from_words(cls, length: int, words: Sequence[int]) -> 'BitVector':
        bits = 0
        for position, word in enumerate(words):
            bits |= (word & _WORD_MASK) << (position * WORD_BITS)
        return cls.from_int(length, bits)

    @staticmethod
    def concat(left: 'BitVector', right: 'BitVector') -> 'BitVector':
        """Concatenate, `left` occupying the low coordinates."""
        return BitVector(left.length + right.length, left.bits | (right.bits << left.length))

    # Views

    @property
    def words(self) -> Tuple[int, ...]:
        """The packed 64-bit words, least significant first."""
        count = max(1, -(-self.length // WORD_BITS))
        return tuple((self.bits >> (k * WORD_BITS)) & _WORD_MASK for k in range(count))

    def support(self) -> Tuple[int, ...]:
        """Indices of the set coordinates, ascending."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_string(self) -> str:
        return ''.join('1' if (self.bits >> i) & 1 else '0' for i in range(self.length))

    # Arithmetic

    def _check(self, other: 'BitVector', operation: str) -> None:
        if self.length != other.length:
            raise DimensionError(operation, self.length, other.length)

    def __xor__(self, other: 'BitVector') -> 'BitVector':
        self._check(other, "xor")
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: 'BitVector') -> 'BitVector':
        self._check(other, "and")
        return BitVector(self.length, self.bits & other.bits)

    def __or__(self, other: 'BitVector') -> 'BitVector':
        self._check(other, "or")
        return BitVector(self.length, self.bits | other.bits)

    def dot(self, other: 'BitVector') -> int:
        """Inner product mod 2."""
        self._check(other, "dot")
        return (self.bits & other.bits).bit_count() & 1

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        return (self.bits >> index) & 1

    def __iter__(self) -> Iterator[int]:
        return (int((self.bits >> i) & 1) for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class BitMatrix:
    """Row-major binary matrix. Columns are materialised on demand."""
    rows: int
    cols: int
    row_data: Tuple[BitVector, ...]

    def __post_init__(self):
        if len(self.row_data) != self.rows:
            raise DimensionError("BitMatrix", f"{self.rows} rows", len(self.row_data))
        for row in self.row_data:
            if row.length != self.cols:
                raise DimensionError("BitMatrix row", self.cols, row.length)

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], cols: int = None) -> 'BitMatrix':
        if cols is None:
            if not rows:
                raise DimensionError("BitMatrix.from_rows", "column count for an empty matrix", None)
            cols = rows[0].length
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> 'BitMatrix':
        return cls.from_rows([BitVector.from_string(r) for r in rows])

    @classmethod
    def identity(cls, n: int) -> 'BitMatrix':
        return cls(n, n, tuple(BitVector.unit(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'BitMatrix':
        return cls(rows, cols, tuple(BitVector.zeros(cols) for _ in range(rows)))

    @staticmethod
    def hstack(left: 'BitMatrix', right: 'BitMatrix') -> 'BitMatrix':
        """Side-by-side block matrix (left | right)."""
        if left.rows != right.rows:
            raise DimensionError("hstack", left.rows, right.rows)
        rows = tuple(BitVector.concat(a, b) for a, b in zip(left.row_data, right.row_data))
        return BitMatrix(left.rows, left.cols + right.cols, rows)

    def row(self, index: int) -> BitVector:
        return self.row_data[index]

    def to_strings(self) -> List[str]:
        return [row.to_string() for row in self.row_data]
