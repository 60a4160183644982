"""
GF(2) Linear Algebra

The exact primitives the rest of the project consumes: addition, Hamming
weight, matrix-vector product, rank and a kernel basis. Elimination works on
packed row integers, so one row operation is a single integer xor.
"""
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from core.exceptions import DimensionError

from .vectors import BitMatrix, BitVector


@dataclass(frozen=True)
class RowReduceResult:
    """Reduced row echelon form with its pivot columns."""
    rows: Tuple[int, ...]
    pivots: Tuple[int, ...]
    cols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def xor(a: BitVector, b: BitVector) -> BitVector:
    """Componentwise sum mod 2."""
    return a ^ b


def weight(v: BitVector) -> int:
    """Number of set coordinates."""
    return v.weight()


def mat_vec(matrix: BitMatrix, v: BitVector) -> BitVector:
    """GF(2) product M·v, of length M.rows."""
    if v.length != matrix.cols:
        raise DimensionError("mat_vec", matrix.cols, v.length)
    bits = 0
    for r, row in enumerate(matrix.row_data):
        if (row.bits & v.bits).bit_count() & 1:
            bits |= 1 << r
    return BitVector(matrix.rows, bits)


def row_reduce(matrix: BitMatrix) -> RowReduceResult:
    """Gauss-Jordan elimination to reduced row echelon form."""
    rows = [row.bits for row in matrix.row_data]
    pivots = []
    pivot_row = 0
    for col in range(matrix.cols):
        bit = 1 << col
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r] & bit:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        for r in range(len(rows)):
            if r != pivot_row and rows[r] & bit:
                rows[r] ^= rows[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return RowReduceResult(rows=tuple(rows[:pivot_row]), pivots=tuple(pivots), cols=matrix.cols)


def rank(matrix: BitMatrix) -> int:
    return row_reduce(matrix).rank


def kernel_basis(matrix: BitMatrix) -> List[BitVector]:
    """
    Basis of {x : M·x = 0}.

    One vector per free column: the free coordinate is set and each pivot
    coordinate takes the value its reduced row has in that free column.
    """
    reduced = row_reduce(matrix)
    pivot_set = set(reduced.pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for row_bits, pivot in zip(reduced.rows, reduced.pivots):
            if (row_bits >> free) & 1:
                bits |= 1 << pivot
        basis.append(BitVector(matrix.cols, bits))
    return basis


def row_space(matrix: BitMatrix) -> Iterator[BitVector]:
    """
    Every vector in the row space, each exactly once.

    Walks the span of an independent row basis in Gray-code order.
    """
    basis = list(row_reduce(matrix).rows)
    current = 0
    yield BitVector(matrix.cols, current)
    for step in range(1, 1 << len(basis)):
        flip = (step & -step).bit_length() - 1
        current ^= basis[flip]
        yield BitVector(matrix.cols, current)
