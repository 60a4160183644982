"""
Pauli Operators

Pauli errors in binary symplectic form Z(a)X(b) -> (a | b). Phases are not
represented. Y at a coordinate is both bits set.

Label form is one character per qubit over {I, X, Y, Z}, qubit 0 first.
"""
import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Tuple

from core.exceptions import DimensionError
from gf2.vectors import BitVector


class PauliLetter:
    """Single-qubit letters in canonical enumeration order."""
    Z = 'Z'
    X = 'X'
    Y = 'Y'
    I = 'I'  # noqa: E741

    ORDER = (Z, X, Y)
    # (z bit, x bit)
    BITS = {I: (0, 0), Z: (1, 0), X: (0, 1), Y: (1, 1)}


@dataclass(frozen=True)
class PauliVector:
    """A Pauli error Z(z_part)X(x_part) on n qubits."""
    z_part: BitVector
    x_part: BitVector

    def __post_init__(self):
        if self.z_part.length != self.x_part.length:
            raise DimensionError("PauliVector", self.z_part.length, self.x_part.length)

    @property
    def n(self) -> int:
        return self.z_part.length

    @classmethod
    def identity(cls, n: int) -> 'PauliVector':
        return cls(BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def from_bits(cls, n: int, z_bits: int, x_bits: int) -> 'PauliVector':
        return cls(BitVector(n, z_bits), BitVector(n, x_bits))

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> 'PauliVector':
        """One-qubit error `letter` on `qubit`."""
        z, x = PauliLetter.BITS[letter]
        return cls.from_bits(n, z << qubit, x << qubit)

    @classmethod
    def from_label(cls, label: str) -> 'PauliVector':
        z_bits = x_bits = 0
        for qubit, letter in enumerate(label.strip().upper()):
            if letter not in PauliLetter.BITS:
                raise ValueError(f"Invalid Pauli letter {letter!r} in {label!r}")
            z, x = PauliLetter.BITS[letter]
            z_bits |= z << qubit
            x_bits |= x << qubit
        return cls.from_bits(len(label.strip()), z_bits, x_bits)

    def to_label(self) -> str:
        letters = []
        for qubit in range(self.n):
            z = self.z_part[qubit]
            x = self.x_part[qubit]
            letters.append('IXZY'[z * 2 + x])
        return ''.join(letters)

    def support(self) -> Tuple[int, ...]:
        return (self.z_part | self.x_part).support()

    def symplectic_weight(self) -> int:
        return (self.z_part.bits | self.x_part.bits).bit_count()

    def is_identity(self) -> bool:
        return self.z_part.is_zero() and self.x_part.is_zero()

    def __xor__(self, other: 'PauliVector') -> 'PauliVector':
        return PauliVector(self.z_part ^ other.z_part, self.x_part ^ other.x_part)

    def __str__(self) -> str:
        return self.to_label()


def symplectic_weight(p: PauliVector) -> int:
    """Number of qubits where the z part or the x part is set."""
    return p.symplectic_weight()


def sym_inner(p: PauliVector, q: PauliVector) -> int:
    """Symplectic form; 0 iff the two operators commute."""
    if p.n != q.n:
        raise DimensionError("sym_inner", p.n, q.n)
    return p.z_part.dot(q.x_part) ^ p.x_part.dot(q.z_part)


def commutes_with_z(c: BitVector, p: PauliVector) -> bool:
    """Z(c) commutes with Z(v)X(u) iff c.u is even."""
    if c.length != p.n:
        raise DimensionError("commutes_with_z", p.n, c.length)
    return c.dot(p.x_part) == 0


def count_by_weight(n: int, w: int) -> int:
    """C(n, w) * 3^w."""
    if not 0 <= w <= n:
        return 0
    return comb(n, w) * 3 ** w


def iter_weight_bits(n: int, w: int) -> Iterator[Tuple[int, int]]:
    """
    (z_bits, x_bits) pairs of every error of symplectic weight w.

    Supports come in itertools.combinations order; on each support the
    letters run Z < X < Y with the lowest qubit most significant.
    """
    letter_bits = [PauliLetter.BITS[letter] for letter in PauliLetter.ORDER]
    for support in itertools.combinations(range(n), w):
        for letters in itertools.product(letter_bits, repeat=w):
            z_bits = x_bits = 0
            for qubit, (z, x) in zip(support, letters):
                z_bits |= z << qubit
                x_bits |= x << qubit
            yield z_bits, x_bits


def enumerate_by_weight(n: int, w: int) -> Iterator[PauliVector]:
    """All PauliVectors of symplectic weight exactly w in canonical order."""
    if not 0 <= w <= n:
        raise DimensionError("enumerate_by_weight", f"0 <= w <= {n}", w)
    for z_bits, x_bits in iter_weight_bits(n, w):
        yield PauliVector.from_bits(n, z_bits, x_bits)
