"""
Pauli Tests - symplectic weight, commutation and enumeration
"""
import random

from django.test import SimpleTestCase

from core.exceptions import DimensionError
from gf2.vectors import BitVector
from pauli.operators import (
    PauliVector,
    commutes_with_z,
    count_by_weight,
    enumerate_by_weight,
    sym_inner,
    symplectic_weight,
)


def pv(z: str, x: str) -> PauliVector:
    return PauliVector(BitVector.from_string(z), BitVector.from_string(x))


class PauliVectorTestCase(SimpleTestCase):
    """Construction, labels and weight"""

    def test_symplectic_weight(self):
        self.assertEqual(symplectic_weight(pv("110", "011")), 3)
        self.assertEqual(symplectic_weight(pv("00000", "00000")), 0)
        self.assertEqual(symplectic_weight(pv("101", "101")), 2)

    def test_label_round_trip(self):
        p = PauliVector.from_label("ZXIIY")
        self.assertEqual(p.z_part, BitVector.from_string("10001"))
        self.assertEqual(p.x_part, BitVector.from_string("01001"))
        self.assertEqual(p.to_label(), "ZXIIY")

    def test_bad_label(self):
        with self.assertRaises(ValueError):
            PauliVector.from_label("ZQ")

    def test_mismatched_parts(self):
        with self.assertRaises(DimensionError):
            pv("10", "101")

    def test_weight_triangle_inequality(self):
        rng = random.Random(5)
        for _ in range(200):
            p = PauliVector.from_bits(6, rng.getrandbits(6), rng.getrandbits(6))
            q = PauliVector.from_bits(6, rng.getrandbits(6), rng.getrandbits(6))
            self.assertLessEqual(symplectic_weight(p ^ q), symplectic_weight(p) + symplectic_weight(q))


class CommutationTestCase(SimpleTestCase):
    """Symplectic inner product and Z-word commutation"""

    def test_z_and_x_anticommute(self):
        self.assertEqual(sym_inner(pv("1", "0"), pv("0", "1")), 1)

    def test_alternating(self):
        rng = random.Random(11)
        for _ in range(100):
            p = PauliVector.from_bits(5, rng.getrandbits(5), rng.getrandbits(5))
            self.assertEqual(sym_inner(p, p), 0)

    def test_disjoint_supports_commute(self):
        self.assertEqual(sym_inner(PauliVector.from_label("ZXI"), PauliVector.from_label("IIY")), 0)

    def test_bilinear(self):
        rng = random.Random(3)
        for _ in range(100):
            p, q, r = (PauliVector.from_bits(4, rng.getrandbits(4), rng.getrandbits(4)) for _ in range(3))
            self.assertEqual(sym_inner(p ^ q, r), sym_inner(p, r) ^ sym_inner(q, r))

    def test_length_mismatch(self):
        with self.assertRaises(DimensionError):
            sym_inner(PauliVector.identity(2), PauliVector.identity(3))

    def test_commutes_with_z(self):
        self.assertTrue(commutes_with_z(BitVector.zeros(5), PauliVector.from_label("XYZXY")))
        self.assertFalse(commutes_with_z(BitVector.ones(5), PauliVector.single(5, 2, 'X')))
        self.assertTrue(commutes_with_z(BitVector.from_string("110"), pv("000", "110")))


class EnumerationTestCase(SimpleTestCase):
    """Weight-ordered error streams"""

    def test_counts(self):
        self.assertEqual(len(list(enumerate_by_weight(5, 0))), 1)
        self.assertEqual(len(list(enumerate_by_weight(5, 1))), 15)
        self.assertEqual(len(list(enumerate_by_weight(5, 2))), 90)

    def test_exhaustive_small(self):
        for n in range(0, 7):
            seen = set()
            for w in range(n + 1):
                stream = list(enumerate_by_weight(n, w))
                self.assertEqual(len(stream), count_by_weight(n, w))
                self.assertTrue(all(p.symplectic_weight() == w for p in stream))
                seen.update(stream)
            self.assertEqual(len(seen), 4 ** n)

    def test_canonical_order(self):
        labels = [p.to_label() for p in enumerate_by_weight(2, 1)]
        self.assertEqual(labels, ["ZI", "XI", "YI", "IZ", "IX", "IY"])
        first = [p.to_label() for p in enumerate_by_weight(2, 2)][:4]
        self.assertEqual(first, ["ZZ", "ZX", "ZY", "XZ"])

    def test_weight_out_of_range(self):
        with self.assertRaises(DimensionError):
            list(enumerate_by_weight(3, 4))
