"""
GF(2) Tests - vectors, matrices and linear algebra
"""
from django.test import SimpleTestCase

from core.exceptions import DimensionError
from gf2.linalg import kernel_basis, mat_vec, rank, row_space, weight, xor
from gf2.vectors import BitMatrix, BitVector
from graphs.generators import complete, cycle, petersen
from graphs.models import Graph


def bv(text: str) -> BitVector:
    return BitVector.from_string(text)


class BitVectorTestCase(SimpleTestCase):
    """Packed vector behaviour"""

    def test_string_layout(self):
        v = bv("011")
        self.assertEqual(v.bits, 0b110)
        self.assertEqual(v.support(), (1, 2))
        self.assertEqual(str(v), "011")

    def test_canonical_form_enforced(self):
        with self.assertRaises(DimensionError):
            BitVector(3, 0b1000)
        self.assertEqual(BitVector.from_int(3, 0b1111), BitVector.ones(3))

    def test_words_view(self):
        v = BitVector.from_indices(130, [0, 64, 129])
        self.assertEqual(v.words, (1, 1, 2))
        self.assertEqual(BitVector.from_words(130, v.words), v)

    def test_concat(self):
        joined = BitVector.concat(bv("10"), bv("011"))
        self.assertEqual(str(joined), "10011")

    def test_dot(self):
        self.assertEqual(bv("110").dot(bv("011")), 1)
        self.assertEqual(bv("110").dot(bv("110")), 0)

    def test_length_mismatch(self):
        with self.assertRaises(DimensionError):
            bv("10") ^ bv("101")


class LinalgTestCase(SimpleTestCase):
    """xor, weight, mat_vec, rank and kernels"""

    def test_xor(self):
        self.assertEqual(xor(bv("10110"), bv("00000")), bv("10110"))
        self.assertEqual(xor(bv("10110"), bv("10110")), bv("00000"))
        self.assertEqual(xor(bv("101"), bv("011")), bv("110"))
        with self.assertRaises(DimensionError):
            xor(bv("101"), bv("1011"))

    def test_weight(self):
        self.assertEqual(weight(bv("00000")), 0)
        self.assertEqual(weight(bv("11111")), 5)
        self.assertEqual(weight(bv("10010")), 2)

    def test_mat_vec(self):
        self.assertEqual(mat_vec(BitMatrix.identity(5), bv("10110")), bv("10110"))
        a_k3 = complete(3).adjacency_matrix()
        self.assertEqual(mat_vec(a_k3, BitVector.unit(3, 0)), bv("011"))
        self.assertTrue(mat_vec(BitMatrix.zeros(4, 5), bv("11011")).is_zero())
        with self.assertRaises(DimensionError):
            mat_vec(BitMatrix.identity(3), bv("1010"))

    def test_rank(self):
        self.assertEqual(rank(BitMatrix.identity(4)), 4)
        self.assertEqual(rank(BitMatrix.from_strings(["110", "011", "101"])), 2)
        self.assertEqual(rank(BitMatrix.zeros(3, 3)), 0)

    def test_kernel_vectors_are_annihilated(self):
        matrices = [
            BitMatrix.from_strings(["110", "011", "101"]),
            BitMatrix.from_strings(["1010", "0101"]),
            petersen().adjacency_matrix(),
        ]
        for m in matrices:
            basis = kernel_basis(m)
            self.assertEqual(rank(m) + len(basis), m.cols)
            for k in basis:
                self.assertTrue(mat_vec(m, k).is_zero())

    def test_kernel_of_graph_matrix_has_n_elements(self):
        for g in (complete(3), cycle(5), petersen()):
            augmented = BitMatrix.hstack(BitMatrix.identity(g.n), g.adjacency_matrix())
            self.assertEqual(len(kernel_basis(augmented)), g.n)

    def test_kernel_parameterisation(self):
        # ker(I | A) = {(A u | u)} checked both ways for small graphs
        graphs = [cycle(5), complete(4), Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])]
        for g in graphs:
            a = g.adjacency_matrix()
            augmented = BitMatrix.hstack(BitMatrix.identity(g.n), a)
            kernel = set(row_space(BitMatrix.from_rows(kernel_basis(augmented), 2 * g.n)))
            self.assertEqual(len(kernel), 1 << g.n)
            expected = set()
            for u_bits in range(1 << g.n):
                u = BitVector(g.n, u_bits)
                expected.add(BitVector.concat(mat_vec(a, u), u))
            self.assertEqual(kernel, expected)

    def test_row_space_size(self):
        m = BitMatrix.from_strings(["110", "011", "101"])
        words = list(row_space(m))
        self.assertEqual(len(words), 4)
        self.assertEqual(len(set(words)), 4)
