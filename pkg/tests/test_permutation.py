import unittest

from pystringc.model.permutation import (
    DegreeMismatchError,
    Parity,
    Permutation,
    PermutationFormatError,
    compose,
    involutions,
)
from tests.params import configure

if __name__ == "__main__":
    configure()


class TestPermutation(unittest.TestCase):
    def test_parse(self) -> None:
        p = Permutation.parse("(1,2)(3,4)", 5)
        self.assertEqual(p.degree, 5)
        self.assertEqual(p.images, (2, 1, 4, 3, 5))
        self.assertEqual(str(p), "(1,2)(3,4)")
        self.assertEqual(Permutation.parse("(1 3 2)", 3), Permutation.parse("(2,1,3)", 3))
        self.assertEqual(Permutation.parse("()", 4), Permutation.identity(4))
        self.assertEqual(str(Permutation.identity(4)), "()")

    def test_parse_errors(self) -> None:
        with self.assertRaises(PermutationFormatError):
            Permutation.parse("(1,2", 3)
        with self.assertRaises(PermutationFormatError):
            Permutation.parse("(1,2)x", 3)
        with self.assertRaises(PermutationFormatError):
            Permutation.parse("(1,4)", 3)
        with self.assertRaises(PermutationFormatError):
            Permutation.parse("(1,2)(2,3)", 3)
        with self.assertRaises(PermutationFormatError):
            Permutation.parse("", 3)

    def test_compose(self) -> None:
        p = Permutation.parse("(1,2)", 3)
        q = Permutation.parse("(2,3)", 3)
        # `p` first, then `q`
        self.assertEqual(compose(p, q), Permutation.parse("(1,3,2)", 3))
        self.assertEqual(p * q, compose(p, q))
        self.assertEqual(compose(q, p), Permutation.parse("(1,2,3)", 3))
        with self.assertRaises(DegreeMismatchError):
            compose(p, Permutation.identity(4))

    def test_inverse(self) -> None:
        p = Permutation.parse("(1,2,3,4)(5,6)", 6)
        self.assertEqual(p.inverse(), Permutation.parse("(1,4,3,2)(5,6)", 6))
        self.assertTrue(compose(p, p.inverse()).is_identity())

    def test_conjugate(self) -> None:
        p = Permutation.parse("(1,2)", 4)
        g = Permutation.parse("(1,3)(2,4)", 4)
        self.assertEqual(p.conjugate(g), Permutation.parse("(3,4)", 4))
        self.assertEqual(p.conjugate(g), compose(compose(g.inverse(), p), g))

    def test_properties(self) -> None:
        p = Permutation.parse("(1,2,3)(4,5)", 6)
        self.assertEqual(p.order(), 6)
        self.assertEqual(p.cycles(), [(1, 2, 3), (4, 5)])
        self.assertEqual(p.support(), [1, 2, 3, 4, 5])
        self.assertEqual(p.fixed_points(), [6])
        self.assertEqual(p.parity(), Parity.ODD)
        self.assertEqual(Permutation.parse("(1,2,3)", 3).parity(), Parity.EVEN)
        self.assertFalse(p.is_involution())
        self.assertTrue(Permutation.parse("(1,2)(4,5)", 6).is_involution())
        self.assertFalse(Permutation.identity(3).is_involution())
        self.assertEqual(Permutation.parse("(1,4)(2,3)", 4).transpositions(), [(1, 4), (2, 3)])

    def test_restrict_extend(self) -> None:
        p = Permutation.parse("(2,4)(5,6)", 6)
        self.assertEqual(p.restrict([2, 4, 5, 6]), Permutation.parse("(1,2)(3,4)", 4))
        with self.assertRaises(ValueError):
            p.restrict([2, 5, 6])
        self.assertEqual(p.extend(8), Permutation.parse("(2,4)(5,6)", 8))
        with self.assertRaises(DegreeMismatchError):
            p.extend(5)

    def test_degree(self) -> None:
        with self.assertRaises(ValueError):
            Permutation(0, ())
        with self.assertRaises(ValueError):
            Permutation.identity(0)
        with self.assertRaises(ValueError):
            Permutation.parse("()", 0)
        self.assertTrue(Permutation.identity(1).is_identity())

    def test_sympy(self) -> None:
        p = Permutation.parse("(1,3)(2,5)", 6)
        self.assertEqual(Permutation.from_sympy(p.to_sympy(), 6), p)

    def test_involutions(self) -> None:
        self.assertEqual(len(involutions(4)), 9)
        self.assertEqual(len(involutions(5)), 25)
        self.assertEqual(len(involutions(6)), 75)
        self.assertTrue(all(p.is_involution() for p in involutions(6)))


if __name__ == "__main__":
    unittest.main()
