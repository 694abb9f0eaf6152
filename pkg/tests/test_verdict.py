import random
import unittest

from pystringc.base import Config
from pystringc.sggi.core import RankError, dual, hemicube, simplex
from pystringc.sggi.verdict import (
    CGroupChecker,
    Verdict,
    Witness,
    intersection_property_bruteforce,
    is_string_cgroup,
)
from tests.params import configure, has_env_var, random_sggi, sggi_of_cycles, sggi_up_to_conjugacy

if __name__ == "__main__":
    configure()


class TestVerdict(unittest.TestCase):
    def test_simplex(self) -> None:
        for degree in range(2, 7):
            verdict = is_string_cgroup(simplex(degree))
            self.assertTrue(verdict.is_string_c)
            self.assertIsNone(verdict.witness)
            self.assertEqual(str(verdict), "true")

    def test_hemicube(self) -> None:
        self.assertTrue(is_string_cgroup(hemicube()).is_string_c)
        self.assertTrue(is_string_cgroup(dual(hemicube())).is_string_c)

    def test_rank_two(self) -> None:
        equal = sggi_of_cycles(3, "(1,2)", "(1,2)")
        verdict = is_string_cgroup(equal)
        self.assertEqual(verdict.verdict, Verdict.FALSE)
        self.assertEqual(verdict.witness, Witness((0,), (1,), 2, 1))
        self.assertTrue(is_string_cgroup(sggi_of_cycles(3, "(1,2)", "(2,3)")).is_string_c)

    def test_rank_one(self) -> None:
        self.assertTrue(is_string_cgroup(sggi_of_cycles(2, "(1,2)")).is_string_c)

    def test_failure(self) -> None:
        gamma = sggi_of_cycles(3, "(1,2)", "(2,3)", "(1,2)")
        verdict = is_string_cgroup(gamma)
        self.assertEqual(verdict.verdict, Verdict.FALSE)
        self.assertEqual(verdict.witness, Witness((1, 2), (0, 1), 6, 2))
        self.assertIn("witness", str(verdict))

        brute = intersection_property_bruteforce(gamma)
        self.assertEqual(brute.verdict, Verdict.FALSE)

    def test_witness_shift(self) -> None:
        # the failure lies in the last three generators
        gamma = sggi_of_cycles(5, "(4,5)", "(1,2)", "(2,3)", "(1,2)")
        verdict = is_string_cgroup(gamma)
        self.assertEqual(verdict.verdict, Verdict.FALSE)
        assert verdict.witness is not None
        self.assertEqual(verdict.witness.left, (2, 3))
        self.assertEqual(verdict.witness.right, (1, 2))

    def test_bruteforce_agrees(self) -> None:
        cases = [
            simplex(4),
            simplex(5),
            hemicube(),
            dual(hemicube()),
            sggi_of_cycles(4, "(1,2)(3,4)", "(2,3)", "(1,2)(3,4)"),
            sggi_of_cycles(5, "(1,2)", "(2,3)(4,5)", "(3,4)"),
        ]
        for gamma in cases:
            with self.subTest(gamma=str(gamma)):
                self.assertEqual(
                    is_string_cgroup(gamma).verdict,
                    intersection_property_bruteforce(gamma).verdict,
                )

    def test_small_degrees(self) -> None:
        for degree in range(2, 5):
            for rank in range(1, 5):
                for gamma in sggi_up_to_conjugacy(degree, rank):
                    with self.subTest(gamma=str(gamma)):
                        self.assertEqual(
                            is_string_cgroup(gamma).verdict,
                            intersection_property_bruteforce(gamma).verdict,
                        )

    def test_dual(self) -> None:
        for degree in range(2, 5):
            for rank in range(2, 5):
                for gamma in sggi_up_to_conjugacy(degree, rank):
                    with self.subTest(gamma=str(gamma)):
                        self.assertEqual(dual(dual(gamma)), gamma)
                        self.assertEqual(is_string_cgroup(gamma).verdict, is_string_cgroup(dual(gamma)).verdict)

    @unittest.skipUnless(has_env_var("ORACLE"), "brute-force check of every sggi on five and six points")
    def test_exhaustive(self) -> None:
        for degree in (5, 6):
            for rank in range(2, 5):
                for gamma in sggi_up_to_conjugacy(degree, rank):
                    with self.subTest(gamma=str(gamma)):
                        self.assertEqual(
                            is_string_cgroup(gamma).verdict,
                            intersection_property_bruteforce(gamma).verdict,
                        )

    @unittest.skipUnless(has_env_var("ORACLE"), "brute-force check of random sggi up to eight points")
    def test_random(self) -> None:
        generator = random.Random(1000)
        for _ in range(1000):
            gamma = random_sggi(generator, generator.randint(3, 8), generator.randint(2, 4))
            with self.subTest(gamma=str(gamma)):
                self.assertEqual(
                    is_string_cgroup(gamma).verdict,
                    intersection_property_bruteforce(gamma).verdict,
                )

    def test_bruteforce_rank(self) -> None:
        with self.assertRaises(RankError):
            intersection_property_bruteforce(simplex(9))

    def test_indeterminate(self) -> None:
        config = Config(intersection_cap=1, search_cap=1)
        verdict = is_string_cgroup(simplex(5), config=config)
        self.assertEqual(verdict.verdict, Verdict.INDETERMINATE)
        self.assertFalse(verdict.is_determinate)
        self.assertIsNotNone(verdict.reason)

    def test_memo(self) -> None:
        checker = CGroupChecker()
        self.assertTrue(checker.check(simplex(5)).is_string_c)
        self.assertGreater(len(checker), 0)
        # relabelled copy hits the memo
        count = len(checker)
        checker.check(sggi_of_cycles(6, "(2,3)", "(3,4)", "(4,5)", "(5,6)"))
        self.assertEqual(len(checker), count)
        checker.clear()
        self.assertEqual(len(checker), 0)


if __name__ == "__main__":
    unittest.main()
