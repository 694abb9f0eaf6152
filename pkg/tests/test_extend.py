import unittest

from pystringc.catalog.registry import find_entries, get_entry, instantiate
from pystringc.classify.search import enumerate_string_cgroups
from pystringc.extend import (
    NotAPerfectSplit,
    RdGuarantee,
    SesquiKind,
    TauInGroup,
    TauNotCommuting,
    TauNotInvolution,
    fuse_rd,
    rd_extend,
    rd_guard,
    sesqui_extend,
    sesqui_kind_by_order,
    three_cycle,
)
from pystringc.fracture import find_splits
from pystringc.group.conjugacy import tuple_conjugator
from pystringc.group.perm_group import GroupKind, identify
from pystringc.model.permutation import Permutation
from pystringc.sggi.core import Sggi, hemicube, simplex
from pystringc.sggi.verdict import is_string_cgroup
from tests.params import configure, default_config, has_env_var, sggi_of_cycles

if __name__ == "__main__":
    configure()


class TestSesqui(unittest.TestCase):
    def test_improper(self) -> None:
        gamma = sggi_of_cycles(2, "(1,2)")
        result = sesqui_extend(gamma, 0, Permutation.parse("(3,4)", 4))
        self.assertEqual(result.extended.degree, 4)
        self.assertEqual(result.extended.gens, (Permutation.parse("(1,2)(3,4)", 4),))
        self.assertEqual(result.kind, SesquiKind.IMPROPER)
        self.assertEqual(sesqui_kind_by_order(gamma, result.extended), SesquiKind.IMPROPER)
        self.assertEqual(result.extended.group.order(), 2)

    def test_proper(self) -> None:
        gamma = sggi_of_cycles(3, "(1,2)", "(2,3)")
        result = sesqui_extend(gamma, 0, Permutation.parse("(4,5)", 5))
        self.assertEqual(result.kind, SesquiKind.PROPER)
        self.assertEqual(result.index, 0)
        self.assertEqual(result.extended.group.order(), 12)
        self.assertEqual(sesqui_kind_by_order(gamma, result.extended), SesquiKind.PROPER)
        self.assertTrue(result.extended.group.contains(result.tau))

    def test_kinds_agree(self) -> None:
        gamma = simplex(4)
        tau = Permutation.parse("(5,6)", 6)
        for k in range(gamma.rank):
            result = sesqui_extend(gamma, k, tau)
            self.assertEqual(result.kind, sesqui_kind_by_order(gamma, result.extended))

    def test_preconditions(self) -> None:
        with self.assertRaises(TauNotInvolution):
            sesqui_extend(sggi_of_cycles(3, "(1,2)"), 0, Permutation.parse("(1,2,3)", 3))
        with self.assertRaises(TauNotCommuting) as cm:
            sesqui_extend(sggi_of_cycles(3, "(1,2)", "(2,3)"), 0, Permutation.parse("(1,2)", 3))
        self.assertEqual(cm.exception.index, 1)
        with self.assertRaises(TauInGroup):
            sesqui_extend(sggi_of_cycles(4, "(1,2)", "(3,4)"), 1, Permutation.parse("(1,2)(3,4)", 4))
        with self.assertRaises(ValueError):
            sesqui_extend(simplex(3), 2, Permutation.parse("(4,5)", 5))


class TestRankDegreeExtension(unittest.TestCase):
    def test_simplex(self) -> None:
        gamma = simplex(4)
        extension = rd_extend(gamma, 1)
        self.assertEqual(extension.split_label, 1)
        self.assertEqual(extension.new_point, 5)

        delta = extension.result
        self.assertEqual((delta.degree, delta.rank), (5, 4))
        expected = tuple(Permutation.parse(text, 5) for text in ("(1,2)", "(2,5)", "(3,5)", "(3,4)"))
        self.assertEqual(delta.gens, expected)
        self.assertTrue(is_string_cgroup(delta).is_string_c)
        self.assertEqual(identify(delta.group).kind, GroupKind.SYMMETRIC)

    def test_three_cycle(self) -> None:
        delta = rd_extend(simplex(4), 1).result
        cycle = three_cycle(delta, 1)
        self.assertEqual(cycle.order(), 3)
        self.assertEqual(cycle.support(), [2, 3, 5])

    def test_fuse(self) -> None:
        for label in range(3):
            delta = rd_extend(simplex(4), label).result
            self.assertEqual(fuse_rd(delta, label), simplex(4))

    def test_guard(self) -> None:
        self.assertEqual(rd_guard(simplex(4), 1), RdGuarantee.GUARANTEED)

    def test_hemicube(self) -> None:
        gamma = hemicube()
        self.assertTrue(is_string_cgroup(gamma).is_string_c)
        extension = rd_extend(gamma, 0)
        self.assertEqual(extension.split.pair, (1, 2))
        self.assertEqual(extension.result.rank, 4)
        self.assertEqual(fuse_rd(extension.result, 0), gamma)
        self.assertEqual(rd_guard(gamma, 0), RdGuarantee.NO_GUARANTEE)
        self.assertFalse(is_string_cgroup(extension.result).is_string_c)

    def test_simplex_chain(self) -> None:
        for degree in range(4, 9):
            with self.subTest(degree=degree):
                self.assertEqual(rd_guard(simplex(degree), 1), RdGuarantee.GUARANTEED)
                delta = rd_extend(simplex(degree), 1).result
                self.assertIsNotNone(tuple_conjugator(delta.gens, simplex(degree + 1).gens))

    def assertGuaranteeHolds(self, gamma: Sggi) -> None:
        for split in find_splits(gamma):
            if not split.perfect or rd_guard(gamma, split.label, report=split) is not RdGuarantee.GUARANTEED:
                continue
            with self.subTest(gamma=str(gamma), label=split.label):
                self.assertTrue(is_string_cgroup(rd_extend(gamma, split.label).result).is_string_c)

    def test_guarantee(self) -> None:
        for degree in range(3, 7):
            self.assertGuaranteeHolds(simplex(degree))
        for name in find_entries():
            if get_entry(name).parameters:
                continue
            entry = instantiate(name)
            if entry.claims.string_c and not entry.claims.informational and entry.graph.degree <= 6:
                self.assertGuaranteeHolds(entry.sggi())

    @unittest.skipUnless(has_env_var("CATALOG"), "extends large catalog graphs")
    def test_guarantee_family(self) -> None:
        self.assertGuaranteeHolds(instantiate("T5.11@n=9").sggi())

    def test_not_perfect(self) -> None:
        gamma = sggi_of_cycles(4, "(1,2)(3,4)", "(2,3)")
        with self.assertRaises(NotAPerfectSplit) as cm:
            rd_extend(gamma, 0)
        self.assertEqual(cm.exception.label, 0)
        with self.assertRaises(NotAPerfectSplit):
            rd_extend(gamma, 5)
        with self.assertRaises(NotAPerfectSplit):
            rd_guard(gamma, 0)


def fresh_transposition(gamma: Sggi) -> Permutation:
    "The transposition of two points added after the points of the sggi."

    return Permutation.transposition(gamma.degree + 2, gamma.degree + 1, gamma.degree + 2)


class TestSesquiProperties(unittest.TestCase):
    def test_first_generator(self) -> None:
        for degree, rank in ((5, 3), (5, 4), (6, 3), (6, 4), (6, 5)):
            result = enumerate_string_cgroups(degree, rank, config=default_config())
            for gamma in result.representatives:
                with self.subTest(gamma=str(gamma)):
                    extended = sesqui_extend(gamma, 0, fresh_transposition(gamma)).extended
                    self.assertTrue(is_string_cgroup(extended).is_string_c)

        failing = [
            sggi_of_cycles(3, "(1,2)", "(2,3)", "(1,2)"),
            sggi_of_cycles(4, "(1,2)(3,4)", "(2,3)", "(1,2)(3,4)"),
            rd_extend(hemicube(), 0).result,
        ]
        for gamma in failing:
            with self.subTest(gamma=str(gamma)):
                self.assertFalse(is_string_cgroup(gamma).is_string_c)
                extended = sesqui_extend(gamma, 0, fresh_transposition(gamma)).extended
                self.assertFalse(is_string_cgroup(extended).is_string_c)

    def assertProper(self, gamma: Sggi) -> None:
        self.assertEqual(identify(gamma.group).kind, GroupKind.ALTERNATING)
        tau = fresh_transposition(gamma)
        for k in range(gamma.rank):
            with self.subTest(gamma=str(gamma), k=k):
                result = sesqui_extend(gamma, k, tau)
                self.assertEqual(result.kind, SesquiKind.PROPER)
                self.assertEqual(sesqui_kind_by_order(gamma, result.extended), SesquiKind.PROPER)

    def test_alternating(self) -> None:
        for ident in ("T2.1", "T2.2"):
            self.assertProper(instantiate(ident).sggi())

    @unittest.skipUnless(has_env_var("CATALOG"), "extends alternating groups on ten and eleven points")
    def test_alternating_large(self) -> None:
        for ident in find_entries("T2.*"):
            self.assertProper(instantiate(ident).sggi())


if __name__ == "__main__":
    unittest.main()
