import unittest

from pystringc.catalog.registry import (
    CatalogEntry,
    CatalogError,
    Claims,
    find_entries,
    format_id,
    get_entry,
    instantiate,
    parse_id,
)
from pystringc.catalog.verification import verify_entries, verify_entry
from pystringc.fracture import find_splits
from pystringc.graph.representation import graph_of
from pystringc.group.perm_group import GroupKind, identify
from pystringc.sggi.core import hemicube
from pystringc.sggi.verdict import Verdict, is_string_cgroup
from tests.params import configure, default_config, has_env_var

if __name__ == "__main__":
    configure()


class TestRegistry(unittest.TestCase):
    def test_identifiers(self) -> None:
        self.assertEqual(parse_id("T2.1"), ("T2.1", {}))
        self.assertEqual(parse_id("IPF2.5@r=6,h=2"), ("IPF2.5", {"r": 6, "h": 2}))
        self.assertEqual(format_id("IPF2.5", {"r": 6, "h": 2}), "IPF2.5@r=6,h=2")
        self.assertEqual(format_id("T2.1", {}), "T2.1")
        with self.assertRaises(CatalogError):
            parse_id("T5.11@n")
        with self.assertRaises(CatalogError):
            parse_id("T5.11@n=9,n=11")

    def test_unknown(self) -> None:
        with self.assertRaises(CatalogError) as cm:
            instantiate("T9.9")
        self.assertEqual(cm.exception.ident, "T9.9")
        with self.assertRaises(CatalogError):
            instantiate("T2.1@r=4")

    def test_out_of_range(self) -> None:
        with self.assertRaises(CatalogError):
            instantiate("T5.11@n=8")
        with self.assertRaises(CatalogError):
            instantiate("T5.11@k=9")
        with self.assertRaises(CatalogError):
            instantiate("IPF2.5@r=6")

    def test_natural_order(self) -> None:
        self.assertEqual(find_entries("T5.*"), [f"T5.{k}" for k in range(1, 16)])
        self.assertEqual(find_entries("T2.*"), [f"T2.{k}" for k in range(1, 10)])
        self.assertEqual(find_entries("nothing*"), [])

    def test_fixed_entries(self) -> None:
        for name in find_entries():
            if get_entry(name).parameters:
                continue
            with self.subTest(entry=name):
                entry = instantiate(name)
                entry.graph.validate()
                gamma = entry.sggi()
                if entry.claims.degree is not None:
                    self.assertEqual(entry.graph.degree, entry.claims.degree)
                if entry.claims.rank is not None:
                    self.assertEqual(gamma.rank, entry.claims.rank)

    def test_families(self) -> None:
        for name in find_entries():
            source = get_entry(name)
            if not source.parameters:
                continue
            with self.subTest(family=name):
                entry = instantiate(name)
                entry.graph.validate()
                self.assertEqual(entry.id, format_id(name, parse_id(entry.id)[1]))
                self.assertEqual(entry.sggi().rank, entry.claims.rank)
                for params in source.samples(5):
                    instance = source.instantiate(params)
                    self.assertLessEqual(instance.claims.rank, 5)

    def test_family_instance(self) -> None:
        entry = instantiate("T5.11@n=9")
        self.assertEqual(entry.id, "T5.11@n=9")
        self.assertEqual(entry.graph.degree, 9)
        self.assertEqual(entry.claims.rank, 4)
        self.assertEqual(entry.claims.kind, GroupKind.ALTERNATING)
        self.assertEqual(len(entry.dashed_edges()), 2)

    def test_reconstruction(self) -> None:
        entry = instantiate("T6.XIII")
        self.assertTrue(entry.claims.informational)
        self.assertTrue(entry.notes)


class TestVerification(unittest.TestCase):
    def test_dihedral(self) -> None:
        report = verify_entry(instantiate("T5.9"), config=default_config())
        self.assertTrue(report.confirmed, str(report))
        self.assertIn("two_fracture", [check.claim for check in report.checks])

    def test_alternating(self) -> None:
        report = verify_entry(instantiate("T2.1"), config=default_config())
        self.assertTrue(report.confirmed, str(report))
        self.assertTrue(str(report).startswith("T2.1: confirmed"))

    def test_imprimitive(self) -> None:
        report = verify_entry(instantiate("T3.4"), config=default_config())
        self.assertTrue(report.confirmed, str(report))

    def test_intersection_failure(self) -> None:
        report = verify_entry(instantiate("IPF.3"), config=default_config())
        self.assertTrue(report.confirmed, str(report))
        checks = {check.claim: check for check in report.checks}
        self.assertEqual(checks["parabolic_orders"].actual, "720, 720, 120, 10")
        self.assertTrue(any(note.startswith("witness") for note in report.notes))

    def test_mismatch(self) -> None:
        entry = instantiate("T5.9")
        wrong = CatalogEntry("wrong", entry.graph, Claims(order=12, transitive=True))
        report = verify_entry(wrong, config=default_config())
        self.assertFalse(report.confirmed)
        self.assertIn("order: FAILED (expected 12, got 10)", str(report))
        self.assertIn("transitive: confirmed", str(report))

    def test_informational(self) -> None:
        entry = instantiate("T5.9")
        guess = CatalogEntry("guess", entry.graph, Claims(order=12, informational=True))
        report = verify_entry(guess, config=default_config())
        self.assertTrue(report.confirmed)
        self.assertIn("differs (informational)", str(report))

    def test_pattern(self) -> None:
        reports = verify_entries("T2.1", config=default_config())
        self.assertEqual([r.entry for r in reports], ["T2.1"])
        with self.assertRaises(CatalogError):
            verify_entries("nothing*")

    def test_perfect_splits(self) -> None:
        graph = graph_of(hemicube())
        report = verify_entry(CatalogEntry("hemicube", graph, Claims(perfect_splits=[0])), config=default_config())
        self.assertTrue(report.confirmed, str(report))
        report = verify_entry(CatalogEntry("hemicube", graph, Claims(perfect_splits=[0, 1])), config=default_config())
        self.assertFalse(report.confirmed)
        self.assertIn("perfect_splits: FAILED (expected [0, 1], got [0])", str(report))
        self.assertIn("perfect_splits", [check.claim for check in verify_entry(instantiate("T5.9")).checks])

    def test_primitive(self) -> None:
        for name in find_entries():
            if get_entry(name).parameters:
                continue
            entry = instantiate(name)
            if not entry.claims.string_c or entry.claims.informational:
                continue
            gamma = entry.sggi()
            if not gamma.is_transitive() or not any(split.perfect for split in find_splits(gamma)):
                continue
            with self.subTest(entry=name):
                self.assertTrue(identify(gamma.group).primitive)

    @unittest.skipUnless(has_env_var("CATALOG"), "verifies large catalog graphs")
    def test_families_verified(self) -> None:
        for ident in ("T5.11@n=9", "T5.13@n=9", "IPF2.5@r=6,h=2"):
            with self.subTest(entry=ident):
                (report,) = verify_entries(ident, config=default_config())
                self.assertTrue(report.confirmed, str(report))

    @unittest.skipUnless(has_env_var("CATALOG"), "checks failing families up to rank eight")
    def test_failing_families(self) -> None:
        for name in find_entries("IPF2.*"):
            source = get_entry(name)
            for params in source.samples(8):
                if params["r"] < 6:
                    continue
                entry = source.instantiate(params)
                with self.subTest(entry=entry.id):
                    self.assertEqual(is_string_cgroup(entry.sggi(), config=default_config()).verdict, Verdict.FALSE)

    @unittest.skipUnless(has_env_var("CATALOG"), "verifies every catalog entry")
    def test_catalog(self) -> None:
        reports = verify_entries("*", config=default_config().replace(workers=4))
        for report in reports:
            with self.subTest(entry=report.entry):
                self.assertTrue(report.confirmed, str(report))


if __name__ == "__main__":
    unittest.main()
