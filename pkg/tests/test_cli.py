import io
import json
import os.path
import tempfile
import unittest
from contextlib import redirect_stdout

from pystringc.cli import EXIT_ERROR, EXIT_OK, main
from pystringc.graph.exchange import sggi_text
from pystringc.sggi.core import hemicube
from tests.params import configure

if __name__ == "__main__":
    configure()


def run(*argv: str) -> tuple[int, str]:
    "Runs the command-line front end and captures standard output."

    out = io.StringIO()
    with redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue()


class TestCommandLine(unittest.TestCase):
    def test_verify_catalog(self) -> None:
        code, text = run("verify", "catalog:T5.9")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("sggi: valid, rank 2, degree 5", text)
        self.assertIn("group: D_5 (order 10, transitive, primitive)", text)
        self.assertIn("string C-group: true", text)
        self.assertIn("2-fracture graph: yes", text)

    def test_verify_failure(self) -> None:
        code, text = run("verify", "catalog:IPF.3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("string C-group: false; witness", text)

    def test_verify_json(self) -> None:
        code, text = run("verify", "--json", "catalog:T5.9")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(text)
        self.assertEqual(data["verdict"], "true")
        self.assertEqual(data["kind"], "other")
        self.assertEqual(data["order"], 10)
        self.assertEqual(data["schlafli"], [5])

    def test_unknown_entry(self) -> None:
        code, _ = run("verify", "catalog:T9.9")
        self.assertEqual(code, EXIT_ERROR)

    def test_missing_file(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            code, _ = run("verify", os.path.join(directory, "missing.sggi"))
        self.assertEqual(code, EXIT_ERROR)

    def test_sigma(self) -> None:
        code, text = run("sigma", "6", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.strip(), "4")

    def test_classify(self) -> None:
        code, text = run("classify", "5", "4", "--recheck-prunes")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(text)
        self.assertEqual(data["count"], 1)
        self.assertTrue(data["config"]["recheck_prunes"])

    def test_extend(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            source = os.path.join(directory, "hemicube.sggi")
            with open(source, "w", encoding="utf-8") as f:
                f.write(sggi_text(hemicube()))

            code, text = run("extend", source, "--split", "0")
            self.assertEqual(code, EXIT_OK)
            generators, graph = text.split("\n\n")
            self.assertTrue(generators.startswith("degree 5\n"))
            self.assertTrue(graph.startswith("degree 5\nedge "))
            self.assertEqual(len(graph.splitlines()), 6)

            for name, content in (("extended.sggi", generators), ("extended.graph", graph)):
                target = os.path.join(directory, name)
                with open(target, "w", encoding="utf-8") as f:
                    f.write(content)
                code, report = run("verify", target)
                self.assertEqual(code, EXIT_OK)
                self.assertIn("sggi: valid, rank 4, degree 5", report)
                self.assertIn("string C-group: false", report)

    def test_extend_errors(self) -> None:
        code, _ = run("extend", "catalog:T5.9", "--sesqui", "0")
        self.assertEqual(code, EXIT_ERROR)
        code, _ = run("extend", "catalog:T5.9", "--sesqui", "0", "--tau", "(1,2)")
        self.assertEqual(code, EXIT_ERROR)
        with redirect_stdout(io.StringIO()), self.assertRaises(SystemExit):
            main(["extend", "catalog:T5.9"])

    def test_sesqui(self) -> None:
        code, text = run("extend", "--json", "catalog:T5.9", "--sesqui", "1", "--tau", "(6,7)")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(text)
        self.assertEqual(data["degree"], 7)
        self.assertEqual(len(data["generators"]), 2)
        self.assertTrue(data["graph_dsl"].startswith("degree 7\nedge "))

    def test_dot(self) -> None:
        code, text = run("dot", "catalog:T5.9")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(text.startswith("graph"))
        self.assertIn("label", text)

    def test_catalog(self) -> None:
        code, text = run("catalog-list", "T5.1*")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text.splitlines()[0], "T5.1@n=...")

        code, text = run("catalog-verify", "T2.1")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(text.startswith("T2.1: confirmed"))

        code, _ = run("catalog-verify", "nothing*")
        self.assertEqual(code, EXIT_ERROR)

    def test_schema(self) -> None:
        code, text = run("schema")
        self.assertEqual(code, EXIT_OK)
        schema = json.loads(text)
        self.assertIn("representatives", schema["properties"])


if __name__ == "__main__":
    unittest.main()
