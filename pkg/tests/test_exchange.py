import unittest

from pystringc.catalog.registry import find_entries, get_entry, instantiate
from pystringc.graph.exchange import (
    DslParseError,
    export_dot,
    is_graph_dsl,
    parse_dsl,
    parse_sggi_text,
    print_dsl,
    read_dot,
    read_sggi,
    sggi_dot,
    sggi_text,
)
from pystringc.graph.representation import MatchingViolation, graph_of
from pystringc.sggi.core import StringConditionFails, hemicube, simplex
from tests.params import configure

if __name__ == "__main__":
    configure()

PATH_DSL = """\
# path on four vertices
degree 4
edge 1 2 0
edge 2 3 1   # middle
edge 3 4 2
"""


class TestExchange(unittest.TestCase):
    def test_parse_dsl(self) -> None:
        graph = parse_dsl(PATH_DSL)
        self.assertEqual(graph.degree, 4)
        self.assertEqual(graph.triples(), [(1, 2, 0), (2, 3, 1), (3, 4, 2)])
        self.assertEqual(print_dsl(graph), "degree 4\nedge 1 2 0\nedge 2 3 1\nedge 3 4 2\n")
        self.assertEqual(parse_dsl(print_dsl(graph)), graph)

    def test_dsl_errors(self) -> None:
        cases = [
            ("edge 1 2 0\n", 1),
            ("degree 3\nedge 1 2\n", 2),
            ("degree 3\nedge 1 1 0\n", 2),
            ("degree 3\n\nedge 1 4 0\n", 3),
            ("degree 3\nedge 1 2 0\nedge 2 1 0\n", 3),
            ("degree 3\nvertex 1\n", 2),
            ("# only a comment\n", 1),
        ]
        for text, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(DslParseError) as context:
                    parse_dsl(text)
                self.assertEqual(context.exception.line, line)

    def test_dsl_validity(self) -> None:
        with self.assertRaises(MatchingViolation):
            parse_dsl("degree 3\nedge 1 2 0\nedge 2 3 0\n")

    def test_sggi_text(self) -> None:
        text = sggi_text(hemicube())
        self.assertEqual(text, "degree 4\n(1,2)(3,4)\n(2,3)\n(3,4)\n")
        self.assertEqual(parse_sggi_text(text), hemicube())
        with self.assertRaises(DslParseError) as context:
            parse_sggi_text("degree 4\n(1,2)\n(2,3\n")
        self.assertEqual(context.exception.line, 3)
        with self.assertRaises(StringConditionFails):
            parse_sggi_text("degree 4\n(1,2)\n(3,4)\n(2,3)\n")

    def test_sniffing(self) -> None:
        self.assertTrue(is_graph_dsl(PATH_DSL))
        self.assertFalse(is_graph_dsl(sggi_text(simplex(4))))
        self.assertEqual(read_sggi(PATH_DSL), simplex(4))
        self.assertEqual(read_sggi(sggi_text(simplex(4))), simplex(4))

    def test_dot(self) -> None:
        graph = graph_of(hemicube())
        dot = export_dot(graph)
        self.assertIn("1 -- 2 [label=0];", dot)
        self.assertEqual(read_dot(dot), graph)
        self.assertEqual(sggi_dot(hemicube()), dot)
        self.assertEqual(read_dot('graph G {\n1;\n2;\n1 -- 2 [label="0"]\n}\n').triples(), [(1, 2, 0)])
        with self.assertRaises(DslParseError):
            read_dot("digraph {\n}\n")
        with self.assertRaises(DslParseError):
            read_dot("graph {\n1 -> 2;\n}\n")

    def test_catalog_round_trip(self) -> None:
        for name in find_entries():
            if get_entry(name).parameters:
                continue
            with self.subTest(entry=name):
                graph = instantiate(name).graph
                self.assertEqual(parse_dsl(print_dsl(graph)), graph)
                self.assertEqual(read_dot(export_dot(graph)), graph)
                self.assertEqual(graph_of(instantiate(name).sggi()), graph)


if __name__ == "__main__":
    unittest.main()
