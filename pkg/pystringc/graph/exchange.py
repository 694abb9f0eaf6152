"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module reads and writes the text formats of permutation representation graphs and sggi.

Graph DSL (UTF-8, LF line endings):
```
# comment
degree 4
edge 1 2 0
edge 2 3 1
edge 3 4 2
```

Sggi text form:
```
degree 4
(1,2)
(2,3)
(3,4)
```

:see: https://github.com/hunyadi/pystringc
"""

import re
from typing import Iterator, Optional

from ..model.permutation import Permutation, PermutationFormatError
from ..sggi.core import Sggi, make_sggi
from .representation import Edge, GraphError, PermRepGraph, graph_of, sggi_of


class DslParseError(GraphError):
    "Raised when text does not conform to the graph DSL, the sggi text form or the supported DOT subset."

    line: int

    def __init__(self, line: int, message: str) -> None:
        super().__init__(message)
        self.line = line

    def __str__(self) -> str:
        return f"line {self.line}: {self.args[0]}"


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _degree_header(number: int, line: str) -> int:
    fields = line.split()
    if len(fields) != 2 or fields[0] != "degree" or not fields[1].isdigit():
        raise DslParseError(number, f"expected: `degree <n>`; got: {line!r}")
    degree = int(fields[1])
    if degree < 1:
        raise DslParseError(number, "degree must be positive")
    return degree


def parse_dsl(text: str) -> PermRepGraph:
    """
    Parses the graph DSL and validates the graph.

    :raises DslParseError: The text is malformed; the error carries the 1-based line number.
    :raises MatchingViolation: Edges of one label share a vertex.
    :raises SquareViolation: Non-adjacent labels do not commute.
    """

    degree: Optional[int] = None
    edges: list[Edge] = []
    seen: set[tuple[int, int, int]] = set()
    for number, line in _content_lines(text):
        if degree is None:
            degree = _degree_header(number, line)
            continue

        fields = line.split()
        if fields[0] != "edge":
            raise DslParseError(number, f"expected: `edge <u> <v> <label>`; got: {line!r}")
        if len(fields) != 4 or not all(f.isdigit() for f in fields[1:]):
            raise DslParseError(number, f"malformed edge: {line!r}")

        u, v, label = (int(f) for f in fields[1:])
        if u == v:
            raise DslParseError(number, f"loop at vertex {u}")
        if not (1 <= u <= degree and 1 <= v <= degree):
            raise DslParseError(number, f"vertex outside 1..{degree}: {line!r}")
        edge = Edge.of(u, v, label)
        if edge.key in seen:
            raise DslParseError(number, f"repeated edge: {line!r}")
        seen.add(edge.key)
        edges.append(edge)

    if degree is None:
        raise DslParseError(1, "missing `degree <n>` header")
    return PermRepGraph(degree, tuple(edges)).validate()


def print_dsl(graph: PermRepGraph) -> str:
    "Renders the graph DSL with edges in canonical order."

    lines = [f"degree {graph.degree}"]
    lines.extend(f"edge {e.u} {e.v} {e.label}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def sggi_text(gamma: Sggi) -> str:
    "Renders the sggi text form; cycles are sorted by their least point."

    lines = [f"degree {gamma.degree}"]
    lines.extend(str(g) for g in gamma.gens)
    return "\n".join(lines) + "\n"


def parse_sggi_text(text: str) -> Sggi:
    """
    Parses the sggi text form.

    :raises DslParseError: The text is malformed.
    :raises SggiError: The generators do not form an sggi.
    """

    degree: Optional[int] = None
    gens: list[Permutation] = []
    for number, line in _content_lines(text):
        if degree is None:
            degree = _degree_header(number, line)
            continue
        try:
            gens.append(Permutation.parse(line, degree))
        except PermutationFormatError as e:
            raise DslParseError(number, str(e)) from e

    if degree is None:
        raise DslParseError(1, "missing `degree <n>` header")
    return make_sggi(degree, gens)


def is_graph_dsl(text: str) -> bool:
    "True if the text looks like the graph DSL rather than the sggi text form."

    return any(line.split()[0] == "edge" for _, line in _content_lines(text))


def read_sggi(text: str) -> Sggi:
    "Reads an sggi from either the graph DSL or the sggi text form."

    if is_graph_dsl(text):
        return sggi_of(parse_dsl(text))
    return parse_sggi_text(text)


def export_dot(graph: PermRepGraph) -> str:
    """
    Renders an undirected DOT graph with a `label` attribute on each edge.

    Every vertex is declared so that isolated vertices survive; double edges become parallel edges.
    """

    lines = ["graph {"]
    lines.extend(f"  {x};" for x in range(1, graph.degree + 1))
    lines.extend(f"  {e.u} -- {e.v} [label={e.label}];" for e in graph.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_HEADER = re.compile(r"^(?:strict\s+)?graph(?:\s+\w+)?\s*\{$")
_DOT_NODE = re.compile(r"^(\d+)\s*;?$")
_DOT_EDGE = re.compile(r'^(\d+)\s*--\s*(\d+)\s*\[\s*label\s*=\s*"?(\d+)"?\s*\]\s*;?$')


def read_dot(text: str) -> PermRepGraph:
    """
    Reads the DOT subset written by `export_dot`: node statements and `--` edges with a numeric `label`.

    :raises DslParseError: The text falls outside the supported subset.
    """

    lines = [(n, line.strip()) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines or not _DOT_HEADER.match(lines[0][1]):
        raise DslParseError(lines[0][0] if lines else 1, "expected: `graph {`")
    if lines[-1][1] != "}":
        raise DslParseError(lines[-1][0], "expected: `}`")

    degree = 0
    triples: list[tuple[int, int, int]] = []
    for number, line in lines[1:-1]:
        node = _DOT_NODE.match(line)
        if node:
            degree = max(degree, int(node.group(1)))
            continue
        edge = _DOT_EDGE.match(line)
        if edge:
            u, v, label = (int(g) for g in edge.groups())
            degree = max(degree, u, v)
            triples.append((u, v, label))
            continue
        raise DslParseError(number, f"unsupported DOT statement: {line!r}")

    try:
        return PermRepGraph.from_triples(degree, triples)
    except GraphError as e:
        raise DslParseError(lines[0][0], str(e)) from e


def sggi_dot(gamma: Sggi) -> str:
    return export_dot(graph_of(gamma))
