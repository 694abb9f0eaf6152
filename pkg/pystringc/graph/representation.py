"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module defines permutation representation graphs: edge-labelled multigraphs on `1..n` with an edge `{a,b}`
of label `i` whenever `a·ρ_i = b`.

:see: https://github.com/hunyadi/pystringc
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from ..model.permutation import Permutation
from ..sggi.core import Sggi, make_sggi

LOGGER = logging.getLogger("pystringc")


class GraphError(ValueError):
    "Raised when an edge-labelled graph is malformed or is not the graph of an sggi."


class MatchingViolation(GraphError):
    "Raised when edges of the same label share a vertex."

    label: int
    vertex: int

    def __init__(self, label: int, vertex: int) -> None:
        super().__init__(label, vertex)
        self.label = label
        self.vertex = vertex

    def __str__(self) -> str:
        return f"edges of label {self.label} do not form a matching at vertex {self.vertex}"


class SquareViolation(GraphError):
    "Raised when a component of an `{i,j}`-subgraph with `|i-j| ≥ 2` is not a vertex, an edge, a double edge or an alternating square."

    i: int
    j: int
    component: tuple[int, ...]

    def __init__(self, i: int, j: int, component: Iterable[int]) -> None:
        super().__init__(i, j)
        self.i = i
        self.j = j
        self.component = tuple(sorted(component))

    def __str__(self) -> str:
        points = ", ".join(str(x) for x in self.component)
        return f"labels {self.i} and {self.j}: component {{{points}}} is not an alternating square"


@dataclass(frozen=True)
class Edge:
    "An undirected labelled edge with `u < v`."

    u: int
    v: int
    label: int

    @classmethod
    def of(cls, a: int, b: int, label: int) -> "Edge":
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        if label < 0:
            raise GraphError(f"negative label {label}")
        return cls(min(a, b), max(a, b), label)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.label, self.u, self.v)

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)

    def __str__(self) -> str:
        return f"({self.u},{self.v},{self.label})"


@dataclass(frozen=True)
class PermRepGraph:
    """
    An edge-labelled multigraph on `1..degree`.

    Edges are kept in canonical order: by label, then by endpoints. Isolated vertices are represented through
    the explicit degree.

    :param degree: Number of vertices.
    :param edges: Labelled edges; each `(u, v, label)` triple appears at most once.
    """

    degree: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.edges, key=lambda e: e.key))
        seen: set[tuple[int, int, int]] = set()
        for e in ordered:
            if e.u == e.v:
                raise GraphError(f"loop at vertex {e.u}")
            if e.u < 1 or e.v > self.degree:
                raise GraphError(f"edge {e} outside vertices 1..{self.degree}")
            if e.key in seen:
                raise GraphError(f"repeated edge {e}")
            seen.add(e.key)
        object.__setattr__(self, "edges", ordered)

    @classmethod
    def from_triples(cls, degree: int, triples: Iterable[tuple[int, int, int]]) -> "PermRepGraph":
        return cls(degree, tuple(Edge.of(a, b, label) for a, b, label in triples))

    @property
    def rank(self) -> int:
        return max((e.label for e in self.edges), default=-1) + 1

    def labels(self) -> list[int]:
        return sorted({e.label for e in self.edges})

    def edges_of(self, *labels: int) -> list[Edge]:
        return [e for e in self.edges if e.label in labels]

    def triples(self) -> list[tuple[int, int, int]]:
        return [(e.u, e.v, e.label) for e in self.edges]

    def components(self, labels: Iterable[int]) -> list[tuple[int, ...]]:
        "Connected components of the subgraph with the given edge labels, by ascending least vertex."

        selected = set(labels)
        adjacent: dict[int, list[int]] = {x: [] for x in range(1, self.degree + 1)}
        for e in self.edges:
            if e.label in selected:
                adjacent[e.u].append(e.v)
                adjacent[e.v].append(e.u)

        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            seen.add(start)
            stack = [start]
            component = []
            while stack:
                x = stack.pop()
                component.append(x)
                for y in adjacent[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            result.append(tuple(sorted(component)))
        return result

    def validate(self) -> "PermRepGraph":
        """
        Checks that the graph is the permutation representation graph of an sggi.

        :raises MatchingViolation: Edges of one label share a vertex.
        :raises SquareViolation: Labels `i`, `j` with `|i-j| ≥ 2` span a component other than a single vertex, a
            single edge, a double edge or a square with alternating labels.
        """

        for label in self.labels():
            touched: set[int] = set()
            for e in self.edges_of(label):
                for x in e.ends:
                    if x in touched:
                        raise MatchingViolation(label, x)
                    touched.add(x)

        labels = self.labels()
        for i in labels:
            for j in labels:
                if j < i + 2:
                    continue
                edges = self.edges_of(i, j)
                for component in self.components((i, j)):
                    members = set(component)
                    count = sum(1 for e in edges if e.u in members)
                    if len(component) <= 2 or (len(component) == 4 and count == 4):
                        continue
                    raise SquareViolation(i, j, component)
        return self

    def __str__(self) -> str:
        return f"graph on {self.degree} vertices: {' '.join(str(e) for e in self.edges)}"


def graph_of(gamma: Sggi) -> PermRepGraph:
    "One edge of label `i` for each 2-cycle of `ρ_i`."

    edges = [
        Edge(a, b, label)
        for label, g in enumerate(gamma.gens)
        for a, b in g.transpositions()
    ]
    return PermRepGraph(gamma.degree, tuple(edges))


def sggi_of(graph: PermRepGraph, degree: Optional[int] = None) -> Sggi:
    """
    Builds the sggi whose generator `ρ_i` is the product of the label-`i` edges taken as transpositions.

    :param graph: A permutation representation graph.
    :param degree: Number of points, at least the number of vertices of the graph.
    :raises MatchingViolation: Edges of one label share a vertex.
    :raises SquareViolation: Non-adjacent labels do not commute.
    """

    graph.validate()
    if degree is None:
        degree = graph.degree
    elif degree < graph.degree:
        raise GraphError(f"degree {degree} is less than the number of vertices {graph.degree}")

    gens = [
        Permutation.from_cycles(degree, [e.ends for e in graph.edges_of(label)])
        for label in range(graph.rank)
    ]
    return make_sggi(degree, gens)
