"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module analyses the orbit structure of maximal parabolic subgroups: fracture graphs, 2-fracture graphs,
splits and perfect splits.

:see: https://github.com/hunyadi/pystringc
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph.representation import Edge, PermRepGraph
from .model.permutation import Permutation
from .sggi.core import Sggi
from .sggi.verdict import is_string_cgroup

LOGGER = logging.getLogger("pystringc")


def _orbit_index(orbits: list[tuple[int, ...]]) -> dict[int, int]:
    return {x: k for k, orbit in enumerate(orbits) for x in orbit}


def crossing_edges(gamma: Sggi, label: int) -> list[Edge]:
    "The 2-cycles of `ρ_i` whose points lie in different `G_i`-orbits, in lexicographic order."

    index = _orbit_index(gamma.maximal_parabolic(label).orbits())
    return [
        Edge(a, b, label)
        for a, b in gamma.gens[label].transpositions()
        if index[a] != index[b]
    ]


@dataclass(frozen=True)
class FractureGraph:
    """
    One orbit-crossing edge per label, forming a spanning forest of the permutation representation graph.

    :param degree: Number of vertices.
    :param edges: The chosen edges, the edge of label `i` at position `i`.
    """

    degree: int
    edges: tuple[Edge, ...]

    def graph(self) -> PermRepGraph:
        return PermRepGraph(self.degree, self.edges)


def _is_forest(degree: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(degree + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def fracture_graph(gamma: Sggi) -> Optional[FractureGraph]:
    """
    Finds a fracture graph.

    Labels are processed in ascending order; for each label the lexicographically least crossing edge that keeps
    the chosen edges acyclic is taken, backtracking when a later label has no admissible edge.
    """

    candidates = [crossing_edges(gamma, i) for i in range(gamma.rank)]
    if any(not edges for edges in candidates):
        return None

    chosen: list[Edge] = []

    def search(label: int) -> bool:
        if label == gamma.rank:
            return True
        for edge in candidates[label]:
            if _is_forest(gamma.degree, chosen + [edge]):
                chosen.append(edge)
                if search(label + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        return None
    return FractureGraph(gamma.degree, tuple(chosen))


def two_fracture_graph(gamma: Sggi) -> Optional[PermRepGraph]:
    "Takes the two lexicographically least crossing edges of every label, if every label has two."

    edges: list[Edge] = []
    for i in range(gamma.rank):
        crossing = crossing_edges(gamma, i)
        if len(crossing) < 2:
            return None
        edges.extend(crossing[:2])
    return PermRepGraph(gamma.degree, tuple(edges))


def is_two_fracture_selection(gamma: Sggi, triples: Iterable[tuple[int, int, int]]) -> bool:
    "True if the given edges are two orbit-crossing edges of `ρ_i` for every label `i`."

    selected = [Edge.of(a, b, label) for a, b, label in triples]
    for i in range(gamma.rank):
        crossing = set(crossing_edges(gamma, i))
        edges = [e for e in selected if e.label == i]
        if len(edges) != 2 or not all(e in crossing for e in edges):
            return False
    return len(selected) == 2 * gamma.rank


@dataclass(frozen=True)
class SideActions:
    """
    The decomposition `ρ_j = α_j·β_j` (times the crossing transposition when `j` is the split label).

    :param alpha: Action on the first side `O_1`.
    :param beta: Action on the second side `O_2`.
    """

    alpha: Permutation
    beta: Permutation


@dataclass(frozen=True)
class SplitRecord:
    "JSON form of a split."

    label: int
    pair: tuple[int, int]
    n1: int
    n2: int
    perfect: bool
    j_a: list[int]
    j_b: list[int]
    alpha: str
    beta: str


@dataclass(frozen=True)
class SplitReport:
    """
    An `i`-split `{a, b}` and the decomposition of the generators across its two sides.

    :param label: The split label `i`.
    :param a: The endpoint of the crossing transposition on the first side.
    :param b: The endpoint of the crossing transposition on the second side.
    :param first: The first side `O_1`.
    :param second: The second side `O_2`.
    :param decomposition: Side actions of every generator.
    :param j_a: Labels other than `i` acting non-trivially on `O_1`.
    :param j_b: Labels other than `i` acting non-trivially on `O_2`.
    :param perfect: Whether `α_j` is trivial for all `j > i` and `β_j` is trivial for all `j < i`.
    """

    label: int
    a: int
    b: int
    first: tuple[int, ...]
    second: tuple[int, ...]
    decomposition: tuple[SideActions, ...]
    j_a: tuple[int, ...]
    j_b: tuple[int, ...]
    perfect: bool

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def alpha(self) -> Permutation:
        return self.decomposition[self.label].alpha

    @property
    def beta(self) -> Permutation:
        return self.decomposition[self.label].beta

    def record(self) -> SplitRecord:
        return SplitRecord(
            label=self.label,
            pair=self.pair,
            n1=len(self.first),
            n2=len(self.second),
            perfect=self.perfect,
            j_a=list(self.j_a),
            j_b=list(self.j_b),
            alpha=str(self.alpha),
            beta=str(self.beta),
        )

    def __str__(self) -> str:
        kind = "perfect" if self.perfect else "not perfect"
        return f"{self.label}-split {{{self.a},{self.b}}} ({kind}), sides of size {len(self.first)} and {len(self.second)}"


def _side_action(g: Permutation, side: set[int], drop: Optional[tuple[int, int]]) -> Permutation:
    cycles = [
        c
        for c in g.cycles()
        if c[0] in side and (drop is None or set(c) != set(drop))
    ]
    return Permutation.from_cycles(g.degree, cycles)


def _split_sides(gamma: Sggi, label: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...], int, int]]:
    whole = gamma.group.orbits()
    parts = gamma.maximal_parabolic(label).orbits()
    if len(parts) != len(whole) + 1:
        return None

    index = _orbit_index(parts)
    crossing = [
        (a, b) for a, b in gamma.gens[label].transpositions() if index[a] != index[b]
    ]
    if len(crossing) != 1:
        return None

    a, b = crossing[0]
    first, second = parts[index[a]], parts[index[b]]
    if min(second) < min(first):
        first, second, a, b = second, first, b, a
    return first, second, a, b


def _perfect(label: int, rank: int, decomposition: list[SideActions]) -> bool:
    return all(decomposition[j].alpha.is_identity() for j in range(label + 1, rank)) and all(
        decomposition[j].beta.is_identity() for j in range(label)
    )


def split_report(gamma: Sggi, label: int) -> Optional[SplitReport]:
    """
    Analyses label `i` as a potential split.

    The first side holds the smaller least point, unless the split is perfect only with the sides exchanged, in
    which case the sides are exchanged so that lower labels act on the first side.
    """

    sides = _split_sides(gamma, label)
    if sides is None:
        return None
    first, second, a, b = sides

    def decompose(o1: tuple[int, ...], o2: tuple[int, ...], pair: tuple[int, int]) -> list[SideActions]:
        s1, s2 = set(o1), set(o2)
        result = []
        for j, g in enumerate(gamma.gens):
            drop = pair if j == label else None
            result.append(SideActions(_side_action(g, s1, drop), _side_action(g, s2, drop)))
        return result

    decomposition = decompose(first, second, (a, b))
    perfect = _perfect(label, gamma.rank, decomposition)
    if not perfect:
        swapped = decompose(second, first, (a, b))
        if _perfect(label, gamma.rank, swapped):
            first, second, a, b = second, first, b, a
            decomposition, perfect = swapped, True

    return SplitReport(
        label=label,
        a=a,
        b=b,
        first=first,
        second=second,
        decomposition=tuple(decomposition),
        j_a=tuple(j for j, d in enumerate(decomposition) if j != label and not d.alpha.is_identity()),
        j_b=tuple(j for j, d in enumerate(decomposition) if j != label and not d.beta.is_identity()),
        perfect=perfect,
    )


def is_split(gamma: Sggi, label: int) -> bool:
    return _split_sides(gamma, label) is not None


def find_splits(gamma: Sggi) -> list[SplitReport]:
    """
    Reports every split label, including the extreme labels `0` and `r-1`.

    Both split conditions are evaluated whether or not the sggi has a fracture graph.
    """

    reports = []
    for label in range(gamma.rank):
        report = split_report(gamma, label)
        if report is not None:
            reports.append(report)
    return reports


@dataclass(frozen=True)
class Attachment:
    """
    Outcome of attaching a perfect split at a pendant extreme edge.

    :param attachable: Whether some attachment yields a string C-group.
    :param extended: The extended sggi of the first successful attachment.
    :param vertex: The degree-one vertex the new point was attached to.
    :param label: Label of the new transposition in the extended sggi.
    """

    attachable: bool
    extended: Optional[Sggi] = None
    vertex: Optional[int] = None
    label: Optional[int] = None


def _pendant_vertices(gamma: Sggi, label: int) -> list[int]:
    "Vertices moved by `ρ_label` and fixed by every other generator."

    others = [g for j, g in enumerate(gamma.gens) if j != label]
    return [
        x for x in gamma.gens[label].support() if all(g.image(x) == x for g in others)
    ]


def attach_extreme(gamma: Sggi, vertex: int, *, first: bool) -> Sggi:
    """
    Adds the point `n+1` and a transposition `(vertex, n+1)` as a new first or last generator.

    :param vertex: A vertex fixed by all generators except the extreme one on the chosen side.
    :param first: Whether the new transposition becomes `ρ_0` (otherwise `ρ_r`).
    """

    degree = gamma.degree + 1
    lifted = [g.extend(degree) for g in gamma.gens]
    new = Permutation.transposition(degree, vertex, degree)
    gens = [new] + lifted if first else lifted + [new]
    return Sggi(degree, tuple(gens))


def is_split_attachable(gamma: Sggi) -> Attachment:
    """
    Decides whether a string C-group extends to a larger one with a perfect split attached at a pendant edge.

    Pendant `0`-edges are tried before pendant `(r-1)`-edges, vertices in ascending order.
    """

    if gamma.rank == 0:
        return Attachment(False)

    attempts = [(v, True) for v in _pendant_vertices(gamma, 0)]
    attempts.extend((v, False) for v in _pendant_vertices(gamma, gamma.rank - 1))
    for vertex, first in attempts:
        extended = attach_extreme(gamma, vertex, first=first)
        label = 0 if first else extended.rank - 1
        report = split_report(extended, label)
        if report is None or not report.perfect:
            continue
        if is_string_cgroup(extended).is_string_c:
            LOGGER.debug(f"perfect split attached at vertex {vertex} with label {label}")
            return Attachment(True, extended, vertex, label)

    return Attachment(False)
