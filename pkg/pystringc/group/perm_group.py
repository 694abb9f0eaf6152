"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module wraps the stabilizer-chain algorithms of SymPy behind an immutable, 1-based permutation group.

:see: https://github.com/hunyadi/pystringc
"""

import enum
import logging
import math
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from sympy.combinatorics import PermutationGroup
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics.named_groups import SymmetricGroup

from ..base import Config
from ..model.permutation import DegreeMismatchError, Parity, Permutation

LOGGER = logging.getLogger("pystringc")

_DEFAULTS = Config()


class IntersectionCapExceeded(RuntimeError):
    "Raised when an exact intersection would need a search larger than the configured cap."

    order: int
    cap: int

    def __init__(self, order: int, cap: int) -> None:
        super().__init__(order, cap)
        self.order = order
        self.cap = cap

    def __str__(self) -> str:
        return f"intersection search over a group of order {self.order} exceeds cap {self.cap}"


class GroupKind(enum.Enum):
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    OTHER = "other"


@dataclass(frozen=True)
class GroupIdentity:
    """
    Coarse identification of a permutation group.

    :param kind: Symmetric or alternating on the moved points, or anything else.
    :param degree: Number of moved points when the kind is symmetric or alternating.
    :param order: Exact group order.
    :param transitive: Whether the group is transitive on the full domain `1..n`.
    :param primitive: Whether a transitive group is primitive; `None` for intransitive groups.
    """

    kind: GroupKind
    degree: Optional[int]
    order: int
    transitive: bool
    primitive: Optional[bool]

    def __str__(self) -> str:
        if self.kind is GroupKind.SYMMETRIC:
            return f"S_{self.degree}"
        elif self.kind is GroupKind.ALTERNATING:
            return f"A_{self.degree}"
        else:
            return f"group of order {self.order}"


def _orbit_partition(degree: int, generators: Iterable[Permutation]) -> list[tuple[int, ...]]:
    parent = list(range(degree + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for x, y in enumerate(g.images, start=1):
            rx, ry = find(x), find(y)
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry

    classes: dict[int, list[int]] = {}
    for x in range(1, degree + 1):
        classes.setdefault(find(x), []).append(x)
    return [tuple(points) for _, points in sorted(classes.items())]


class PermGroup:
    """
    A permutation group on `1..degree` given by generators.

    The base and strong generating set is built on first demand, using the moved points in ascending order as
    the initial base, and is read-only afterwards.
    """

    degree: int
    generators: tuple[Permutation, ...]

    _lock: threading.Lock
    _group: Optional[PermutationGroup]
    _base: Optional[list[int]]
    _strong_gens: Optional[list[SymPermutation]]
    _order: Optional[int]

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()) -> None:
        if degree < 1:
            raise ValueError(f"expected: a positive degree; got: {degree}")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)

        self.degree = degree
        self.generators = gens
        self._lock = threading.Lock()
        self._group = None
        self._base = None
        self._strong_gens = None
        self._order = None

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        gens = [Permutation.transposition(degree, k, k + 1) for k in range(1, degree)]
        return cls(degree, gens)

    @classmethod
    def _from_sympy(cls, group: PermutationGroup, degree: int) -> "PermGroup":
        gens = [Permutation.from_sympy(g, degree) for g in group.generators]
        return cls(degree, [g for g in gens if not g.is_identity()])

    def _chain(self) -> PermutationGroup:
        if self._group is not None:
            return self._group

        with self._lock:
            if self._group is None:
                identity = SymPermutation(list(range(self.degree)), size=self.degree)
                gens = [g.to_sympy() for g in self.generators if not g.is_identity()]
                group = PermutationGroup(gens or [identity])
                points = sorted({x - 1 for g in self.generators for x in g.support()})
                base, strong_gens = group.schreier_sims_incremental(base=points or [0])
                self._base = base
                self._strong_gens = strong_gens
                self._order = group.order()
                self._group = group
        return self._group

    @property
    def base(self) -> list[int]:
        "Base points of the stabilizer chain, 1-based."

        self._chain()
        return [b + 1 for b in self._base or []]

    def order(self) -> int:
        self._chain()
        return self._order or 1

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(self.degree, p.degree)
        if p.is_identity():
            return True
        if not self.generators:
            return False
        return bool(self._chain().contains(p.to_sympy()))

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Permutation) and self.contains(p)

    def is_subgroup(self, other: "PermGroup") -> bool:
        "True if every generator of this group lies in the other group."

        return all(other.contains(g) for g in self.generators)

    def elements(self) -> Iterator[Permutation]:
        "Generates all elements; meant for small groups."

        if not self.generators:
            yield Permutation.identity(self.degree)
            return
        for af in self._chain().generate_schreier_sims(af=True):
            yield Permutation(self.degree, tuple(x + 1 for x in af))

    def orbits(self) -> list[tuple[int, ...]]:
        "The orbit partition of `1..degree`, orbits listed by ascending least point."

        return _orbit_partition(self.degree, self.generators)

    def support(self) -> list[int]:
        return sorted({x for g in self.generators for x in g.support()})

    def fixed_points(self) -> list[int]:
        moved = set(self.support())
        return [x for x in range(1, self.degree + 1) if x not in moved]

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def restrict_to_support(self) -> "PermGroup":
        "The faithful action on the moved points, relabelled to `1..m`."

        points = self.support()
        if not points:
            return PermGroup(1)
        return PermGroup(len(points), (g.restrict(points) for g in self.generators))

    def is_primitive(self) -> bool:
        """
        Decides primitivity of a transitive group.

        For every point `β ≠ 1`, the minimal block containing `{1, β}` must be the whole domain.
        """

        if not self.is_transitive():
            raise ValueError("primitivity is defined for transitive groups only")
        if self.degree <= 2:
            return True
        group = self._chain()
        for beta in range(1, self.degree):
            blocks = group.minimal_block([0, beta])
            if len(set(blocks)) > 1:
                LOGGER.debug(f"non-trivial block system containing {{1, {beta + 1}}}")
                return False
        return True

    def identify(self) -> GroupIdentity:
        "Recognizes symmetric and alternating groups on the moved points."

        return identify(self)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup({self.degree}, [{gens}])"


def build_chain(generators: Sequence[Permutation], degree: int) -> PermGroup:
    "Creates a group and builds its stabilizer chain eagerly."

    group = PermGroup(degree, generators)
    group.order()
    return group


def orbits(group: PermGroup) -> list[tuple[int, ...]]:
    return group.orbits()


def identify(group: PermGroup) -> GroupIdentity:
    order = group.order()
    transitive = group.is_transitive()
    primitive = group.is_primitive() if transitive else None

    support = group.support()
    m = len(support)
    kind = GroupKind.OTHER
    if m >= 2 and group.restrict_to_support().is_transitive():
        if order == math.factorial(m):
            kind = GroupKind.SYMMETRIC
        elif m >= 3 and 2 * order == math.factorial(m):
            if all(g.parity() is Parity.EVEN for g in group.generators):
                kind = GroupKind.ALTERNATING

    return GroupIdentity(
        kind=kind,
        degree=m if kind is not GroupKind.OTHER else None,
        order=order,
        transitive=transitive,
        primitive=primitive,
    )


def centralizer_in_symmetric(degree: int, elements: Sequence[Permutation]) -> PermGroup:
    "The centralizer of a set of permutations in the symmetric group on `1..degree`."

    if not elements or all(e.is_identity() for e in elements):
        return PermGroup.symmetric(degree)
    if degree == 1:
        return PermGroup(1)
    sym = SymmetricGroup(degree)
    target = PermutationGroup([e.to_sympy() for e in elements])
    return PermGroup._from_sympy(sym.centralizer(target), degree)


def _subgroup_from_elements(
    degree: int, elements: Iterable[Permutation], start: Sequence[Permutation]
) -> PermGroup:
    gens = list(start)
    result = PermGroup(degree, gens)
    for e in elements:
        if not result.contains(e):
            gens.append(e)
            result = PermGroup(degree, gens)
    return result


def _search(
    small: PermGroup, large: PermGroup, known: Optional[PermGroup], search_cap: int
) -> PermGroup:
    if small.order() > search_cap:
        raise IntersectionCapExceeded(small.order(), search_cap)

    LOGGER.debug(f"backtrack intersection over a group of order {small.order()}")
    target = large._chain()
    init = known._chain() if known is not None and known.generators else None
    found = small._chain().subgroup_search(
        lambda x: bool(target.contains(x)), init_subgroup=init
    )
    return PermGroup._from_sympy(found, small.degree)


def _ordered(g: PermGroup, h: PermGroup) -> tuple[PermGroup, PermGroup]:
    if g.degree != h.degree:
        raise DegreeMismatchError(g.degree, h.degree)
    return (g, h) if g.order() <= h.order() else (h, g)


def intersection(
    g: PermGroup,
    h: PermGroup,
    *,
    known: Optional[PermGroup] = None,
    cap: int = _DEFAULTS.intersection_cap,
    search_cap: int = _DEFAULTS.search_cap,
) -> PermGroup:
    """
    Computes the exact intersection of two groups acting on the same points.

    If the smaller group has at most `cap` elements, its elements are filtered by membership in the other group.
    Otherwise, a backtrack search over the stabilizer chain of the smaller group is run, pruned by membership in
    the larger group.

    :param known: A group known to be contained in the intersection; seeds the result.
    :param cap: Largest order enumerated element by element.
    :param search_cap: Largest order on which the backtrack search is attempted.
    """

    small, large = _ordered(g, h)
    if small.is_subgroup(large):
        return small

    if small.order() <= cap:
        start = list(known.generators) if known is not None else []
        candidates = (e for e in small.elements() if large.contains(e))
        return _subgroup_from_elements(small.degree, candidates, start)

    return _search(small, large, known, search_cap)


def intersection_order(
    g: PermGroup,
    h: PermGroup,
    *,
    known: Optional[PermGroup] = None,
    cap: int = _DEFAULTS.intersection_cap,
    search_cap: int = _DEFAULTS.search_cap,
) -> int:
    """
    The order of the intersection of two groups.

    Small groups are counted element by element without building the intersection subgroup.
    """

    small, large = _ordered(g, h)
    if small.is_subgroup(large):
        return small.order()

    if small.order() <= cap:
        target = large._chain()
        return sum(
            1
            for af in small._chain().generate_schreier_sims(af=True)
            if target.contains(SymPermutation(af))
        )

    return _search(small, large, known, search_cap).order()
