"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module enumerates string C-groups of the symmetric group of a given degree and rank, up to isomorphism and
duality.

The search fixes `ρ_0` to a representative of each class of involutions, then adds one generator at a time. At
each level only the least candidate of each orbit under the centralizer of the generators chosen so far is
explored, so every conjugacy class of generator tuples is reached at least once. Completed tuples are filtered by
group order and the intersection property, and deduplicated by simultaneous conjugacy, duality and, on six
points, the outer automorphism.

:see: https://github.com/hunyadi/pystringc
"""

import dataclasses
import logging
import math
import threading
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from ..base import Config
from ..fracture import fracture_graph
from ..graph.exchange import print_dsl
from ..graph.representation import graph_of
from ..group.conjugacy import are_conjugate, outer_automorphism_s6
from ..group.perm_group import PermGroup, centralizer_in_symmetric
from ..model.permutation import Permutation, compose, involutions
from ..sggi.core import RankError, Sggi, dual, schlafli
from ..sggi.verdict import CGroupChecker, Verdict
from ..util.dispatch import parallel_map

LOGGER = logging.getLogger("pystringc")

# pruned branches are re-examined only up to this degree
RECHECK_MAX_DEGREE = 6


class ClassificationError(RuntimeError):
    "Raised when a classification cannot be carried out or its result contradicts expectations."


class DegreeTooLarge(ClassificationError):
    "Raised when the degree exceeds the configured maximum."

    degree: int
    maximum: int

    def __init__(self, degree: int, maximum: int) -> None:
        super().__init__(degree, maximum)
        self.degree = degree
        self.maximum = maximum

    def __str__(self) -> str:
        return f"degree {self.degree} exceeds the configured maximum {self.maximum}"


class PruneLost(ClassificationError):
    "Raised when re-examining a pruned branch turns up a string C-group of the symmetric group."

    reason: str
    gamma: Sggi

    def __init__(self, reason: str, gamma: Sggi) -> None:
        super().__init__(reason, gamma)
        self.reason = reason
        self.gamma = gamma

    def __str__(self) -> str:
        return f"prune rule `{self.reason}` discarded the string C-group {self.gamma}"


@dataclass
class SearchStats:
    """
    Counters collected during a search.

    :param nodes: Generator prefixes visited.
    :param leaves: Complete generator tuples examined.
    :param accepted: Complete tuples found to be string C-groups of the symmetric group.
    :param indeterminate: Complete tuples whose verdict hit a resource cap.
    :param prunes: Number of prefixes or tuples rejected, by reason.
    """

    nodes: int = 0
    leaves: int = 0
    accepted: int = 0
    indeterminate: int = 0
    prunes: dict[str, int] = field(default_factory=dict)

    def prune(self, reason: str) -> None:
        self.prunes[reason] = self.prunes.get(reason, 0) + 1

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.accepted += other.accepted
        self.indeterminate += other.indeterminate
        for reason, count in other.prunes.items():
            self.prunes[reason] = self.prunes.get(reason, 0) + count


@dataclass(frozen=True)
class RepresentativeRecord:
    "JSON form of a class representative."

    generators: list[str]
    schlafli: list[int]
    graph_dsl: str


@dataclass(frozen=True)
class ClassificationRecord:
    """
    JSON form of a classification result.

    :param degree: Number of points `n`.
    :param rank: Number of generators `r`.
    :param count: Number of classes up to isomorphism and duality.
    :param inner_count: Number of classes up to conjugacy in the symmetric group and duality.
    :param complete: False if some verdict was indeterminate.
    :param representatives: One string C-group per class.
    :param stats: Search counters.
    :param config: Configuration the search ran with.
    """

    degree: int
    rank: int
    count: int
    inner_count: int
    complete: bool
    representatives: list[RepresentativeRecord]
    stats: SearchStats
    config: Config


@dataclass
class ClassificationResult:
    """
    String C-groups of the symmetric group of degree `n` and rank `r`, one per class.

    :param degree: Number of points `n`.
    :param rank: Number of generators `r`.
    :param representatives: The first string C-group found in each class, in search order.
    :param inner_count: Number of classes when only inner automorphisms are used; differs from `count` only on
        six points.
    :param complete: False if some verdict was indeterminate, in which case the classes are a lower bound.
    :param stats: Search counters.
    :param config: Configuration the search ran with.
    """

    degree: int
    rank: int
    representatives: list[Sggi]
    inner_count: int
    complete: bool
    stats: SearchStats
    config: Config

    @property
    def count(self) -> int:
        return len(self.representatives)

    def record(self) -> ClassificationRecord:
        return ClassificationRecord(
            degree=self.degree,
            rank=self.rank,
            count=self.count,
            inner_count=self.inner_count,
            complete=self.complete,
            representatives=[
                RepresentativeRecord(
                    generators=[str(g) for g in gamma.gens],
                    schlafli=list(schlafli(gamma)),
                    graph_dsl=print_dsl(graph_of(gamma)),
                )
                for gamma in self.representatives
            ],
            stats=self.stats,
            config=self.config,
        )


def involution_classes(degree: int) -> list[Permutation]:
    "Representatives `(1,2)`, `(1,2)(3,4)`, ... of the conjugacy classes of involutions."

    return [
        Permutation.from_cycles(degree, [(2 * j + 1, 2 * j + 2) for j in range(k)])
        for k in range(1, degree // 2 + 1)
    ]


def _commute(p: Permutation, q: Permutation) -> bool:
    return compose(p, q) == compose(q, p)


def equivalent(p: Sggi, q: Sggi, *, outer: bool = True) -> bool:
    """
    True if `P` is isomorphic to `Q` or to the dual of `Q`, as string C-groups of the symmetric group.

    Isomorphism is simultaneous conjugacy; on six points, the outer automorphism is also applied unless `outer`
    is false.
    """

    if p.degree != q.degree or p.rank != q.rank:
        return False

    targets = [q.gens, dual(q).gens]
    sources = [p.gens]
    if outer and p.degree == 6:
        sources.append(outer_automorphism_s6().apply(p.gens))
    return any(are_conjugate(s, t) for s in sources for t in targets)


def _canonical_candidates(
    degree: int, prefix: Sequence[Permutation], candidates: Sequence[Permutation]
) -> list[Permutation]:
    "The least element of each orbit of the candidates under conjugation by the centralizer of the prefix."

    index = {p: k for k, p in enumerate(candidates)}
    parent = list(range(len(candidates)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in centralizer_in_symmetric(degree, prefix).generators:
        for k, p in enumerate(candidates):
            image = index.get(p.conjugate(g))
            if image is None:
                continue
            a, b = find(k), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)

    # candidates are sorted, so the root of each orbit is its least element
    return [p for k, p in enumerate(candidates) if find(k) == k]


@dataclass
class _Subtree:
    found: list[Sggi]
    stats: SearchStats
    complete: bool


class _Search:
    degree: int
    rank: int
    config: Config
    checker: CGroupChecker
    full_order: int
    needs_fracture: bool
    all_involutions: list[Permutation]
    total: int
    finished: int
    lock: threading.Lock

    def __init__(self, degree: int, rank: int, config: Config, checker: CGroupChecker) -> None:
        self.degree = degree
        self.rank = rank
        self.config = config
        self.checker = checker
        self.full_order = math.factorial(degree)
        self.needs_fracture = 2 * rank >= degree + 3
        self.all_involutions = involutions(degree)
        self.total = 0
        self.finished = 0
        self.lock = threading.Lock()

    def roots(self) -> list[tuple[Permutation, Permutation]]:
        "Prefixes of length two that partition the search tree."

        result: list[tuple[Permutation, Permutation]] = []
        for first in involution_classes(self.degree):
            for second in _canonical_candidates(self.degree, [first], self.all_involutions):
                if second != first:
                    result.append((first, second))
        return result

    def explore(self, root: tuple[Permutation, Permutation]) -> _Subtree:
        subtree = _Subtree([], SearchStats(), True)
        prefix = list(root)
        subtree.stats.nodes += 1
        commuting = [p for p in self.all_involutions if _commute(p, prefix[0])]
        self._descend(prefix, [self.all_involutions, commuting], subtree)

        with self.lock:
            self.finished += 1
            finished = self.finished
        LOGGER.info(
            f"subtree {finished}/{self.total} [{root[0]}, {root[1]}]: {len(subtree.found)} classes, "
            f"{subtree.stats.nodes} nodes"
        )
        return subtree

    def _accepts(self, gamma: Sggi) -> bool:
        "True if the sggi is a string C-group of the symmetric group acting transitively."

        if not gamma.is_transitive() or gamma.group.order() != self.full_order:
            return False
        return self.checker.check(gamma).verdict is Verdict.TRUE

    def _completions(self, prefix: list[Permutation]) -> Iterator[list[Permutation]]:
        if len(prefix) == self.rank:
            yield prefix
            return
        for candidate in self.all_involutions:
            if all(_commute(candidate, p) for p in prefix[:-1]):
                yield from self._completions(prefix + [candidate])

    def _prune(self, stats: SearchStats, reason: str, prefix: list[Permutation]) -> None:
        "Counts a prune and, in re-check mode, examines every completion of the discarded prefix."

        stats.prune(reason)
        if not self.config.recheck_prunes or self.degree > RECHECK_MAX_DEGREE:
            return
        for gens in self._completions(prefix):
            gamma = Sggi(self.degree, tuple(gens))
            if self._accepts(gamma):
                raise PruneLost(reason, gamma)

    def _descend(
        self,
        prefix: list[Permutation],
        commuting: list[list[Permutation]],
        subtree: _Subtree,
    ) -> None:
        stats = subtree.stats
        if len(prefix) == self.rank:
            self._leaf(prefix, subtree)
            return

        group = PermGroup(self.degree, prefix)
        if group.order() == self.full_order:
            # a further generator would lie in the group generated by the prefix
            self._prune(stats, "order", prefix)
            return

        # `ρ_i` commutes with `ρ_0, ..., ρ_{i-2}`
        candidates = commuting[len(prefix) - 1]
        for candidate in _canonical_candidates(self.degree, prefix, candidates):
            stats.nodes += 1
            # `⟨ρ_0, ..., ρ_{i-1}⟩ ∩ ⟨ρ_i⟩` is trivial in a string C-group
            if group.contains(candidate):
                self._prune(stats, "membership", prefix + [candidate])
                continue

            extended = prefix + [candidate]
            if len(extended) >= 3 and len(extended) < self.rank:
                # a parabolic subgroup of a string C-group is a string C-group
                verdict = self.checker.check(Sggi(self.degree, tuple(extended)))
                if verdict.verdict is Verdict.FALSE:
                    self._prune(stats, "prefix", extended)
                    continue

            following = [p for p in candidates if _commute(p, prefix[-1])]
            self._descend(extended, commuting + [following], subtree)

    def _leaf(self, gens: list[Permutation], subtree: _Subtree) -> None:
        stats = subtree.stats
        stats.leaves += 1
        gamma = Sggi(self.degree, tuple(gens))

        group = gamma.group
        if not group.is_transitive():
            stats.prune("intransitive")
            return
        if group.order() != self.full_order:
            stats.prune("not symmetric")
            return
        # string C-groups of high rank for the symmetric group admit a fracture graph
        if self.needs_fracture and fracture_graph(gamma) is None:
            self._prune(stats, "fracture", gens)
            return

        verdict = self.checker.check(gamma)
        if verdict.verdict is Verdict.FALSE:
            stats.prune("intersection")
            return
        if verdict.verdict is Verdict.INDETERMINATE:
            stats.indeterminate += 1
            subtree.complete = False
            return

        stats.accepted += 1
        if not any(equivalent(gamma, other, outer=False) for other in subtree.found):
            subtree.found.append(gamma)


def _check_arguments(degree: int, rank: int, config: Config) -> None:
    if degree > config.max_degree:
        raise DegreeTooLarge(degree, config.max_degree)
    if rank < 3:
        raise RankError(rank, "classification requires rank at least 3")


def _deduplicate(found: Sequence[Sggi], *, outer: bool) -> list[Sggi]:
    representatives: list[Sggi] = []
    for gamma in found:
        if not any(equivalent(gamma, other, outer=outer) for other in representatives):
            representatives.append(gamma)
    return representatives


def _result(
    degree: int,
    rank: int,
    found: Sequence[Sggi],
    complete: bool,
    stats: SearchStats,
    config: Config,
) -> ClassificationResult:
    inner = _deduplicate(found, outer=False)
    representatives = _deduplicate(inner, outer=True) if degree == 6 else inner
    if len(inner) != len(representatives):
        LOGGER.info(
            f"outer automorphism merges {len(inner)} classes into {len(representatives)} on six points"
        )
    return ClassificationResult(
        degree=degree,
        rank=rank,
        representatives=representatives,
        inner_count=len(inner),
        complete=complete,
        stats=stats,
        config=config,
    )


def enumerate_string_cgroups(degree: int, rank: int, *, config: Optional[Config] = None) -> ClassificationResult:
    """
    Enumerates string C-groups of the symmetric group of a given degree and rank, up to isomorphism and duality.

    The search tree is partitioned by the first two generators; subtrees are explored by `config.workers`
    threads and merged in a fixed order, so the result does not depend on the number of workers.

    :param degree: Number of points `n`.
    :param rank: Number of generators `r`, at least 3.
    :param config: Resource caps and worker count.
    :raises DegreeTooLarge: The degree exceeds `config.max_degree`.
    """

    if config is None:
        config = Config()
    _check_arguments(degree, rank, config)

    checker = CGroupChecker(config.intersection_cap, config.search_cap)
    search = _Search(degree, rank, config, checker)
    roots = search.roots()
    search.total = len(roots)
    LOGGER.info(f"classifying degree {degree} rank {rank}: {len(roots)} subtrees")

    subtrees = parallel_map(search.explore, roots, workers=config.workers)

    stats = SearchStats()
    found: list[Sggi] = []
    complete = True
    for subtree in subtrees:
        stats.merge(subtree.stats)
        found.extend(subtree.found)
        complete = complete and subtree.complete

    result = _result(degree, rank, found, complete, stats, config)
    LOGGER.info(
        f"degree {degree} rank {rank}: {result.count} classes "
        f"({stats.nodes} nodes, {stats.leaves} leaves, prunes {stats.prunes})"
    )
    return result


def enumerate_reference(degree: int, rank: int, *, config: Optional[Config] = None) -> ClassificationResult:
    """
    Enumerates the same classes as `enumerate_string_cgroups` by examining every sggi of the given degree and rank.

    No symmetry reduction or pruning is applied; the only restriction while extending a tuple is the commuting
    property that defines an sggi.
    """

    if config is None:
        config = Config()
    _check_arguments(degree, rank, config)

    checker = CGroupChecker(config.intersection_cap, config.search_cap)
    full_order = math.factorial(degree)
    all_involutions = involutions(degree)
    stats = SearchStats()
    found: list[Sggi] = []
    complete = True

    def extend(prefix: list[Permutation]) -> None:
        nonlocal complete
        stats.nodes += 1
        if len(prefix) == rank:
            stats.leaves += 1
            gamma = Sggi(degree, tuple(prefix))
            if not gamma.is_transitive() or gamma.group.order() != full_order:
                return
            verdict = checker.check(gamma)
            if verdict.verdict is Verdict.INDETERMINATE:
                stats.indeterminate += 1
                complete = False
            elif verdict.verdict is Verdict.TRUE:
                stats.accepted += 1
                if not any(equivalent(gamma, other, outer=False) for other in found):
                    found.append(gamma)
            return

        for candidate in all_involutions:
            if all(_commute(candidate, p) for p in prefix[:-1]):
                extend(prefix + [candidate])

    extend([])
    return _result(degree, rank, found, complete, stats, config)


def sigma(degree: int, kappa: int, *, config: Optional[Config] = None) -> int:
    """
    The number of string C-groups of rank `n-κ` for the symmetric group of degree `n`, up to isomorphism and
    duality.

    :raises RankError: The rank `n-κ` is less than 3.
    """

    if kappa < 1:
        raise ValueError(f"expected: a positive corank; got: {kappa}")
    return enumerate_string_cgroups(degree, degree - kappa, config=config).count


def rerun_with_single_worker(result: ClassificationResult) -> bool:
    "Repeats a classification with one worker and reports whether the representative lists coincide."

    config = dataclasses.replace(result.config, workers=1)
    again = enumerate_string_cgroups(result.degree, result.rank, config=config)
    return [g.gens for g in again.representatives] == [g.gens for g in result.representatives]
