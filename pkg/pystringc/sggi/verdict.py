"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module decides the intersection property of an sggi.

The recursive checker verifies that `Γ_0` and `Γ_{r-1}` are string C-groups and that `G_0 ∩ G_{r-1} = G_{0,r-1}`,
comparing orders. Intermediate verdicts are memoized on the faithful action of each generator subtuple, so
copies of the same parabolic on different points share a cache entry. The brute-force checker compares
`|G_J ∩ G_K|` with `|G_{J∩K}|` for every pair of index sets and serves as an oracle.

:see: https://github.com/hunyadi/pystringc
"""

import enum
import itertools
import logging
import threading
from dataclasses import dataclass
from typing import Optional, Sequence

from ..base import Config
from ..group.perm_group import IntersectionCapExceeded, PermGroup, intersection_order
from ..model.permutation import Permutation
from .core import RankError, Sggi

LOGGER = logging.getLogger("pystringc")

_DEFAULTS = Config()

BRUTEFORCE_MAX_RANK = 7


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"
    "A resource cap was reached before an exact answer was found."


@dataclass(frozen=True)
class Witness:
    """
    A pair of index sets violating the intersection property.

    :param left: Index set `J`.
    :param right: Index set `K`.
    :param intersection_order: Order of `⟨ρ_J⟩ ∩ ⟨ρ_K⟩`.
    :param expected_order: Order of `⟨ρ_{J∩K}⟩`.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    intersection_order: int
    expected_order: int

    def shift(self, offset: int) -> "Witness":
        return Witness(
            tuple(j + offset for j in self.left),
            tuple(k + offset for k in self.right),
            self.intersection_order,
            self.expected_order,
        )

    def __str__(self) -> str:
        def name(indices: tuple[int, ...]) -> str:
            return "{" + ",".join(str(i) for i in indices) + "}"

        return (
            f"|<ρ_J> ∩ <ρ_K>|={self.intersection_order} vs |<ρ_(J∩K)>|={self.expected_order} "
            f"with J={name(self.left)}, K={name(self.right)}"
        )


@dataclass(frozen=True)
class CVerdict:
    """
    Outcome of a string C-group check.

    :param verdict: True, false or indeterminate.
    :param witness: Present if and only if the verdict is false.
    :param reason: Explanation of an indeterminate verdict.
    """

    verdict: Verdict
    witness: Optional[Witness] = None
    reason: Optional[str] = None

    @property
    def is_string_c(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def is_determinate(self) -> bool:
        return self.verdict is not Verdict.INDETERMINATE

    def shift(self, offset: int) -> "CVerdict":
        if self.witness is None:
            return self
        return CVerdict(self.verdict, self.witness.shift(offset), self.reason)

    def __str__(self) -> str:
        if self.verdict is Verdict.FALSE and self.witness is not None:
            return f"false; witness {self.witness}"
        elif self.verdict is Verdict.INDETERMINATE:
            return f"indeterminate ({self.reason})"
        else:
            return self.verdict.value


_TRUE = CVerdict(Verdict.TRUE)

_Key = tuple[int, tuple[tuple[int, ...], ...]]


def _canonical(gens: Sequence[Permutation]) -> tuple[_Key, list[Permutation]]:
    points = sorted({x for g in gens for x in g.support()})
    restricted = [g.restrict(points) for g in gens]
    return (len(points), tuple(g.images for g in restricted)), restricted


class CGroupChecker:
    """
    Recursive string C-group checker with a memo shared across calls.

    The memo is safe to read concurrently; writes are serialized. Only determinate verdicts are cached, since an
    indeterminate verdict depends on the resource caps in effect.
    """

    cap: int
    search_cap: int

    _lock: threading.Lock
    _memo: dict[_Key, CVerdict]

    def __init__(
        self,
        cap: int = _DEFAULTS.intersection_cap,
        search_cap: int = _DEFAULTS.search_cap,
    ) -> None:
        self.cap = cap
        self.search_cap = search_cap
        self._lock = threading.Lock()
        self._memo = {}

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()

    def __len__(self) -> int:
        return len(self._memo)

    def check(self, gamma: Sggi) -> CVerdict:
        return self._check(list(gamma.gens))

    def _check(self, gens: list[Permutation]) -> CVerdict:
        rank = len(gens)
        if rank <= 1:
            return _TRUE
        if rank == 2:
            if gens[0] == gens[1]:
                return CVerdict(Verdict.FALSE, Witness((0,), (1,), 2, 1))
            return _TRUE

        key, restricted = _canonical(gens)
        cached = self._memo.get(key)
        if cached is not None:
            LOGGER.debug(f"verdict cache hit for rank {rank} on {key[0]} points")
            return cached

        verdict = self._evaluate(restricted)
        if verdict.is_determinate:
            with self._lock:
                self._memo[key] = verdict
        return verdict

    def _evaluate(self, gens: list[Permutation]) -> CVerdict:
        rank = len(gens)
        indeterminate: Optional[CVerdict] = None

        upper = self._check(gens[1:])
        if upper.verdict is Verdict.FALSE:
            return upper.shift(1)
        elif upper.verdict is Verdict.INDETERMINATE:
            indeterminate = upper

        lower = self._check(gens[:-1])
        if lower.verdict is Verdict.FALSE:
            return lower
        elif lower.verdict is Verdict.INDETERMINATE:
            indeterminate = lower

        degree = gens[0].degree
        g_first = PermGroup(degree, gens[1:])
        g_last = PermGroup(degree, gens[:-1])
        g_both = PermGroup(degree, gens[1:-1])
        try:
            order = intersection_order(
                g_first, g_last, known=g_both, cap=self.cap, search_cap=self.search_cap
            )
        except IntersectionCapExceeded as e:
            LOGGER.warning(f"string C-group check of rank {rank} is indeterminate: {e}")
            return CVerdict(Verdict.INDETERMINATE, reason=str(e))

        expected = g_both.order()
        if order != expected:
            witness = Witness(
                tuple(range(1, rank)), tuple(range(0, rank - 1)), order, expected
            )
            return CVerdict(Verdict.FALSE, witness)

        return indeterminate or _TRUE


_checker = CGroupChecker()


def is_string_cgroup(gamma: Sggi, *, config: Optional[Config] = None) -> CVerdict:
    """
    Decides whether an sggi is a string C-group.

    :param gamma: The sggi to check.
    :param config: Resource caps; when omitted, a process-wide checker with default caps and a shared memo is used.
    """

    if config is None or (
        config.intersection_cap == _checker.cap and config.search_cap == _checker.search_cap
    ):
        return _checker.check(gamma)
    return CGroupChecker(config.intersection_cap, config.search_cap).check(gamma)


def intersection_property_bruteforce(gamma: Sggi, *, config: Optional[Config] = None) -> CVerdict:
    """
    Checks `⟨ρ_J⟩ ∩ ⟨ρ_K⟩ = ⟨ρ_{J∩K}⟩` for every pair of index sets directly.

    Pairs are visited with `J` and then `K` in ascending order of their bit masks; the first violation is the
    witness. Pairs where one set contains the other hold trivially and are skipped.

    :raises RankError: The rank exceeds the supported bound.
    """

    if gamma.rank > BRUTEFORCE_MAX_RANK:
        raise RankError(gamma.rank, f"brute-force check supports rank up to {BRUTEFORCE_MAX_RANK}")
    if config is None:
        config = _DEFAULTS

    def indices(mask: int) -> tuple[int, ...]:
        return tuple(i for i in range(gamma.rank) if mask >> i & 1)

    groups: dict[int, PermGroup] = {}

    def group(mask: int) -> PermGroup:
        if mask not in groups:
            groups[mask] = gamma.subgroup(indices(mask))
        return groups[mask]

    full = 1 << gamma.rank
    for left, right in itertools.combinations(range(full), 2):
        common = left & right
        if common == left or common == right:
            continue
        try:
            order = intersection_order(
                group(left),
                group(right),
                known=group(common),
                cap=config.intersection_cap,
                search_cap=config.search_cap,
            )
        except IntersectionCapExceeded as e:
            return CVerdict(Verdict.INDETERMINATE, reason=str(e))
        expected = group(common).order()
        if order != expected:
            return CVerdict(
                Verdict.FALSE, Witness(indices(left), indices(right), order, expected)
            )

    return _TRUE
