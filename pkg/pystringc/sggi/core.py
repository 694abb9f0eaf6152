"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module defines string groups generated by involutions (sggi) and their derived objects: duals, parabolic
subgroups and Schläfli types.

:see: https://github.com/hunyadi/pystringc
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..group.perm_group import PermGroup
from ..model.permutation import DegreeMismatchError, Permutation, compose

LOGGER = logging.getLogger("pystringc")


class SggiError(ValueError):
    "Raised when a generator tuple does not define a string group generated by involutions."


class NotInvolution(SggiError):
    "Raised when a generator is not an involution."

    index: int

    def __init__(self, index: int, generator: Permutation) -> None:
        super().__init__(generator)
        self.index = index

    def __str__(self) -> str:
        return f"generator {self.index} is not an involution: {self.args[0]}"


class StringConditionFails(SggiError):
    "Raised when two non-adjacent generators do not commute."

    i: int
    j: int

    def __init__(self, i: int, j: int) -> None:
        super().__init__(i, j)
        self.i = i
        self.j = j

    def __str__(self) -> str:
        return f"generators {self.i} and {self.j} are not adjacent but do not commute"


class RankError(SggiError):
    "Raised when an operation is applied to an sggi of unsupported rank."

    rank: int

    def __init__(self, rank: int, reason: str) -> None:
        super().__init__(reason)
        self.rank = rank

    def __str__(self) -> str:
        return f"rank {self.rank}: {self.args[0]}"


@dataclass(frozen=True)
class Sggi:
    """
    A string group generated by involutions, acting on `1..degree`.

    :param degree: Number of points permuted.
    :param gens: The generators `ρ_0, ..., ρ_{r-1}`.
    :param labels: Index of each generator in the sggi it was taken from, `0..r-1` unless produced by `parabolic`.
    """

    degree: int
    gens: tuple[Permutation, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        for index, g in enumerate(self.gens):
            if g.degree != self.degree:
                raise DegreeMismatchError(self.degree, g.degree)
            if not g.is_involution():
                raise NotInvolution(index, g)
        for i in range(len(self.gens)):
            for j in range(i + 2, len(self.gens)):
                p = compose(self.gens[i], self.gens[j])
                if not compose(p, p).is_identity():
                    raise StringConditionFails(i, j)

        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.gens))))
        elif len(self.labels) != len(self.gens):
            raise ValueError(f"expected: {len(self.gens)} labels; got: {len(self.labels)}")

    @property
    def rank(self) -> int:
        return len(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __getitem__(self, index: int) -> Permutation:
        return self.gens[index]

    @functools.cached_property
    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.gens)

    def subgroup(self, indices: Iterable[int]) -> PermGroup:
        "The parabolic subgroup `⟨ρ_j | j ∈ indices⟩`."

        return PermGroup(self.degree, [self.gens[j] for j in sorted(set(indices))])

    def maximal_parabolic(self, index: int) -> PermGroup:
        "The subgroup `G_i` generated by all generators except `ρ_i`."

        return self.subgroup(j for j in range(self.rank) if j != index)

    def is_transitive(self) -> bool:
        return self.group.is_transitive()

    def support(self) -> list[int]:
        return sorted({x for g in self.gens for x in g.support()})

    def __str__(self) -> str:
        return f"[{', '.join(str(g) for g in self.gens)}] on {self.degree} points"


def make_sggi(degree: int, gens: Sequence[Permutation]) -> Sggi:
    """
    Validates and creates an sggi.

    :param degree: Number of points permuted.
    :param gens: Generators; each must be an involution and non-adjacent generators must commute.
    :raises NotInvolution: A generator is the identity or has order greater than 2.
    :raises StringConditionFails: Two non-adjacent generators do not commute.
    """

    return Sggi(degree, tuple(gens))


def parse_generators(degree: int, texts: Iterable[str]) -> Sggi:
    "Creates an sggi from generators in cycle notation."

    return make_sggi(degree, [Permutation.parse(text, degree) for text in texts])


def simplex(degree: int) -> Sggi:
    "The sggi of consecutive transpositions `(1,2), (2,3), ..., (n-1,n)`."

    return make_sggi(
        degree, [Permutation.transposition(degree, k, k + 1) for k in range(1, degree)]
    )


def hemicube() -> Sggi:
    "The sggi `((1,2)(3,4), (2,3), (3,4))` of the hemi-cube."

    return parse_generators(4, ["(1,2)(3,4)", "(2,3)", "(3,4)"])


def dual(gamma: Sggi) -> Sggi:
    "Reverses the order of generators."

    return Sggi(gamma.degree, tuple(reversed(gamma.gens)))


def parabolic(gamma: Sggi, indices: Iterable[int], *, delete: bool = False) -> Sggi:
    """
    Takes the sub-sggi generated by a subset of the generators.

    :param gamma: The sggi.
    :param indices: Generator indices.
    :param delete: If false, keeps the generators listed (`Γ_{{J}}`); if true, keeps all other generators (`Γ_J`).
    """

    selected = set(indices)
    for j in selected:
        if j < 0 or j >= gamma.rank:
            raise ValueError(f"generator index {j} out of range for rank {gamma.rank}")
    if delete:
        kept = [j for j in range(gamma.rank) if j not in selected]
    else:
        kept = sorted(selected)
    return Sggi(
        gamma.degree,
        tuple(gamma.gens[j] for j in kept),
        tuple(gamma.labels[j] for j in kept),
    )


def restrict_to_support(gamma: Sggi) -> Sggi:
    "The faithful action on moved points, relabelled to `1..m` in ascending order."

    points = gamma.support()
    if not points:
        return Sggi(1, ())
    return Sggi(
        len(points), tuple(g.restrict(points) for g in gamma.gens), gamma.labels
    )


def schlafli(gamma: Sggi) -> tuple[int, ...]:
    """
    The Schläfli type `(p_1, ..., p_{r-1})`, where `p_i` is the order of `ρ_{i-1}·ρ_i`.

    :raises RankError: The rank is less than 2.
    """

    if gamma.rank < 2:
        raise RankError(gamma.rank, "Schläfli type requires at least two generators")
    return tuple(
        compose(gamma.gens[i - 1], gamma.gens[i]).order() for i in range(1, gamma.rank)
    )
