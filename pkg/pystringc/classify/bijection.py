"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module maps string C-groups of degree `n` to string C-groups of degree `n+1` and rank one higher, by the rank
and degree extension at the least interior label of a perfect split with a trivial side action.

:see: https://github.com/hunyadi/pystringc
"""

import logging
from dataclasses import dataclass

from ..extend import rd_extend
from ..fracture import split_report
from ..sggi.core import Sggi
from .search import ClassificationError, ClassificationResult, equivalent

LOGGER = logging.getLogger("pystringc")


class EmptyInteriorPSet(ClassificationError):
    "Raised when a representative has no perfect split with a trivial side action strictly between the extreme labels."

    representative: Sggi

    def __init__(self, representative: Sggi) -> None:
        super().__init__(representative)
        self.representative = representative

    def __str__(self) -> str:
        return f"no interior label qualifies for extension: {self.representative}"


class NotInjective(ClassificationError):
    "Raised when two representatives are mapped to equivalent string C-groups."

    def __str__(self) -> str:
        return f"representatives {self.args[0]} and {self.args[1]} have equivalent images"


@dataclass(frozen=True)
class PSet:
    """
    Labels `i` of perfect splits where `α_i` or `β_i` is the identity.

    :param labels: Qualifying labels in ascending order.
    :param rank: Rank of the sggi the labels belong to.
    """

    labels: tuple[int, ...]
    rank: int

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def interior(self) -> tuple[int, ...]:
        "Labels other than `0` and `r-1`."

        return tuple(i for i in self.labels if 0 < i < self.rank - 1)


def p_set(gamma: Sggi) -> PSet:
    labels = []
    for i in range(gamma.rank):
        report = split_report(gamma, i)
        if report is None or not report.perfect:
            continue
        if report.alpha.is_identity() or report.beta.is_identity():
            labels.append(i)
    return PSet(tuple(labels), gamma.rank)


def extension_label(gamma: Sggi) -> int:
    """
    The least interior label of the P-set.

    :raises EmptyInteriorPSet: No interior label qualifies.
    """

    interior = p_set(gamma).interior()
    if not interior:
        raise EmptyInteriorPSet(gamma)
    return interior[0]


def bijection_map(result: ClassificationResult) -> list[Sggi]:
    """
    Extends every representative at its least interior P-set label, and checks that the images are pairwise
    inequivalent.

    :raises EmptyInteriorPSet: Some representative has no interior label in its P-set.
    :raises NotInjective: Two images are equivalent.
    """

    images: list[Sggi] = []
    for gamma in result.representatives:
        label = extension_label(gamma)
        LOGGER.debug(f"extending {gamma} at label {label}")
        images.append(rd_extend(gamma, label).result)

    for k, image in enumerate(images):
        for j in range(k):
            if equivalent(image, images[j]):
                raise NotInjective(result.representatives[j], result.representatives[k])

    return images
