"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module implements constructions that produce new sggi from old ones: sesqui-extensions, and the rank and
degree extension at a perfect split.

:see: https://github.com/hunyadi/pystringc
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional

from .fracture import SplitReport, fracture_graph, split_report
from .group.perm_group import PermGroup
from .model.permutation import Permutation, compose
from .sggi.core import Sggi

LOGGER = logging.getLogger("pystringc")


class ExtensionError(ValueError):
    "Raised when the preconditions of an extension are not met."


class TauNotInvolution(ExtensionError):
    "Raised when the extending element is not an involution."

    def __str__(self) -> str:
        return f"extending element is not an involution: {self.args[0]}"


class TauInGroup(ExtensionError):
    "Raised when the extending element already belongs to the group."

    def __str__(self) -> str:
        return f"extending element belongs to the group: {self.args[0]}"


class TauNotCommuting(ExtensionError):
    "Raised when the extending element does not commute with a generator."

    index: int

    def __init__(self, index: int, tau: Permutation) -> None:
        super().__init__(tau)
        self.index = index

    def __str__(self) -> str:
        return f"extending element {self.args[0]} does not commute with generator {self.index}"


class NotAPerfectSplit(ExtensionError):
    "Raised when a label is not the label of a perfect split."

    label: int

    def __init__(self, label: int) -> None:
        super().__init__(label)
        self.label = label

    def __str__(self) -> str:
        return f"label {self.label} is not a perfect split"


class SesquiKind(enum.Enum):
    PROPER = "proper"
    "The extended group is the direct product of the original group and the group generated by `τ`."

    IMPROPER = "improper"
    "The extended group is isomorphic to the original group."


@dataclass(frozen=True)
class SesquiResult:
    """
    A sesqui-extension `Γ*` of `Γ` with respect to generator `k`.

    :param extended: The sggi with `ρ_k` replaced by `ρ_k·τ`.
    :param tau: The extending involution, on the degree of the extended sggi.
    :param index: The generator multiplied by `τ`.
    :param kind: Proper if and only if `τ` belongs to the extended group.
    """

    extended: Sggi
    tau: Permutation
    index: int
    kind: SesquiKind


def sesqui_extend(gamma: Sggi, k: int, tau: Permutation) -> SesquiResult:
    """
    Multiplies generator `k` by an involution `τ` outside the group that commutes with every generator.

    If `τ` acts on more points than `Γ`, the generators of `Γ` are embedded in the larger domain fixing the new
    points.

    :raises TauNotInvolution: `τ` is not an involution.
    :raises TauNotCommuting: `τ` does not commute with some generator.
    :raises TauInGroup: `τ` belongs to the group of `Γ`.
    """

    if k < 0 or k >= gamma.rank:
        raise ValueError(f"generator index {k} out of range for rank {gamma.rank}")

    degree = max(gamma.degree, tau.degree)
    tau = tau.extend(degree)
    gens = [g.extend(degree) for g in gamma.gens]

    if not tau.is_involution():
        raise TauNotInvolution(tau)
    for index, g in enumerate(gens):
        if compose(g, tau) != compose(tau, g):
            raise TauNotCommuting(index, tau)
    if PermGroup(degree, gens).contains(tau):
        raise TauInGroup(tau)

    gens[k] = compose(gens[k], tau)
    extended = Sggi(degree, tuple(gens))
    kind = SesquiKind.PROPER if extended.group.contains(tau) else SesquiKind.IMPROPER
    LOGGER.debug(f"{kind.value} sesqui-extension of generator {k} by {tau}")
    return SesquiResult(extended, tau, k, kind)


def sesqui_kind_by_order(gamma: Sggi, extended: Sggi) -> SesquiKind:
    "Classifies a sesqui-extension by comparing group orders: proper if and only if `|G*| = 2·|G|`."

    if extended.group.order() == 2 * gamma.group.order():
        return SesquiKind.PROPER
    else:
        return SesquiKind.IMPROPER


@dataclass(frozen=True)
class RdExtension:
    """
    The rank and degree extension `Γ^{i↑}` of `Γ` at a perfect `i`-split `{a, b}`.

    :param source: The sggi `Γ`.
    :param split: The perfect split the extension is built on.
    :param new_point: The added point `c`, always `n+1`.
    :param result: The extended sggi of degree `n+1` and rank `r+1`.
    """

    source: Sggi
    split: SplitReport
    new_point: int
    result: Sggi

    @property
    def split_label(self) -> int:
        return self.split.label


def _perfect_split(gamma: Sggi, label: int) -> SplitReport:
    if label < 0 or label >= gamma.rank:
        raise NotAPerfectSplit(label)
    report = split_report(gamma, label)
    if report is None or not report.perfect:
        raise NotAPerfectSplit(label)
    return report


def rd_extend(gamma: Sggi, label: int) -> RdExtension:
    """
    Inserts a new point `c` into the perfect split at `label`.

    Generators below the split are kept, `ρ_i` is replaced by `α_i·(a,c)` and `β_i·(c,b)`, and generators above
    the split shift up by one.

    :raises NotAPerfectSplit: `label` is not a perfect split of `Γ`.
    """

    report = _perfect_split(gamma, label)
    degree = gamma.degree + 1
    c = degree
    gens = [g.extend(degree) for g in gamma.gens]
    alpha = report.alpha.extend(degree)
    beta = report.beta.extend(degree)

    delta = (
        gens[:label]
        + [
            compose(alpha, Permutation.transposition(degree, report.a, c)),
            compose(beta, Permutation.transposition(degree, c, report.b)),
        ]
        + gens[label + 1 :]
    )
    result = Sggi(degree, tuple(delta))
    LOGGER.debug(f"rank and degree extension at {report}: {result}")
    return RdExtension(gamma, report, c, result)


def fuse_rd(delta: Sggi, label: int) -> Sggi:
    """
    Reverses a rank and degree extension: removes the last point and fuses generators `label` and `label+1`.

    :raises ExtensionError: The last point is moved by a generator other than `δ_i` and `δ_{i+1}`, or is not
        moved by both of them.
    """

    if label < 0 or label + 1 >= delta.rank:
        raise ExtensionError(f"no generator pair at labels {label} and {label + 1}")

    c = delta.degree
    first, second = delta.gens[label], delta.gens[label + 1]
    a, b = first.image(c), second.image(c)
    if a == c or b == c:
        raise ExtensionError(f"point {c} is not moved by generators {label} and {label + 1}")

    cycles = [cycle for cycle in first.cycles() if c not in cycle]
    cycles.extend(cycle for cycle in second.cycles() if c not in cycle)
    cycles.append((a, b))
    fused = Permutation.from_cycles(c, cycles)

    points = list(range(1, c))
    gens = list(delta.gens[:label]) + [fused] + list(delta.gens[label + 2 :])
    try:
        restricted = tuple(g.restrict(points) for g in gens)
    except ValueError as e:
        raise ExtensionError(str(e)) from e
    return Sggi(c - 1, restricted)


def three_cycle(delta: Sggi, label: int) -> Permutation:
    "The element `(δ_i·δ_{i+1})²`, which is the 3-cycle on `{a, b, c}` for a rank and degree extension."

    p = compose(delta.gens[label], delta.gens[label + 1])
    return compose(p, p)


class RdGuarantee(enum.Enum):
    GUARANTEED = "guaranteed"
    "The extension of a string C-group at this split is a string C-group."

    NO_GUARANTEE = "no-guarantee"
    "Sufficient conditions do not hold; the intersection property has to be checked directly."


def rd_guard(gamma: Sggi, label: int, *, report: Optional[SplitReport] = None) -> RdGuarantee:
    """
    Checks sufficient conditions for the rank and degree extension of a string C-group to be a string C-group.

    The conditions are: one of `α_i` and `β_i` is trivial, `Γ` admits a fracture graph, and neither `a` nor `b`
    is fixed by `G_i`.

    :raises NotAPerfectSplit: `label` is not a perfect split of `Γ`.
    """

    if report is None:
        report = _perfect_split(gamma, label)

    if not (report.alpha.is_identity() or report.beta.is_identity()):
        return RdGuarantee.NO_GUARANTEE
    fixed = set(gamma.maximal_parabolic(label).fixed_points())
    if report.a in fixed or report.b in fixed:
        return RdGuarantee.NO_GUARANTEE
    if fracture_graph(gamma) is None:
        return RdGuarantee.NO_GUARANTEE
    return RdGuarantee.GUARANTEED
