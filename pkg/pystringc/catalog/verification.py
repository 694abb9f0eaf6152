"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module replays the claims recorded with catalog entries against the core operations.

:see: https://github.com/hunyadi/pystringc
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..base import Config
from ..fracture import find_splits, is_two_fracture_selection, two_fracture_graph
from ..graph.representation import GraphError
from ..group.perm_group import IntersectionCapExceeded, identify, intersection_order
from ..sggi.core import Sggi, SggiError
from ..sggi.verdict import Verdict, is_string_cgroup
from ..util.dispatch import parallel_map
from .registry import CatalogEntry, CatalogError, find_entries, format_id, get_entry, instantiate

LOGGER = logging.getLogger("pystringc")

INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ClaimCheck:
    """
    The outcome of checking a single claim.

    :param claim: Name of the claim, e.g. `order` or `string_c`.
    :param expected: The recorded value, as text.
    :param actual: The computed value, as text.
    :param passed: Whether the computed value matches.
    :param informational: A mismatch is reported but does not fail the entry.
    """

    claim: str
    expected: str
    actual: str
    passed: bool
    informational: bool = False

    def __str__(self) -> str:
        if self.passed:
            status = "confirmed"
        elif self.informational:
            status = "differs (informational)"
        else:
            status = "FAILED"
        return f"{self.claim}: {status} (expected {self.expected}, got {self.actual})"


@dataclass(frozen=True)
class VerificationReport:
    """
    Claims checked for a single catalog entry.

    :param entry: Identifier of the entry.
    :param checks: One line per claim.
    :param notes: Provenance remarks carried by the entry.
    """

    entry: str
    checks: list[ClaimCheck]
    notes: list[str]

    @property
    def confirmed(self) -> bool:
        "True if every claim that is not informational passed."

        return all(c.passed or c.informational for c in self.checks)

    def __str__(self) -> str:
        lines = [f"{self.entry}: {'confirmed' if self.confirmed else 'FAILED'}"]
        lines.extend(f"  {check}" for check in self.checks)
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)


def _text(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class _Recorder:
    checks: list[ClaimCheck]
    informational: bool

    def __init__(self, informational: bool) -> None:
        self.checks = []
        self.informational = informational

    def compare(self, claim: str, expected: object, actual: object) -> None:
        if expected is None:
            return
        self.checks.append(
            ClaimCheck(claim, _text(expected), _text(actual), expected == actual, self.informational)
        )

    def fail(self, claim: str, expected: object, reason: str) -> None:
        self.checks.append(ClaimCheck(claim, _text(expected), reason, False, self.informational))


def _parabolic_orders(gamma: Sggi, config: Config) -> tuple[int, int, int, int]:
    last = gamma.rank - 1
    first_group = gamma.maximal_parabolic(0)
    last_group = gamma.maximal_parabolic(last)
    common = gamma.subgroup(range(1, last))
    meet = intersection_order(
        first_group,
        last_group,
        known=common,
        cap=config.intersection_cap,
        search_cap=config.search_cap,
    )
    return first_group.order(), last_group.order(), meet, common.order()


def verify_entry(entry: CatalogEntry, *, config: Optional[Config] = None) -> VerificationReport:
    """
    Checks every claim of a catalog entry with the corresponding core operation.

    Failures are recorded as report lines; no exception escapes for a malformed graph or a search that exceeds
    its cap.
    """

    if config is None:
        config = Config()

    claims = entry.claims
    recorder = _Recorder(claims.informational)
    notes = list(entry.notes)

    try:
        entry.graph.validate()
        gamma = entry.sggi()
    except (GraphError, SggiError) as e:
        recorder.checks.append(ClaimCheck("valid", "true", str(e), False))
        return VerificationReport(entry.id, recorder.checks, notes)

    recorder.checks.append(ClaimCheck("valid", "true", "true", True))
    recorder.compare("degree", claims.degree, entry.graph.degree)
    recorder.compare("rank", claims.rank, gamma.rank)

    if any(
        value is not None
        for value in (claims.kind, claims.order, claims.transitive, claims.primitive)
    ):
        identity = identify(gamma.group)
        recorder.compare("kind", claims.kind.value if claims.kind else None, identity.kind.value)
        recorder.compare("order", claims.order, identity.order)
        recorder.compare("transitive", claims.transitive, identity.transitive)
        recorder.compare("primitive", claims.primitive, identity.primitive)

    if claims.string_c is not None:
        verdict = is_string_cgroup(gamma, config=config)
        if verdict.verdict is Verdict.INDETERMINATE:
            LOGGER.warning(f"string C-group check of `{entry.id}` is indeterminate: {verdict.reason}")
            recorder.fail("string_c", claims.string_c, INDETERMINATE)
        else:
            recorder.compare("string_c", claims.string_c, verdict.is_string_c)
            if verdict.witness is not None:
                notes.append(f"witness {verdict.witness}")

    if claims.parabolic_orders is not None:
        expected = claims.parabolic_orders
        expected_text = f"{expected.first}, {expected.last}, {expected.intersection}, {expected.common}"
        try:
            actual = _parabolic_orders(gamma, config)
        except IntersectionCapExceeded as e:
            LOGGER.warning(f"parabolic orders of `{entry.id}`: {e}")
            recorder.fail("parabolic_orders", expected_text, INDETERMINATE)
        else:
            recorder.checks.append(
                ClaimCheck(
                    "parabolic_orders",
                    expected_text,
                    ", ".join(str(value) for value in actual),
                    actual == (expected.first, expected.last, expected.intersection, expected.common),
                    claims.informational,
                )
            )

    if claims.two_fracture is not None:
        recorder.compare("two_fracture", claims.two_fracture, two_fracture_graph(gamma) is not None)

    if claims.dashed is not None:
        solid = entry.solid_triples()
        recorder.checks.append(
            ClaimCheck(
                "dashed",
                "solid edges form a 2-fracture graph",
                f"{len(solid)} solid edges",
                is_two_fracture_selection(gamma, solid),
                claims.informational,
            )
        )

    if claims.perfect_splits is not None:
        perfect = [split.label for split in find_splits(gamma) if split.perfect]
        recorder.compare("perfect_splits", sorted(claims.perfect_splits), perfect)

    report = VerificationReport(entry.id, recorder.checks, notes)
    if not report.confirmed:
        LOGGER.warning(f"catalog entry `{entry.id}` failed verification")
    return report


def _expand(name: str, max_rank: int) -> list[str]:
    source = get_entry(name)
    if not source.parameters:
        return [name]
    return [format_id(name, params) for params in source.samples(max_rank)]


def verify_entries(
    pattern: str = "*", *, config: Optional[Config] = None, max_rank: int = 0
) -> list[VerificationReport]:
    """
    Verifies all entries whose identifier matches a shell-style pattern.

    Families contribute their default instance, and with a positive `max_rank` also every instance up to that
    rank. A pattern with an `@` names a single family instance.

    :raises CatalogError: The pattern matches nothing.
    """

    if config is None:
        config = Config()

    if "@" in pattern:
        idents = [pattern]
    else:
        names = find_entries(pattern)
        if not names:
            raise CatalogError(pattern, "no matching catalog entries")
        idents = []
        for name in names:
            idents.append(name)
            if max_rank > 0:
                idents.extend(ident for ident in _expand(name, max_rank) if ident != name)

    def verify(ident: str) -> VerificationReport:
        return verify_entry(instantiate(ident), config=config)

    reports = parallel_map(verify, idents, config.workers)
    LOGGER.info(f"verified {len(reports)} catalog entries, {sum(1 for r in reports if r.confirmed)} confirmed")
    return reports
