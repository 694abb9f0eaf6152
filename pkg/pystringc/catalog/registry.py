"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module helps discover and register catalog entries: permutation representation graphs taken from the
literature on string C-groups, together with the facts stated about them.

Identifiers name either a fixed graph (e.g. `T2.3`, `IPF.6a`) or a parameterised family instantiated with
`@name=value,...` (e.g. `T5.11@n=13`, `IPF2.5@r=6,h=2`).

:see: https://github.com/hunyadi/pystringc
"""

import abc
import fnmatch
import importlib
import importlib.resources
import json
import logging
import re
from dataclasses import dataclass, field
from typing import Optional

from strong_typing.serialization import json_to_object

from ..graph.exchange import parse_dsl
from ..graph.representation import Edge, PermRepGraph, sggi_of
from ..group.perm_group import GroupKind
from ..sggi.core import Sggi
from ..util.typing import override

LOGGER = logging.getLogger("pystringc")


class CatalogError(ValueError):
    "Raised when a catalog identifier is unknown or its parameters are out of range."

    ident: str

    def __init__(self, ident: str, reason: str) -> None:
        super().__init__(reason)
        self.ident = ident

    def __str__(self) -> str:
        return f"catalog entry `{self.ident}`: {self.args[0]}"


@dataclass(frozen=True)
class ParabolicOrders:
    """
    Orders of the subgroups that decide the intersection property.

    :param first: Order of `G_0`.
    :param last: Order of `G_{r-1}`.
    :param intersection: Order of `G_0 ∩ G_{r-1}`.
    :param common: Order of `G_{0,r-1}`.
    """

    first: int
    last: int
    intersection: int
    common: int


@dataclass(frozen=True)
class Claims:
    """
    Machine-checkable statements about a catalog graph. Absent values are not checked.

    :param string_c: Whether the sggi is a string C-group.
    :param kind: Symmetric, alternating or other, on the moved points.
    :param order: Order of the group.
    :param degree: Number of vertices.
    :param rank: Number of generators.
    :param transitive: Whether the group is transitive.
    :param primitive: Whether the group is primitive.
    :param parabolic_orders: Orders of `G_0`, `G_{r-1}`, their intersection and `G_{0,r-1}`.
    :param two_fracture: Whether the sggi admits a 2-fracture graph.
    :param dashed: Edges `[u, v, label]` outside the 2-fracture graph; the remaining edges form one.
    :param perfect_splits: Labels `i` that carry a perfect `i`-split, in ascending order.
    :param informational: Claims are recorded but a mismatch does not fail verification.
    """

    string_c: Optional[bool] = None
    kind: Optional[GroupKind] = None
    order: Optional[int] = None
    degree: Optional[int] = None
    rank: Optional[int] = None
    transitive: Optional[bool] = None
    primitive: Optional[bool] = None
    parabolic_orders: Optional[ParabolicOrders] = None
    two_fracture: Optional[bool] = None
    dashed: Optional[list[list[int]]] = None
    perfect_splits: Optional[list[int]] = None
    informational: bool = False


@dataclass
class ManifestEntry:
    claims: Claims
    notes: list[str] = field(default_factory=list)
    reconstructed: bool = False


@dataclass
class Manifest:
    "Claims about the fixed graphs shipped with the package, keyed by identifier."

    entries: dict[str, ManifestEntry]


@dataclass(frozen=True)
class CatalogEntry:
    """
    A concrete catalog graph.

    :param id: Identifier, including parameter values for family instances.
    :param graph: The permutation representation graph.
    :param claims: Statements to verify.
    :param notes: Provenance remarks and reconstruction flags.
    """

    id: str
    graph: PermRepGraph
    claims: Claims
    notes: tuple[str, ...] = ()

    def sggi(self) -> Sggi:
        return sggi_of(self.graph)

    def dashed_edges(self) -> list[Edge]:
        return [Edge.of(u, v, label) for u, v, label in self.claims.dashed or []]

    def solid_triples(self) -> list[tuple[int, int, int]]:
        "Edges other than the dashed ones."

        dashed = set(self.dashed_edges())
        return [(e.u, e.v, e.label) for e in self.graph.edges if e not in dashed]


class EntrySource(abc.ABC):
    "Produces catalog entries for an identifier."

    @property
    @abc.abstractmethod
    def name(self) -> str:
        ...

    @property
    def parameters(self) -> tuple[str, ...]:
        "Names of the size parameters; empty for fixed graphs."

        return ()

    @abc.abstractmethod
    def instantiate(self, params: dict[str, int]) -> CatalogEntry:
        """
        Builds the entry for the given parameter values.

        :raises CatalogError: Parameters are missing, unexpected or out of range.
        """
        ...

    def samples(self, max_rank: int) -> list[dict[str, int]]:
        "Parameter values of all instances with rank at most `max_rank`."

        return [{}]


class FixedEntry(EntrySource):
    "A graph read from a DSL file bundled with the package."

    _name: str
    _text: str
    _manifest: ManifestEntry

    def __init__(self, name: str, text: str, manifest: ManifestEntry) -> None:
        self._name = name
        self._text = text
        self._manifest = manifest

    @property
    @override
    def name(self) -> str:
        return self._name

    @override
    def instantiate(self, params: dict[str, int]) -> CatalogEntry:
        if params:
            raise CatalogError(self._name, "fixed entry takes no parameters")
        if self._manifest.reconstructed:
            LOGGER.warning(f"catalog entry `{self._name}` is a reconstruction: {'; '.join(self._manifest.notes)}")
        return CatalogEntry(
            self._name,
            parse_dsl(self._text),
            self._manifest.claims,
            tuple(self._manifest.notes),
        )


_entries: dict[str, EntrySource] = {}


def register_entry(name: str, source: EntrySource) -> None:
    """
    Dynamically registers a new catalog entry or family.

    :param name: The identifier such as `T2.1` or `T5.11`.
    :param source: Produces the graph and its claims.
    """

    if name in _entries:
        raise ValueError(f"catalog entry already registered: {name}")

    _entries[name] = source


def unregister_entry(name: str) -> None:
    """
    Dynamically removes a catalog entry or family.

    :param name: The identifier such as `T2.1` or `T5.11`.
    """

    _entries.pop(name)


def get_entry(name: str) -> EntrySource:
    "Looks up a catalog entry or family based on its identifier (without parameters)."

    try:
        source = _entries[name]
    except KeyError:
        raise CatalogError(name, "unrecognized catalog entry")
    else:
        return source


_PARAM = re.compile(r"^([a-z]+)=(\d+)$")


def parse_id(ident: str) -> tuple[str, dict[str, int]]:
    """
    Splits an identifier into the entry name and parameter values.

    For example, `IPF2.5@r=6,h=2` gives `IPF2.5` with `r=6` and `h=2`.
    """

    name, sep, rest = ident.partition("@")
    params: dict[str, int] = {}
    if not sep:
        return name, params
    for item in rest.split(","):
        match = _PARAM.match(item.strip())
        if match is None:
            raise CatalogError(ident, f"malformed parameter: {item!r}")
        key, value = match.group(1), int(match.group(2))
        if key in params:
            raise CatalogError(ident, f"repeated parameter: {key}")
        params[key] = value
    return name, params


def format_id(name: str, params: dict[str, int]) -> str:
    if not params:
        return name
    return f"{name}@{','.join(f'{key}={value}' for key, value in params.items())}"


def instantiate(ident: str) -> CatalogEntry:
    """
    Builds a catalog entry from an identifier; families without parameters take their default size.

    :raises CatalogError: Unknown identifier or parameters out of range.
    """

    name, params = parse_id(ident)
    return get_entry(name).instantiate(params)


def _natural_key(name: str) -> list[object]:
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def find_entries(pattern: str = "*") -> list[str]:
    "Names of registered entries and families matching a shell-style pattern, in natural order."

    return sorted(
        (name for name in _entries if fnmatch.fnmatchcase(name, pattern)),
        key=_natural_key,
    )


def load_manifest(text: str) -> Manifest:
    "Reads the JSON claims manifest."

    return json_to_object(Manifest, json.loads(text))


def discover_entries() -> None:
    "Discovers catalog graphs bundled with this package, and registers parameterised families."

    data = importlib.resources.files(__package__).joinpath("data")
    manifest = load_manifest(data.joinpath("claims.json").read_text(encoding="utf-8"))

    for resource in sorted(data.iterdir(), key=lambda r: _natural_key(r.name)):
        if not resource.name.endswith(".graph"):
            continue

        name = resource.name[: -len(".graph")]
        details = manifest.entries.get(name)
        if details is None:
            LOGGER.warning(f"no claims recorded for catalog entry `{name}`")
            details = ManifestEntry(Claims())
        register_entry(name, FixedEntry(name, resource.read_text(encoding="utf-8"), details))

    module = importlib.import_module(".families", package=__package__)
    for family in module.FAMILIES:
        register_entry(family.name, family)

    LOGGER.info(f"found {len(_entries)} catalog entries and families")


discover_entries()
