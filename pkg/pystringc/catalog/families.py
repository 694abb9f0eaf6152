"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module builds the parameterised catalog families: graphs whose figures elide a middle section with dots.
Each family expands the elided part by its label pattern and checks parameters against the range stated with the
figure.

:see: https://github.com/hunyadi/pystringc
"""

import itertools
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence, Union

from ..graph.representation import PermRepGraph
from ..group.perm_group import GroupKind
from ..util.typing import override
from .registry import CatalogEntry, CatalogError, Claims, EntrySource, format_id

LOGGER = logging.getLogger("pystringc")

Label = Union[int, tuple[int, ...]]


class _Drawing:
    "Vertices numbered in order of creation and labelled edges between them."

    count: int
    triples: list[tuple[int, int, int]]
    dashed: list[list[int]]

    def __init__(self) -> None:
        self.count = 0
        self.triples = []
        self.dashed = []

    def vertices(self, count: int) -> list[int]:
        start = self.count + 1
        self.count += count
        return list(range(start, start + count))

    def edge(self, u: int, v: int, label: Label, *, dashed: bool = False) -> None:
        labels = (label,) if isinstance(label, int) else label
        for i in labels:
            self.triples.append((u, v, i))
            if dashed:
                self.dashed.append([min(u, v), max(u, v), i])

    def path(self, labels: Sequence[Label], start: Optional[int] = None) -> list[int]:
        "Adds a path with the given edge labels, optionally continuing from an existing vertex."

        if start is None:
            vertices = self.vertices(len(labels) + 1)
        else:
            vertices = [start] + self.vertices(len(labels))
        for k, label in enumerate(labels):
            self.edge(vertices[k], vertices[k + 1], label)
        return vertices

    def ladder(self, top: Sequence[int], label: Label, bottom_labels: Sequence[Label]) -> list[int]:
        "Hangs a vertical edge below each top vertex and joins the new vertices by a path."

        bottom = self.path(bottom_labels)
        if len(bottom) != len(top):
            raise ValueError(f"ladder mismatch: {len(top)} top and {len(bottom)} bottom vertices")
        for u, v in zip(top, bottom):
            self.edge(u, v, label)
        return bottom

    def graph(self) -> PermRepGraph:
        return PermRepGraph.from_triples(self.count, self.triples)


def _down(high: int, low: int) -> list[int]:
    "Labels `high, high-1, ..., low`; empty if `high < low`."

    return list(range(high, low - 1, -1))


def _up(low: int, high: int) -> list[int]:
    return list(range(low, high + 1))


Builder = Callable[[dict[str, int]], tuple[_Drawing, Claims]]
Check = Callable[[dict[str, int]], Optional[str]]


@dataclass(frozen=True)
class Family(EntrySource):
    """
    A catalog family parameterised by size.

    :param family_name: Identifier without parameters.
    :param params: Parameter names in the order they appear in identifiers.
    :param defaults: Size used when an identifier carries no parameters.
    :param check: Returns the violated range condition, if any.
    :param build: Draws the graph and states its claims.
    :param rank_of: Rank of the instance for given parameters.
    :param notes: Provenance remarks.
    """

    family_name: str
    params: tuple[str, ...]
    defaults: dict[str, int]
    check: Check
    build: Builder
    rank_of: Callable[[dict[str, int]], int]
    notes: tuple[str, ...] = ()

    @property
    @override
    def name(self) -> str:
        return self.family_name

    @property
    @override
    def parameters(self) -> tuple[str, ...]:
        return self.params

    @override
    def instantiate(self, params: dict[str, int]) -> CatalogEntry:
        values = dict(params) if params else dict(self.defaults)
        unknown = set(values) - set(self.params)
        if unknown:
            raise CatalogError(self.family_name, f"unexpected parameters: {', '.join(sorted(unknown))}")
        missing = [p for p in self.params if p not in values]
        if missing:
            raise CatalogError(self.family_name, f"missing parameters: {', '.join(missing)}")
        ordered = {p: values[p] for p in self.params}

        reason = self.check(ordered)
        if reason is not None:
            raise CatalogError(format_id(self.family_name, ordered), f"out of range: requires {reason}")

        drawing, claims = self.build(ordered)
        if drawing.dashed:
            claims = replace(claims, dashed=drawing.dashed)
        return CatalogEntry(format_id(self.family_name, ordered), drawing.graph(), claims, self.notes)

    @override
    def samples(self, max_rank: int) -> list[dict[str, int]]:
        bound = 2 * max_rank + 1
        result = []
        for values in itertools.product(range(bound + 1), repeat=len(self.params)):
            params = dict(zip(self.params, values))
            if self.check(params) is None and self.rank_of(params) <= max_rank:
                result.append(params)
        return result


def _rank_from_r(p: dict[str, int]) -> int:
    return p["r"]


def _rank_from_n(p: dict[str, int]) -> int:
    return p["n"] // 2


def _first_failing(*conditions: tuple[bool, str]) -> Optional[str]:
    for holds, text in conditions:
        if not holds:
            return text
    return None


def _symmetric_or_alternating(n: int, r: int) -> Claims:
    "Groups on `n = 2r+1` points generated by an even `ρ_0` exactly when `r` is even."

    if r % 2 == 0:
        kind, order = GroupKind.ALTERNATING, math.factorial(n) // 2
    else:
        kind, order = GroupKind.SYMMETRIC, math.factorial(n)
    return Claims(
        string_c=True, kind=kind, order=order, degree=n, rank=r, transitive=True, two_fracture=True
    )


# imprimitive ladder


def _imprimitive_ladder(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    m = r - 1
    d = _Drawing()
    labels = _down(r - 1, 2)
    top = d.path(labels)
    bottom = d.path(labels)
    for k in range(m - 1):
        d.edge(top[k], bottom[k], (0, 1))
    d.edge(top[m - 1], bottom[m - 1], 0)
    return d, Claims(string_c=True, degree=2 * m, rank=r, transitive=True, primitive=False)


# 2-fracture graphs


def _fracture_ladder(r: int, columns: int) -> _Drawing:
    "Two paths `r-1, ..., 1` joined by `0`-edges at the first `columns` columns; only two of them are solid."

    d = _Drawing()
    labels = _down(r - 1, 1)
    top = d.path(labels)
    bottom = d.path(labels)
    for k in range(columns):
        solid = k in (r - 3, r - 2)
        d.edge(top[k], bottom[k], 0, dashed=not solid)
    return d


def _central_product(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["n"] // 2
    claims = Claims(
        string_c=True, kind=GroupKind.OTHER, order=2 * math.factorial(r), degree=2 * r, rank=r, transitive=True, two_fracture=True
    )
    return _fracture_ladder(r, r), claims


def _wreath_product(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["n"] // 2
    flips = r if r % 2 == 0 else r - 1
    claims = Claims(
        string_c=True,
        kind=GroupKind.OTHER,
        order=2**flips * math.factorial(r),
        degree=2 * r,
        rank=r,
        transitive=True,
        two_fracture=True,
    )
    return _fracture_ladder(r, r - 1), claims


def _odd_ladder_shifted(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    n = p["n"]
    r = (n - 1) // 2
    d = _Drawing()
    top = d.path([1, 0, 1] + _up(2, r - 1))
    bottom = d.path(_up(2, r - 1))
    for k, (u, v) in enumerate(zip(top[3:], bottom)):
        d.edge(u, v, 0, dashed=k > 0)
    return d, _symmetric_or_alternating(n, r)


def _odd_ladder(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    n = p["n"]
    r = (n - 1) // 2
    d = _Drawing()
    top = d.path(_up(0, r - 1))
    bottom = d.path(_up(1, r - 1))
    for k, (u, v) in enumerate(zip(top[2:], bottom[1:])):
        d.edge(u, v, 0, dashed=k > 0)
    return d, _symmetric_or_alternating(n, r)


def _even_n(p: dict[str, int]) -> Optional[str]:
    n = p["n"]
    return _first_failing((n % 2 == 0, "n even"), (n >= 6, "n ≥ 6"))


def _odd_n(p: dict[str, int]) -> Optional[str]:
    n = p["n"]
    return _first_failing((n % 2 == 1, "n odd"), (n >= 7, "n ≥ 7"))


# splits that are not perfect

_INFORMATIONAL = Claims(string_c=True, kind=GroupKind.SYMMETRIC, informational=True)


def _symmetric_claims(n: int, r: int) -> Claims:
    return replace(_INFORMATIONAL, order=math.factorial(n), degree=n, rank=r)


def _ladder_with_tail(p: dict[str, int], *, double: bool, tail: bool) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    labels: list[Label] = list(_down(r - 1, 1))
    if tail:
        labels.append((2, 0) if double else 2)
    top = d.path(labels)
    d.ladder(top[: r - 1], 0, _down(r - 1, 2))
    n = 2 * r if tail else 2 * r - 1
    return d, _symmetric_claims(n, r)


def _folded_path(p: dict[str, int], *, double: bool) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    last: Label = (r - 1, r - 3) if double else r - 1
    d.path(_down(r - 3, 1) + [0] + _up(1, r - 3) + [r - 2, r - 1, r - 2, last])
    return d, _symmetric_claims(2 * r, r)


def _folded_square(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    top = d.path(_down(r - 3, 1) + [0] + _up(1, r - 2) + [r - 1])
    x, y = top[-2], top[-1]
    x1, y1 = d.vertices(2)
    d.edge(x, x1, r - 3)
    d.edge(y, y1, (r - 3, r - 2))
    d.edge(x1, y1, r - 1)
    return d, _symmetric_claims(2 * r, r)


def _descending_ladder(p: dict[str, int], *, double: bool) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    first: Label = (r - 1, r - 3) if double else r - 1
    top = d.path([first, r - 2, r - 1, r - 2] + _down(r - 3, 0))
    d.ladder(top[6:], r - 3, _down(r - 5, 0))
    return d, _symmetric_claims(2 * r, r)


def _descending_ladder_square(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    top = d.path(_down(r - 1, 0))
    a1, b1 = d.vertices(2)
    d.edge(top[0], a1, (r - 3, r - 2))
    d.edge(top[1], b1, r - 3)
    d.edge(a1, b1, r - 1)
    d.ladder(top[4:], r - 3, _down(r - 5, 0))
    return d, _symmetric_claims(2 * r, r)


def _bent_ladder(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    top = d.path(_down(h, 1) + [0] + _up(1, r - 1))
    count = r - h - 2
    if count > 0:
        d.ladder(top[len(top) - count :], h + 1, _up(h + 3, r - 1))
    return d, _symmetric_claims(2 * r - 1, r)


def _bent_path(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    d.path(_down(h, 1) + [0] + _up(1, r - 2) + [r - 1] + _down(r - 2, h))
    return d, _symmetric_claims(2 * r, r)


def _bent_path_double(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    d.path([(2, 0), 1, 0] + _up(1, r - 2) + [r - 1] + _down(r - 2, 2))
    return d, _symmetric_claims(2 * r, r)


def _two_ladders(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    top = d.path(_up(0, r - 1))
    d.ladder(top[:h], h, _up(0, h - 2))
    if h + 3 <= r:
        d.ladder(top[h + 3 :], h + 1, _up(h + 3, r - 1))
    return d, _symmetric_claims(2 * r - 1, r)


def _ladder_and_hook(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    top = d.path(_down(r - 1, 1))
    d.ladder(top[: r - h - 1], h, _down(r - 1, h + 2))
    hook = d.path(_down(h, 1))
    d.edge(top[-1], hook[-1], 0)
    return d, _symmetric_claims(2 * r, r)


def _double_ladder_folded(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h, k = p["r"], p["h"], p["k"]
    d = _Drawing()
    top = d.path(_up(0, r - 1) + _down(r - 2, h))
    bottom = d.ladder(top[:h], h, _up(0, h - 2))
    for u, v in zip(top[:k], bottom[:k]):
        d.edge(u, v, k)
    return d, _symmetric_claims(2 * r, r)


def _double_ladder_two_sided(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h, k = p["r"], p["h"], p["k"]
    d = _Drawing()
    top = d.path(_up(0, r - 1))
    bottom = d.ladder(top[:h], h, _up(0, h - 2))
    for u, v in zip(top[:k], bottom[:k]):
        d.edge(u, v, k)
    d.ladder(top[h + 2 :], h, _up(h + 2, r - 1))
    return d, _symmetric_claims(2 * r, r)


def _r_at_least(minimum: int) -> Check:
    def check(p: dict[str, int]) -> Optional[str]:
        return _first_failing((p["r"] >= minimum, f"r ≥ {minimum}"))

    return check


def _h_between(low: int, high_offset: int) -> Check:
    "Checks `low ≤ h ≤ r - high_offset`."

    def check(p: dict[str, int]) -> Optional[str]:
        r, h = p["r"], p["h"]
        return _first_failing((low <= h <= r - high_offset, f"{low} ≤ h ≤ r-{high_offset}"))

    return check


def _k_below_h(p: dict[str, int]) -> Optional[str]:
    r, h, k = p["r"], p["h"], p["k"]
    return _first_failing(
        (1 <= k <= h - 3, "1 ≤ k ≤ h-3"),
        (2 <= h <= r - 2, "2 ≤ h ≤ r-2"),
    )


# graphs failing the intersection property


def _failing(n: int, r: int) -> Claims:
    return Claims(string_c=False, degree=n, rank=r)


def _twin_squares_path(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    d.path(_down(r - 5, 1) + [0] + _up(1, r - 5) + [r - 4, r - 3, r - 4, r - 3, r - 2, r - 1, r - 2, r - 1])
    return d, _failing(2 * r, r)


def _twin_squares_ladder(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    d = _Drawing()
    top = d.path(_up(0, r - 3) + [r - 4, r - 3, r - 2, r - 1, r - 2, r - 1])
    d.ladder(top[: r - 5], r - 5, _up(0, r - 7))
    return d, _failing(2 * r, r)


def _folded_with_left_ladder(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r = p["r"]
    h = p.get("h", 3)
    d = _Drawing()
    top = d.path(_up(0, r - 1) + _down(r - 2, h))
    bottom = d.path(_up(0, h - 2))
    for u, v in zip(top[: h - 1], bottom):
        d.edge(u, v, h - 1)
    return d, _failing(2 * r, r)


def _ascending_with_two_ladders(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    top = d.path(_up(0, r - 1))
    bottom = d.path(_up(0, h - 2))
    for u, v in zip(top[: h - 1], bottom):
        d.edge(u, v, h - 1)
    d.ladder(top[h + 2 :], h, _up(h + 2, r - 1))
    return d, _failing(2 * r, r)


def _hooked(p: dict[str, int], *, ascending: bool, lead: bool) -> tuple[_Drawing, Claims]:
    """
    A path starting `0, 1, 2, ...` with `2`-edges below its first two vertices.

    :param ascending: Whether the path only ascends to `r-1`, with a `3`-ladder on the right.
    :param lead: Whether a `1`-edge precedes the path instead of hanging off the bottom.
    """

    r = p["r"]
    d = _Drawing()
    if lead:
        start = d.vertices(1)[0]
        top = d.path([1] + _up(0, r - 1) + ([] if ascending else _down(r - 2, 3)), start)[1:]
    else:
        top = d.path(_up(0, r - 1) + ([] if ascending else _down(r - 2, 3)))

    if lead:
        bottom = d.path([0])
    else:
        hook = d.vertices(1)[0]
        bottom = d.path([1, 0], hook)[1:]
    for u, v in zip(top[:2], bottom):
        d.edge(u, v, 2)

    if ascending:
        d.ladder(top[5:], 3, _up(5, r - 1))
    return d, _failing(2 * r, r)


def _odd_bent_path(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    d.path(_down(h, 1) + [0] + _up(1, r - 2) + [r - 1] + _down(r - 2, h + 1))
    return d, _failing(2 * r - 1, r)


def _double_start(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    d.path([(h, h - 2)] + _down(h - 1, 1) + [0] + _up(1, r - 2) + [r - 1] + _down(r - 2, h))
    return d, _failing(2 * r, r)


def _double_both_ends(p: dict[str, int]) -> tuple[_Drawing, Claims]:
    r, h = p["r"], p["h"]
    d = _Drawing()
    d.path([(h, h - 2)] + _down(h - 1, 1) + [0] + _up(1, r - 2) + [r - 1] + _down(r - 2, h + 1) + [(h, h + 2)])
    return d, _failing(2 * r, r)


def _r_family(name: str, minimum: int, default: int, build: Builder, *notes: str) -> Family:
    return Family(name, ("r",), {"r": default}, _r_at_least(minimum), build, _rank_from_r, notes)


def _rh_family(name: str, low: int, high_offset: int, default: dict[str, int], build: Builder, *notes: str) -> Family:
    return Family(name, ("r", "h"), default, _h_between(low, high_offset), build, _rank_from_r, notes)


_NOT_PERFECT = "string C-group status is conjectured; claims are informational"

FAMILIES: list[Family] = [
    _r_family("T3.1", 4, 5, _imprimitive_ladder, "the entry `T3.4` is the instance r=4"),
    Family("T5.1", ("n",), {"n": 10}, _even_n, _central_product, _rank_from_n),
    Family("T5.2", ("n",), {"n": 10}, _even_n, _wreath_product, _rank_from_n),
    Family("T5.11", ("n",), {"n": 9}, _odd_n, _odd_ladder_shifted, _rank_from_n),
    Family("T5.13", ("n",), {"n": 9}, _odd_n, _odd_ladder, _rank_from_n),
    _r_family("T6.I", 3, 5, lambda p: _ladder_with_tail(p, double=False, tail=True), _NOT_PERFECT),
    _r_family("T6.II", 3, 5, lambda p: _ladder_with_tail(p, double=True, tail=True), _NOT_PERFECT),
    _r_family("T6.III", 3, 5, lambda p: _ladder_with_tail(p, double=False, tail=False), _NOT_PERFECT),
    _r_family("T6.IV", 4, 6, lambda p: _folded_path(p, double=False), _NOT_PERFECT),
    _r_family("T6.V", 4, 6, lambda p: _folded_path(p, double=True), _NOT_PERFECT),
    _r_family("T6.VI", 4, 6, _folded_square, _NOT_PERFECT),
    _r_family("T6.VII", 5, 6, lambda p: _descending_ladder(p, double=False), _NOT_PERFECT),
    _r_family("T6.VIII", 5, 6, lambda p: _descending_ladder(p, double=True), _NOT_PERFECT),
    _r_family("T6.IX", 5, 6, _descending_ladder_square, _NOT_PERFECT),
    _rh_family("T6.X", 1, 2, {"r": 6, "h": 2}, _bent_ladder, _NOT_PERFECT),
    _rh_family("T6.XI", 1, 2, {"r": 6, "h": 2}, _bent_path, _NOT_PERFECT),
    _r_family("T6.XII", 4, 6, _bent_path_double, _NOT_PERFECT),
    _rh_family("T6.XIV", 2, 2, {"r": 6, "h": 2}, _two_ladders, _NOT_PERFECT),
    _rh_family(
        "T6.XV",
        2,
        2,
        {"r": 6, "h": 2},
        _ladder_and_hook,
        _NOT_PERFECT,
        "the bottom label printed as h-3 is read as h-2, which the vertex count requires",
    ),
    Family(
        "T6.XVI",
        ("r", "h", "k"),
        {"r": 7, "h": 4, "k": 1},
        _k_below_h,
        _double_ladder_folded,
        _rank_from_r,
        (_NOT_PERFECT, "double verticals {h,k} are placed at the first k columns; reconstruction"),
    ),
    Family(
        "T6.XVII",
        ("r", "h", "k"),
        {"r": 7, "h": 4, "k": 1},
        _k_below_h,
        _double_ladder_two_sided,
        _rank_from_r,
        (_NOT_PERFECT, "double verticals {h,k} are placed at the first k columns; reconstruction"),
    ),
    _r_family("IPF2.1a", 6, 6, _twin_squares_path),
    _r_family("IPF2.1b", 7, 7, _twin_squares_ladder),
    _r_family("IPF2.2a", 5, 5, _folded_with_left_ladder, "coincides with IPF2.2b at h=3"),
    _rh_family("IPF2.2b", 4, 2, {"r": 6, "h": 4}, _folded_with_left_ladder),
    _rh_family("IPF2.2c", 3, 2, {"r": 6, "h": 3}, _ascending_with_two_ladders),
    _r_family("IPF2.3a", 5, 5, lambda p: _hooked(p, ascending=False, lead=False)),
    _r_family("IPF2.3b", 6, 6, lambda p: _hooked(p, ascending=True, lead=False)),
    _r_family("IPF2.4a", 5, 5, lambda p: _hooked(p, ascending=False, lead=True)),
    _r_family("IPF2.4b", 6, 6, lambda p: _hooked(p, ascending=True, lead=True)),
    _rh_family("IPF2.5", 1, 2, {"r": 6, "h": 2}, _odd_bent_path),
    _rh_family("IPF2.6a", 3, 2, {"r": 6, "h": 3}, _double_start),
    _rh_family("IPF2.6b", 2, 3, {"r": 6, "h": 2}, _double_both_ends),
]
