"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module decides conjugacy of generator tuples and provides the outer automorphism of the symmetric group on
six points.

:see: https://github.com/hunyadi/pystringc
"""

import functools
import logging
from typing import Optional, Sequence

from ..model.permutation import DegreeMismatchError, Permutation, compose
from .perm_group import PermGroup

LOGGER = logging.getLogger("pystringc")


def _cycle_type(p: Permutation) -> list[int]:
    return sorted(len(c) for c in p.cycles())


def tuple_conjugator(
    a: Sequence[Permutation],
    b: Sequence[Permutation],
    ambient: Optional[PermGroup] = None,
) -> Optional[Permutation]:
    """
    Finds `g` with `a[i]^g = b[i]` for every `i`, where `x^g = g⁻¹·x·g`.

    Points are tried in ascending order, so the answer is the first solution in backtrack order. The search
    assigns the image of the least point of each orbit of `⟨a⟩` and propagates it through the orbit.

    :param a: Source tuple.
    :param b: Target tuple.
    :param ambient: Group that must contain the conjugator; the full symmetric group if omitted.
    """

    if len(a) != len(b):
        raise ValueError(f"tuple length mismatch: {len(a)} and {len(b)}")
    if not a:
        degree = ambient.degree if ambient is not None else 1
        return Permutation.identity(degree)

    degree = a[0].degree
    for p in (*a, *b):
        if p.degree != degree:
            raise DegreeMismatchError(degree, p.degree)
    if ambient is not None and ambient.degree != degree:
        raise DegreeMismatchError(degree, ambient.degree)

    for p, q in zip(a, b):
        if _cycle_type(p) != _cycle_type(q):
            return None

    components = PermGroup(degree, a).orbits()
    images = [0] * (degree + 1)
    used = [False] * (degree + 1)

    def undo(points: list[int]) -> None:
        for x in points:
            used[images[x]] = False
            images[x] = 0

    def assign(start: int, target: int) -> Optional[list[int]]:
        images[start] = target
        used[target] = True
        queue = [start]
        for x in queue:
            for p, q in zip(a, b):
                source = p.images[x - 1]
                image = q.images[images[x] - 1]
                if images[source] == 0:
                    if used[image]:
                        undo(queue)
                        return None
                    images[source] = image
                    used[image] = True
                    queue.append(source)
                elif images[source] != image:
                    undo(queue)
                    return None
        return queue

    def search(k: int) -> Optional[Permutation]:
        if k == len(components):
            g = Permutation(degree, tuple(images[1:]))
            if ambient is None or ambient.contains(g):
                return g
            return None

        start = components[k][0]
        size = len(components[k])
        for target in range(1, degree + 1):
            if used[target]:
                continue
            assigned = assign(start, target)
            if assigned is None:
                continue
            if len(assigned) == size:
                found = search(k + 1)
                if found is not None:
                    return found
            undo(assigned)
        return None

    return search(0)


def are_conjugate(
    a: Sequence[Permutation],
    b: Sequence[Permutation],
    ambient: Optional[PermGroup] = None,
) -> bool:
    return tuple_conjugator(a, b, ambient) is not None


class S6Automorphism:
    """
    An outer automorphism of the symmetric group on six points.

    It maps the transposition `(k,k+1)` to a product of three disjoint transpositions; images of all 15
    transpositions are tabulated and other elements are mapped through a factorization into transpositions.
    """

    _transpositions: dict[tuple[int, int], Permutation]

    def __init__(self, coxeter_images: Sequence[Permutation]) -> None:
        if len(coxeter_images) != 5:
            raise ValueError("expected: images of the five Coxeter generators of S_6")

        table: dict[tuple[int, int], Permutation] = {}
        for a in range(1, 6):
            table[(a, a + 1)] = coxeter_images[a - 1]
            for b in range(a + 2, 7):
                # (a,b) = (b-1,b)·(a,b-1)·(b-1,b)
                s = coxeter_images[b - 2]
                table[(a, b)] = compose(compose(s, table[(a, b - 1)]), s)
        self._transpositions = table

    def image_of_transposition(self, a: int, b: int) -> Permutation:
        return self._transpositions[(min(a, b), max(a, b))]

    def __call__(self, p: Permutation) -> Permutation:
        if p.degree != 6:
            raise DegreeMismatchError(6, p.degree)

        result = Permutation.identity(6)
        for cycle in p.cycles():
            # (a1,...,ak) = (a1,a2)(a1,a3)...(a1,ak) composed left to right
            for point in cycle[1:]:
                result = compose(result, self.image_of_transposition(cycle[0], point))
        return result

    def apply(self, gens: Sequence[Permutation]) -> tuple[Permutation, ...]:
        return tuple(self(g) for g in gens)


def _triple_transpositions() -> list[Permutation]:
    result: list[Permutation] = []
    for b in range(2, 7):
        rest = [x for x in range(2, 7) if x != b]
        for d in rest[1:]:
            c = rest[0]
            e, f = [x for x in rest if x not in (c, d)]
            result.append(Permutation.from_cycles(6, [(1, b), (c, d), (e, f)]))
    return sorted(result)


@functools.lru_cache(maxsize=None)
def outer_automorphism_s6() -> S6Automorphism:
    """
    Builds a fixed outer automorphism of the symmetric group on six points.

    Images of the Coxeter generators `(k,k+1)` are searched among products of three disjoint transpositions
    such that consecutive images multiply to an element of order 3 and non-consecutive images commute, with
    the first image fixed to `(1,2)(3,4)(5,6)`.
    """

    candidates = _triple_transpositions()
    first = Permutation.from_cycles(6, [(1, 2), (3, 4), (5, 6)])

    def extend(chosen: list[Permutation]) -> Optional[list[Permutation]]:
        if len(chosen) == 5:
            return chosen
        for t in candidates:
            if t in chosen:
                continue
            if compose(chosen[-1], t).order() != 3:
                continue
            if any(compose(s, t).order() != 2 for s in chosen[:-1]):
                continue
            found = extend(chosen + [t])
            if found is not None:
                return found
        return None

    images = extend([first])
    if images is None:
        raise RuntimeError("no outer automorphism of S_6 found")

    LOGGER.debug(f"outer automorphism of S_6: {', '.join(str(t) for t in images)}")
    return S6Automorphism(images)
