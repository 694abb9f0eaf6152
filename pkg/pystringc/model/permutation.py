"""
Permutations of the points `1..n` with an explicit degree.

Points act on the right: `x·p` is `p.image(x)`, and `compose(p, q)` applies `p` first, then `q`.
"""

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from sympy.combinatorics import Permutation as SymPermutation


class DegreeMismatchError(ValueError):
    "Raised when permutations of different degrees are combined."

    left: int
    right: int

    def __init__(self, left: int, right: int) -> None:
        super().__init__(left, right)
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"degree mismatch: {self.left} and {self.right}"


class PermutationFormatError(ValueError):
    "Raised when a string is not a valid product of disjoint cycles."

    text: str

    def __init__(self, reason: str, text: str) -> None:
        super().__init__(reason)
        self.text = text

    def __str__(self) -> str:
        return f"{self.args[0]}: {self.text!r}"


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


_ELEMENT_SEP = r" *[, ] *"
_CYCLE_RE = re.compile(rf"\(( *\d+(?:{_ELEMENT_SEP}\d+)* *)?\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A bijection of `{1..degree}` onto itself.

    :param degree: Number of points, including points fixed at the top of the domain.
    :param images: The image of point `x` is at position `x-1`.
    """

    degree: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"expected: a positive degree; got: {self.degree}")
        if len(self.images) != self.degree:
            raise ValueError(
                f"expected: {self.degree} images; got: {len(self.images)}"
            )
        if sorted(self.images) != list(range(1, self.degree + 1)):
            raise ValueError(f"not a bijection of 1..{self.degree}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(degree, tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """
        Builds a permutation from disjoint cycles.

        :param degree: Number of points.
        :param cycles: Each cycle `(a1, ..., ak)` maps `a1` to `a2`, ..., `ak` to `a1`.
        """

        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 1 or point > degree:
                    raise ValueError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise ValueError(f"cycles are not disjoint at point {point}")
                seen.add(point)
            for k, point in enumerate(cycle):
                images[point - 1] = cycle[(k + 1) % len(cycle)]
        return cls(degree, tuple(images))

    @classmethod
    def transposition(cls, degree: int, a: int, b: int) -> "Permutation":
        if a == b:
            raise ValueError(f"transposition requires two distinct points; got: {a}")
        return cls.from_cycles(degree, [(a, b)])

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """
        Parses disjoint-cycle notation such as `(1,2)(3,4)`; the identity is `()`.

        :param text: Product of disjoint cycles, elements separated by commas or spaces.
        :param degree: Number of points; never inferred from the largest moved point.
        """

        stripped = text.strip()
        cycles: list[list[int]] = []
        position = 0
        for match in _CYCLE_RE.finditer(stripped):
            if stripped[position : match.start()].strip():
                raise PermutationFormatError("unexpected characters", text)
            position = match.end()
            body = (match.group(1) or "").strip()
            if body:
                cycles.append([int(item) for item in re.split(_ELEMENT_SEP, body)])
        if stripped[position:].strip() or not stripped:
            raise PermutationFormatError("expected: product of disjoint cycles", text)

        try:
            return cls.from_cycles(degree, cycles)
        except ValueError as e:
            raise PermutationFormatError(str(e), text) from e

    @classmethod
    def from_sympy(cls, perm: SymPermutation, degree: int) -> "Permutation":
        images = [x + 1 for x in perm.array_form]
        images.extend(range(len(images) + 1, degree + 1))
        return cls(degree, tuple(images))

    def to_sympy(self) -> SymPermutation:
        return SymPermutation([x - 1 for x in self.images], size=self.degree)

    def image(self, point: int) -> int:
        return self.images[point - 1]

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(self.degree, tuple(images))

    def conjugate(self, g: "Permutation") -> "Permutation":
        "Returns `g⁻¹·self·g`, which maps `x·g` to `x·self·g`."

        if g.degree != self.degree:
            raise DegreeMismatchError(self.degree, g.degree)
        images = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            images[g.images[x - 1] - 1] = g.images[y - 1]
        return Permutation(self.degree, tuple(images))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def is_involution(self) -> bool:
        "True if the permutation has order exactly 2."

        return not self.is_identity() and all(
            self.images[y - 1] == x for x, y in enumerate(self.images, start=1)
        )

    def cycles(self) -> list[tuple[int, ...]]:
        "Non-trivial cycles, each starting at its least point, listed by ascending least point."

        result: list[tuple[int, ...]] = []
        seen = [False] * (self.degree + 1)
        for start in range(1, self.degree + 1):
            if seen[start] or self.images[start - 1] == start:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point - 1]
            result.append(tuple(cycle))
        return result

    def transpositions(self) -> list[tuple[int, int]]:
        "The 2-cycles of the permutation as ordered pairs `(a, b)` with `a < b`."

        return [(c[0], c[1]) for c in self.cycles() if len(c) == 2]

    def support(self) -> list[int]:
        return [x for x, y in enumerate(self.images, start=1) if x != y]

    def fixed_points(self) -> list[int]:
        return [x for x, y in enumerate(self.images, start=1) if x == y]

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def parity(self) -> Parity:
        return parity(self)

    def restrict(self, points: Sequence[int]) -> "Permutation":
        """
        The action on a set of points closed under this permutation, relabelled to `1..m` in ascending order.

        :param points: Points to keep; must be a union of cycles.
        """

        ordered = sorted(points)
        index = {point: k for k, point in enumerate(ordered, start=1)}
        try:
            images = tuple(index[self.images[point - 1]] for point in ordered)
        except KeyError:
            raise ValueError(f"points not closed under permutation {self}: {ordered}")
        return Permutation(len(ordered), images)

    def extend(self, degree: int) -> "Permutation":
        "Embeds the permutation in a larger domain, fixing the new points."

        if degree < self.degree:
            raise DegreeMismatchError(self.degree, degree)
        return Permutation(degree, self.images + tuple(range(self.degree + 1, degree + 1)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.degree}, {self})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    "The permutation `x ↦ q(p(x))`, that is, `p` followed by `q`."

    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)
    return Permutation(p.degree, tuple(q.images[y - 1] for y in p.images))


def parity(p: Permutation) -> Parity:
    "Odd if and only if the permutation is a product of an odd number of transpositions."

    transpositions = sum(len(c) - 1 for c in p.cycles())
    return Parity.ODD if transpositions % 2 else Parity.EVEN


def involutions(degree: int) -> list[Permutation]:
    "All involutions of `1..degree` in ascending order of their image tuples."

    result: list[Permutation] = []

    def collect(images: list[int], point: int) -> None:
        while point <= degree and images[point - 1] != point:
            point += 1
        if point > degree:
            if any(x != y for x, y in enumerate(images, start=1)):
                result.append(Permutation(degree, tuple(images)))
            return
        collect(images, point + 1)
        for other in range(point + 1, degree + 1):
            if images[other - 1] == other:
                images[point - 1], images[other - 1] = other, point
                collect(images, point + 1)
                images[point - 1], images[other - 1] = point, other

    collect(list(range(1, degree + 1)), 1)
    result.sort()
    return result
