"""
Permutations of {0, ..., n-1} and their cycle notation.

``Perm`` wraps a sympy ``Permutation`` and keys it by its images tuple, so
``p.images[i]`` is the image of ``i``. Products follow function
composition: ``p * q`` applies ``q`` first, then ``p`` (the reverse of
sympy's own ``*``). Orderings between permutations are lexicographic on
the images tuple and are used for every canonical choice in the package.
"""

import re
import logging
from functools import total_ordering
from typing import Iterable, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from errors import DegreeMismatchError, PermutationParseError

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_PREFIX = "Permutation"


@total_ordering
class Perm:
    """An immutable permutation backed by ``sympy.combinatorics.Permutation``."""

    __slots__ = ("sym", "images", "_hash")

    def __init__(self, sym: Permutation):
        self.sym = sym
        self.images: Tuple[int, ...] = tuple(sym.array_form)
        self._hash = hash(self.images)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Perm":
        """Validated constructor from an images sequence."""
        images = list(images)
        if sorted(images) != list(range(len(images))):
            raise PermutationParseError(f"Not a bijection of 0..{len(images) - 1}: {tuple(images)}")
        return cls(Permutation._af_new(images))

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(Permutation._af_new(list(range(degree))))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build a permutation of the given degree from disjoint cycles."""
        seen = set()
        moved = []
        for cycle in cycles:
            for point in cycle:
                if point < 0 or point >= degree:
                    raise PermutationParseError(f"Point {point} outside degree {degree}")
                if point in seen:
                    raise PermutationParseError(f"Point {point} repeated in cycle notation")
                seen.add(point)
            if len(cycle) > 1:
                moved.append(list(cycle))
        if not moved:
            return cls.identity(degree)
        return cls(Permutation(moved, size=degree))

    @property
    def degree(self) -> int:
        return self.sym.size

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise DegreeMismatchError(f"Cannot compose degree {self.degree} with degree {other.degree}")
        # sympy's a*b applies a first
        return Perm(other.sym * self.sym)

    def inverse(self) -> "Perm":
        return Perm(~self.sym)

    def conjugate(self, h: "Perm") -> "Perm":
        """Return h * self * h^-1."""
        return h * self * h.inverse()

    def is_identity(self) -> bool:
        return self.sym.is_Identity

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        return [tuple(c) for c in self.sym.cyclic_form]

    def order(self) -> int:
        return int(self.sym.order())

    def power(self, k: int) -> "Perm":
        return Perm(self.sym ** k)

    def concat(self, other: "Perm") -> "Perm":
        """Disjoint sum acting on ``self``'s points followed by a shifted copy of ``other``'s."""
        shift = self.degree
        return Perm(Permutation._af_new(list(self.images) + [shift + i for i in other.images]))

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return format_permutation(self)


def parse_permutation(text: str, degree: int) -> Perm:
    """
    Parse cycle notation such as ``Permutation(7)(0,4)(2,6)``.

    Points that are not mentioned are fixed. Singleton cycles only record
    that the point exists.

    Args:
        text: Product of disjoint cycles, optionally prefixed by "Permutation"
        degree: Number of points acted on

    Returns:
        The parsed permutation

    Raises:
        PermutationParseError: On malformed text, repeated or out-of-range points
    """
    body = text.strip()
    if body.startswith(_PREFIX):
        body = body[len(_PREFIX):].strip()
    if degree < 1:
        raise PermutationParseError(f"Degree must be at least 1, got {degree}")
    if _CYCLE_RE.sub("", body).strip():
        raise PermutationParseError(f"Malformed cycle notation: {text!r}")

    cycles = []
    for match in _CYCLE_RE.finditer(body):
        content = match.group(1).strip()
        if not content:
            continue
        try:
            cycles.append([int(token) for token in content.replace(" ", ",").split(",") if token])
        except ValueError:
            raise PermutationParseError(f"Malformed cycle {match.group(0)!r} in {text!r}") from None
    return Perm.from_cycles(cycles, degree)


def format_permutation(p: Perm) -> str:
    """Render ``p`` in the ``Permutation(...)`` listing style, degree marker first."""
    parts = [str(c).replace(" ", "") for c in p.cycles()]
    last = p.degree - 1
    if p.images[last] == last:
        parts.insert(0, f"({last})")
    return _PREFIX + "".join(parts)


def format_cycles(p: Perm) -> str:
    """Bare cycle string, ``()`` for the identity."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(i) for i in c) + ")" for c in cycles)
