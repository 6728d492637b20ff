"""Permutations on ``{1..n}``.

Points are 1-based in every textual form and 0-based internally. Products
compose left to right: ``(p * q)(i) = q(p(i))``, so ``x ** g`` style
conjugation is ``g**-1 * x * g`` and commutators are ``a**-1 * b**-1 * a * b``.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

from .errors import DegreeMismatch, MalformedCycle, PointOutOfRange

__all__ = [
    "Permutation",
    "parse_permutation",
    "format_permutation",
    "element_order",
    "identity",
    "cycle",
    "commutator",
]


class Permutation:
    """A bijection of ``{1..degree}``.

    Stored as a 0-based image tuple (``_img``). Instances are immutable,
    hashable and ordered lexicographically by their images.
    """

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int], *, zero_based: bool = False):
        img = tuple(int(x) for x in images)
        if not zero_based:
            img = tuple(x - 1 for x in img)
        if sorted(img) != list(range(len(img))):
            raise MalformedCycle(f"not a permutation: {images!r}")
        self._img = img

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based image sequence: entry ``i - 1`` is the image of point ``i``."""
        return tuple(x + 1 for x in self._img)

    @property
    def array(self) -> tuple:
        """0-based image tuple."""
        return self._img

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._img) != len(self._img):
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        o = other._img
        return Permutation._raw(tuple([o[x] for x in self._img]))

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def inverse(self) -> "Permutation":
        return ~self

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return (~self) ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __xor__(self, g: "Permutation") -> "Permutation":
        """Conjugate ``self ^ g = g**-1 * self * g``."""
        return ~g * self * g

    def conjugate(self, g: "Permutation") -> "Permutation":
        return self ^ g

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def support(self) -> list:
        """Moved points, 1-based, ascending."""
        return [i + 1 for i, x in enumerate(self._img) if i != x]

    def cycles(self) -> list:
        """Nontrivial cycles (1-based), each starting at its least point,
        sorted by least point."""
        seen = [False] * len(self._img)
        out = []
        for i in range(len(self._img)):
            if seen[i] or self._img[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        lengths = [len(c) for c in self.cycles()]
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return element_order(self)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __le__(self, other: "Permutation") -> bool:
        return self._img <= other._img

    def __gt__(self, other: "Permutation") -> bool:
        return self._img > other._img

    def __ge__(self, other: "Permutation") -> bool:
        return self._img >= other._img

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r}, degree={self.degree})"

    def __reduce__(self):
        return (_unpickle, (self._img,))


def _unpickle(img):
    return Permutation._raw(img)


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def cycle(degree: int, *points: int) -> Permutation:
    """The single cycle ``(points[0] points[1] ...)`` on ``degree`` points."""
    img = list(range(degree))
    pts = [p - 1 for p in points]
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a] = b
    return Permutation._raw(tuple(img))


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """``[a, b] = a**-1 * b**-1 * a * b``."""
    return ~a * ~b * a * b


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation such as ``"(1 2)(3 4)"``.

    Whitespace and commas separate points; ``"()"`` is the identity.
    """
    s = text.strip()
    if not s:
        raise MalformedCycle("empty permutation text")
    pos = 0
    seen = set()
    img = list(range(degree))
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise MalformedCycle(f"unexpected text {s[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(t) for t in body]
        except ValueError:
            raise MalformedCycle(f"non-integer point in {text!r}") from None
        for p in pts:
            if p < 1 or p > degree:
                raise PointOutOfRange(f"point {p} outside 1..{degree}")
            if p in seen:
                raise MalformedCycle(f"point {p} repeated in {text!r}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b - 1
    if s[pos:].strip() or pos == 0:
        raise MalformedCycle(f"unbalanced or malformed cycle text {text!r}")
    return Permutation._raw(tuple(img))


def format_permutation(p: Permutation) -> str:
    """Canonical cycle form: cycles start at their least point and are sorted
    by least moved point; the identity is ``"()"``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def element_order(p: Permutation) -> int:
    """Least ``m >= 1`` with ``p**m`` trivial, i.e. the lcm of cycle lengths."""
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)


def check_same_degree(perms: Iterable[Permutation]) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise DegreeMismatch(f"mixed degrees {sorted(degrees)}")
    return degrees.pop() if degrees else 0
