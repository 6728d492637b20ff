"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain.

A :class:`PermGroup` keeps the generator list it was built from and lazily
constructs a :class:`StabilizerChain` (base, strong generators, transversals).
Subgroups are :class:`SubgroupHandle` objects: ordinary groups that remember the
parent they live in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    ElementNotInGroup,
    EmptyGeneratorList,
    GroupTooLarge,
    MalformedFile,
    NotNormal,
)
from .perm import Permutation, check_same_degree, format_permutation, parse_permutation

__all__ = [
    "StabilizerChain",
    "PermGroup",
    "SubgroupHandle",
    "ConjugacyClass",
    "group_from_generators",
    "order",
    "contains",
    "random_element",
    "normal_closure",
    "conjugation_closure",
    "join",
    "class_of",
    "conjugacy_classes",
    "centralizer",
    "center",
    "subgroup_from_elements",
    "closure_elements",
    "format_group",
    "parse_group_text",
    "CLASS_ENUMERATION_BOUND",
]

#: Largest group order for which explicit element/class enumeration is allowed.
CLASS_ENUMERATION_BOUND = 200_000


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple([b[x] for x in a])


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _is_id(a: tuple) -> bool:
    return all(i == x for i, x in enumerate(a))


class _Level:
    __slots__ = ("base", "gens", "orbit", "trans", "trans_inv", "checked")

    def __init__(self, base: int):
        self.base = base
        self.gens: list = []
        self.orbit: list = []
        self.trans: dict = {}
        self.trans_inv: dict = {}
        self.checked: set = set()


class StabilizerChain:
    """Incremental Schreier-Sims on raw 0-based image tuples.

    Level ``j`` holds the strong generators fixing the first ``j`` base points
    and a transversal ``trans[pt]`` mapping the level's base point to ``pt``.
    Transversal entries are never replaced once set, so a sift that succeeded
    keeps succeeding as deeper levels grow.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[_Level] = []
        self._id = tuple(range(degree))

    # -- queries ---------------------------------------------------------
    def sift(self, g: tuple, start: int = 0):
        for j in range(start, len(self.levels)):
            lev = self.levels[j]
            pt = g[lev.base]
            u_inv = lev.trans_inv.get(pt)
            if u_inv is None:
                return g, j
            g = _mul(g, u_inv)
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        res, depth = self.sift(g)
        return depth == len(self.levels) and _is_id(res)

    def order(self) -> int:
        n = 1
        for lev in self.levels:
            n *= len(lev.orbit)
        return n

    @property
    def base(self) -> list:
        return [lev.base for lev in self.levels]

    def strong_generators(self) -> list:
        return list(self.levels[0].gens) if self.levels else []

    def random(self, rng: random.Random) -> tuple:
        g = self._id
        for lev in reversed(self.levels):
            g = _mul(g, lev.trans[rng.choice(lev.orbit)])
        return g

    def elements(self) -> list:
        elems = [self._id]
        for lev in reversed(self.levels):
            reps = [lev.trans[pt] for pt in lev.orbit]
            elems = [_mul(x, u) for x in elems for u in reps]
        return elems

    # -- construction ----------------------------------------------------
    def extend(self, g: tuple) -> bool:
        """Add ``g`` to the group; return whether the group grew."""
        res, depth = self.sift(g)
        if depth == len(self.levels) and _is_id(res):
            return False
        self._add(res, 0, depth)
        return True

    def _add(self, h: tuple, lo: int, hi: int) -> None:
        if hi == len(self.levels):
            moved = next(i for i, x in enumerate(h) if i != x)
            lev = _Level(moved)
            lev.orbit.append(moved)
            lev.trans[moved] = self._id
            lev.trans_inv[moved] = self._id
            self.levels.append(lev)
        for j in range(lo, hi + 1):
            lev = self.levels[j]
            lev.gens.append(h)
            self._grow_orbit(lev)
        for j in range(hi, lo - 1, -1):
            self._check(j)

    @staticmethod
    def _grow_orbit(lev: _Level) -> None:
        orbit, trans = lev.orbit, lev.trans
        i = 0
        while i < len(orbit):
            pt = orbit[i]
            u = trans[pt]
            for s in lev.gens:
                q = s[pt]
                if q not in trans:
                    v = _mul(u, s)
                    trans[q] = v
                    lev.trans_inv[q] = _inv(v)
                    orbit.append(q)
            i += 1

    def _check(self, j: int) -> None:
        lev = self.levels[j]
        for pt in lev.orbit:
            u = lev.trans[pt]
            for si, s in enumerate(lev.gens):
                if (pt, si) in lev.checked:
                    continue
                lev.checked.add((pt, si))
                schreier = _mul(_mul(u, s), lev.trans_inv[s[pt]])
                res, depth = self.sift(schreier, j + 1)
                if depth == len(self.levels) and _is_id(res):
                    continue
                self._add(res, j + 1, depth)


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain is built on first use and the group is treated as
    immutable afterwards.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 *, _chain: StabilizerChain | None = None):
        gens = list(generators)
        if not gens:
            if degree is None:
                raise EmptyGeneratorList("a group needs at least one generator")
            gens = [Permutation.identity(degree)]
        d = check_same_degree(gens)
        if degree is not None and d != degree:
            raise DegreeMismatch(f"generator degree {d} != group degree {degree}")
        nontrivial = [g for g in gens if not g.is_identity()]
        self.degree = d
        self.generators: tuple = tuple(nontrivial) if nontrivial else (Permutation.identity(d),)
        self._chain = _chain
        self._cache: dict = {}

    # -- chain -----------------------------------------------------------
    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            ch = StabilizerChain(self.degree)
            for g in self.generators:
                ch.extend(g.array)
            self._chain = ch
        return self._chain

    @property
    def base(self) -> list:
        """Base points, 1-based."""
        return [b + 1 for b in self.chain.base]

    def strong_generators(self) -> list:
        return [Permutation._raw(s) for s in self.chain.strong_generators()]

    def transversal_sizes(self) -> list:
        return [len(lev.orbit) for lev in self.chain.levels]

    # -- basic queries ---------------------------------------------------
    def order(self) -> int:
        return self.chain.order()

    def __len__(self) -> int:
        return self.order()

    def is_trivial(self) -> bool:
        return self.order() == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} element in degree {self.degree} group")
        return self.chain.contains(p.array)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._raw(self.chain.random(rng))

    def elements(self, bound: int = CLASS_ENUMERATION_BOUND) -> list:
        """All elements in lexicographic order (identity first)."""
        if "elements" not in self._cache:
            if self.order() > bound:
                raise GroupTooLarge(f"order {self.order()} exceeds enumeration bound {bound}")
            raw = sorted(self.chain.elements())
            self._cache["elements"] = [Permutation._raw(t) for t in raw]
        return self._cache["elements"]

    def __iter__(self):
        return iter(self.elements())

    # -- relations between groups ----------------------------------------
    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if other.degree != self.degree:
            return False
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "PermGroup") -> bool:
        """Same set of elements (order plus one-way containment)."""
        return self.order() == other.order() and self.is_subgroup_of(other)

    def is_normalized_by(self, gens: Iterable[Permutation]) -> bool:
        return all(self.contains(s ^ g) for g in gens for s in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def subgroup(self, gens: Sequence[Permutation], *, normal: bool | None = None) -> "SubgroupHandle":
        return SubgroupHandle(self, gens, normal=normal)

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, [], normal=True)

    def whole(self) -> "SubgroupHandle":
        return SubgroupHandle(self, list(self.generators), normal=True, check=False)

    def cayley(self):
        """Cached multiplication table (see :mod:`solvrad.cayley`)."""
        if "cayley" not in self._cache:
            from .cayley import CayleyTable
            self._cache["cayley"] = CayleyTable(self)
        return self._cache["cayley"]

    def generator_string(self) -> list:
        return [format_permutation(g) for g in self.generators]

    def __repr__(self) -> str:
        gens = ", ".join(self.generator_string())
        return f"<{type(self).__name__} degree={self.degree} gens=[{gens}]>"

    def __reduce__(self):
        return (PermGroup, (list(self.generators), self.degree))


class SubgroupHandle(PermGroup):
    """A subgroup given by generators that all lie in ``parent``.

    ``normal`` is ``None`` (unknown) or a verified boolean.
    """

    def __init__(self, parent: PermGroup, gens: Sequence[Permutation], *,
                 normal: bool | None = None, check: bool = True,
                 _chain: StabilizerChain | None = None):
        super().__init__(list(gens), parent.degree, _chain=_chain)
        self.parent = parent
        if check:
            for g in self.generators:
                if not parent.contains(g):
                    raise ElementNotInGroup(f"{format_permutation(g)} is not in the parent group")
        if normal:
            if not self.is_normalized_by(parent.generators):
                raise NotNormal("subgroup flagged normal is not normalized by the parent")
        self.normal = normal

    def is_normal(self) -> bool:
        if self.normal is None:
            self.normal = self.is_normalized_by(self.parent.generators)
        return self.normal

    def in_parent(self, parent: PermGroup) -> "SubgroupHandle":
        """The same subgroup re-anchored in another (containing) group."""
        return SubgroupHandle(parent, list(self.generators), check=False, _chain=self._chain)

    def __reduce__(self):
        return (_rebuild_subgroup, (self.parent, list(self.generators), self.normal))


def _rebuild_subgroup(parent, gens, normal):
    return SubgroupHandle(parent, gens, normal=normal, check=False)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    elements: tuple
    size: int
    _members: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._members

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.elements)


# -- module-level operations ------------------------------------------------

def group_from_generators(gens: Sequence[Permutation]) -> PermGroup:
    gens = list(gens)
    if not gens:
        raise EmptyGeneratorList("a group needs at least one generator")
    G = PermGroup(gens)
    G.chain
    return G


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def random_element(G: PermGroup, rng: random.Random) -> Permutation:
    return G.random_element(rng)


def _generators_of(S) -> list:
    if isinstance(S, Permutation):
        return [S]
    if isinstance(S, PermGroup):
        return list(S.generators)
    return list(S)


def conjugation_closure(G: PermGroup, seeds: Iterable[Permutation],
                        conj_by: Sequence[Permutation]) -> SubgroupHandle:
    """Smallest subgroup of ``G`` containing ``seeds`` and normalized by every
    element of ``conj_by``."""
    chain = StabilizerChain(G.degree)
    gens = [s for s in seeds if chain.extend(s.array)]
    queue = list(gens)
    while queue:
        n = queue.pop(0)
        for g in conj_by:
            c = n ^ g
            if chain.extend(c.array):
                gens.append(c)
                queue.append(c)
    return SubgroupHandle(G, gens, check=False, _chain=chain)


def normal_closure(G: PermGroup, S) -> SubgroupHandle:
    """Smallest normal subgroup of ``G`` containing ``S``.

    ``S`` may be a subgroup, a list of elements or a single element. The
    closure repeatedly conjugates current generators by the generators of
    ``G`` until nothing new appears.
    """
    H = conjugation_closure(G, _generators_of(S), G.generators)
    H.normal = True
    return H


def subgroup_from_elements(G: PermGroup, elems: Iterable[Permutation], *,
                           normal: bool | None = None) -> SubgroupHandle:
    """Subgroup generated by ``elems`` with a greedily reduced generator list."""
    chain = StabilizerChain(G.degree)
    gens = [e for e in elems if chain.extend(e.array)]
    H = SubgroupHandle(G, gens, check=False, _chain=chain)
    H.normal = normal
    return H


def join(G: PermGroup, *subgroups) -> SubgroupHandle:
    """Subgroup of ``G`` generated by the union of the given subgroups."""
    gens = [g for S in subgroups for g in _generators_of(S)]
    return subgroup_from_elements(G, gens)


def conjugacy_classes(G: PermGroup, bound: int = CLASS_ENUMERATION_BOUND) -> list:
    """Explicit conjugacy classes, each represented by its lexicographically
    least element; classes are listed in order of their representatives."""
    if G.order() > bound:
        raise GroupTooLarge(f"order {G.order()} exceeds class enumeration bound {bound}")
    if "classes" in G._cache:
        return G._cache["classes"]
    elems = [e.array for e in G.elements()]
    gens = [(g.array, _inv(g.array)) for g in G.generators]
    assigned = set()
    classes = []
    for x in elems:
        if x in assigned:
            continue
        orbit = [x]
        assigned.add(x)
        i = 0
        while i < len(orbit):
            y = orbit[i]
            for g, gi in gens:
                z = _mul(_mul(gi, y), g)
                if z not in assigned:
                    assigned.add(z)
                    orbit.append(z)
            i += 1
        orbit.sort()
        members = tuple(Permutation._raw(t) for t in orbit)
        classes.append(ConjugacyClass(members[0], members, len(members), frozenset(members)))
    G._cache["classes"] = classes
    return classes


def class_of(G: PermGroup, p: Permutation) -> ConjugacyClass:
    for C in conjugacy_classes(G):
        if p in C:
            return C
    raise ElementNotInGroup(f"{format_permutation(p)} is not an element of the group")


def centralizer(G: PermGroup, p: Permutation) -> SubgroupHandle:
    """Centralizer of ``p`` in ``G``, computed elementwise."""
    return subgroup_from_elements(G, (g for g in G.elements() if g * p == p * g))


def center(G: PermGroup) -> SubgroupHandle:
    """Elements commuting with every generator of ``G``."""
    gens = G.generators
    Z = subgroup_from_elements(G, (g for g in G.elements() if all(g * s == s * g for s in gens)))
    Z.normal = True
    return Z


def closure_elements(gens: Sequence[Permutation]) -> set:
    """Brute-force closure of ``gens`` under multiplication (test oracle)."""
    gens = list(gens)
    d = check_same_degree(gens)
    ident = tuple(range(d))
    raw = [g.array for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in raw:
                y = _mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return {Permutation._raw(t) for t in seen}


# -- text format ------------------------------------------------------------

def format_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += [format_permutation(g) for g in G.generators]
    return "\n".join(lines) + "\n"


def parse_group_text(text: str) -> PermGroup:
    """Parse the group file format: a ``degree N`` header followed by one
    generator per line in cycle notation; blank and ``#`` lines are skipped."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise MalformedFile("expected header 'degree N'", lineno)
            try:
                degree = int(parts[1])
            except ValueError:
                raise MalformedFile(f"bad degree {parts[1]!r}", lineno) from None
            if degree < 1:
                raise MalformedFile("degree must be positive", lineno)
            continue
        try:
            gens.append(parse_permutation(line, degree))
        except ValueError as exc:
            raise MalformedFile(str(exc), lineno) from exc
    if degree is None:
        raise MalformedFile("missing 'degree N' header", 1)
    if not gens:
        raise EmptyGeneratorList("group file lists no generators")
    return group_from_generators(gens)
