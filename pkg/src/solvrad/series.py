"""Commutator series and the elementwise Fitting subgroup / solvable radical.

Quotients are never built. A statement about ``G/N`` is computed with
subgroups of ``G`` that contain ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotNormal
from .group import (
    PermGroup,
    SubgroupHandle,
    conjugacy_classes,
    conjugation_closure,
    join,
    normal_closure,
)
from .perm import commutator

__all__ = [
    "SeriesReport",
    "commutator_subgroup",
    "derived_series",
    "lower_central_series",
    "is_solvable",
    "is_nilpotent",
    "nilpotent_residual",
    "is_solvable_mod",
    "fitting_subgroup",
    "solvable_radical",
    "subgroup_json",
]


@dataclass
class SeriesReport:
    kind: str
    terms: list = field(default_factory=list)
    stabilized: bool = True

    @property
    def orders(self) -> list:
        return [t.order() for t in self.terms]

    @property
    def last(self) -> SubgroupHandle:
        return self.terms[-1]

    def reaches_trivial(self) -> bool:
        return self.terms[-1].order() == 1

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "orders": self.orders,
            "generators": [t.generator_string() for t in self.terms],
        }


def subgroup_json(H: PermGroup) -> dict:
    return {"order": H.order(), "generators": H.generator_string()}


def _handle(G: PermGroup) -> SubgroupHandle:
    if isinstance(G, SubgroupHandle):
        return G
    return G.whole()


def commutator_subgroup(G: PermGroup, A: PermGroup, B: PermGroup) -> SubgroupHandle:
    """``[A, B]`` as a subgroup of ``G``.

    Commutators of generators, closed under conjugation by the generators of
    both ``A`` and ``B``.
    """
    seeds = [commutator(a, b) for a in A.generators for b in B.generators]
    return conjugation_closure(G, seeds, list(A.generators) + list(B.generators))


def _descend(G, step, kind: str) -> SeriesReport:
    cur = _handle(G)
    terms = [cur]
    while cur.order() > 1:
        nxt = step(cur)
        terms.append(nxt)
        if nxt.order() == cur.order():
            break
        cur = nxt
    return SeriesReport(kind, terms, stabilized=True)


def derived_series(G: PermGroup) -> SeriesReport:
    """``G >= G' >= G'' >= ...``; a repeated final term marks a perfect
    nontrivial residue."""
    return _descend(G, lambda H: commutator_subgroup(G, H, H), "derived")


def lower_central_series(G: PermGroup) -> SeriesReport:
    return _descend(G, lambda H: commutator_subgroup(G, H, G), "lower_central")


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G).reaches_trivial()


def is_nilpotent(G: PermGroup) -> bool:
    return lower_central_series(G).reaches_trivial()


def nilpotent_residual(G: PermGroup, base: PermGroup | None = None) -> SubgroupHandle:
    """Stable term of ``K_1 = G, K_{j+1} = <[K_j, G], base>``.

    With ``base`` trivial this is the smallest normal subgroup with nilpotent
    quotient; in general ``result / base`` is that subgroup of ``G / base``.
    """
    if base is None:
        base_gens = []
    else:
        if not base.is_normalized_by(G.generators):
            raise NotNormal("base subgroup is not normal")
        base_gens = [g for g in base.generators if not g.is_identity()]
    cur = _handle(G)
    while True:
        comm = commutator_subgroup(G, cur, G)
        nxt = join(G, comm, base_gens) if base_gens else comm
        if nxt.order() == cur.order():
            break
        cur = nxt
    cur.normal = True
    return cur


def is_solvable_mod(G: PermGroup, N: PermGroup) -> bool:
    """Whether ``G / N`` is solvable, via the relative derived series."""
    n = N.order()
    cur = _handle(G)
    while cur.order() > n:
        nxt = join(G, commutator_subgroup(G, cur, cur), N)
        if nxt.order() == cur.order():
            return False
        cur = nxt
    return True


def _elementwise_radical(G: PermGroup, accept) -> SubgroupHandle:
    reps = [C.representative for C in conjugacy_classes(G)
            if accept(normal_closure(G, C.representative))]
    return normal_closure(G, reps)


def fitting_subgroup(G: PermGroup) -> SubgroupHandle:
    """Generated by every element whose normal closure is nilpotent."""
    return _elementwise_radical(G, is_nilpotent)


def solvable_radical(G: PermGroup) -> SubgroupHandle:
    """Generated by every element whose normal closure is solvable."""
    return _elementwise_radical(G, is_solvable)
