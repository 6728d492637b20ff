"""Fitting height, sfit, relative heights, normal subgroups and complements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    GroupTooLarge,
    NotNormal,
    NotSolvable,
    QuotientNotSolvable,
    SearchBudgetExceeded,
    TrivialGroup,
    VNotMinimalNormal,
)
from .group import (
    PermGroup,
    SubgroupHandle,
    conjugacy_classes,
    join,
    normal_closure,
    subgroup_from_elements,
)
from .series import commutator_subgroup, is_solvable, is_solvable_mod, nilpotent_residual

__all__ = [
    "FittingProfile",
    "lower_fitting_series",
    "fitting_profile",
    "fitting_height",
    "sfit",
    "lower_fitting_series_mod",
    "fitting_height_mod",
    "enumerate_normal_subgroups",
    "find_complements",
    "NORMAL_SUBGROUP_BOUND",
    "COMPLEMENT_CANDIDATE_CAP",
]

NORMAL_SUBGROUP_BOUND = 2000
COMPLEMENT_CANDIDATE_CAP = 10 ** 6


@dataclass
class FittingProfile:
    group: PermGroup
    height: int
    lower_fitting_terms: list = field(default_factory=list)
    sfit: SubgroupHandle | None = None

    def to_json(self) -> dict:
        return {
            "height": self.height,
            "orders": [t.order() for t in self.lower_fitting_terms],
            "sfit": None if self.sfit is None else self.sfit.generator_string(),
        }


def lower_fitting_series(G: PermGroup) -> list:
    """``D_0 = G``, ``D_{i+1}`` the nilpotent residual of ``D_i``.

    Terms are subgroups of ``G``. The list stops at the trivial group or, for
    nonsolvable groups, at the first term that repeats (which is kept).
    """
    cur = G if isinstance(G, SubgroupHandle) else G.whole()
    terms = [cur]
    while cur.order() > 1:
        nxt = nilpotent_residual(cur).in_parent(G)
        nxt.normal = True
        terms.append(nxt)
        if nxt.order() == cur.order():
            break
        cur = nxt
    return terms


def fitting_profile(G: PermGroup) -> FittingProfile:
    terms = lower_fitting_series(G)
    if terms[-1].order() != 1:
        raise NotSolvable("Fitting height is defined only for solvable groups")
    h = len(terms) - 1
    return FittingProfile(G, h, terms, terms[h - 1] if h else None)


def fitting_height(G: PermGroup) -> int:
    return fitting_profile(G).height


def sfit(G: PermGroup) -> SubgroupHandle:
    """Last nontrivial term of the lower Fitting series."""
    prof = fitting_profile(G)
    if prof.height == 0:
        raise TrivialGroup("sfit is defined only for nontrivial groups")
    return prof.sfit


def _relative_residual(X: PermGroup, N: PermGroup, G: PermGroup) -> SubgroupHandle:
    """Stable term of ``K_1 = X, K_{j+1} = <[K_j, X], N>`` inside ``G``."""
    cur = X
    while True:
        nxt = join(G, commutator_subgroup(G, cur, X), N)
        if nxt.order() == cur.order():
            return nxt
        cur = nxt


def lower_fitting_series_mod(G: PermGroup, N: PermGroup) -> list:
    """Lower Fitting series of ``G / N`` as subgroups of ``G`` containing ``N``."""
    if not N.is_normalized_by(G.generators) or not N.is_subgroup_of(G):
        raise NotNormal("N must be a normal subgroup of G")
    if not is_solvable_mod(G, N):
        raise QuotientNotSolvable("G/N is not solvable")
    n = N.order()
    cur = G if isinstance(G, SubgroupHandle) else G.whole()
    terms = [cur]
    while cur.order() > n:
        cur = _relative_residual(cur, N, G)
        terms.append(cur)
    return terms


def fitting_height_mod(G: PermGroup, N: PermGroup) -> int:
    """Fitting height of ``G / N`` computed without building the quotient."""
    return len(lower_fitting_series_mod(G, N)) - 1


def enumerate_normal_subgroups(G: PermGroup, bound: int = NORMAL_SUBGROUP_BOUND) -> list:
    """All normal subgroups, as joins of normal closures of classes.

    Returned in increasing order of size (ties keep discovery order).
    """
    if G.order() > bound:
        raise GroupTooLarge(f"order {G.order()} exceeds normal-subgroup bound {bound}")
    found: dict = {}

    def add(H):
        key = frozenset(H.elements())
        if key not in found:
            found[key] = H
            return True
        return False

    atoms = []
    for C in conjugacy_classes(G):
        H = normal_closure(G, C.representative)
        if add(H):
            atoms.append(H)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for H in frontier:
            for A in atoms:
                J = join(G, H, A)
                J.normal = True
                if add(J):
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda H: H.order())


def _is_minimal_normal(G: PermGroup, V: PermGroup) -> bool:
    if V.order() == 1 or not V.is_normalized_by(G.generators):
        return False
    return all(normal_closure(G, v).order() == V.order() for v in V.elements() if not v.is_identity())


def find_complements(G: PermGroup, V: PermGroup, cap: int = COMPLEMENT_CANDIDATE_CAP) -> list:
    """All complements to the minimal normal subgroup ``V`` in ``G``.

    Each generator of a reduced generating set of ``G`` modulo ``V`` is lifted
    through every element of its coset; a candidate is kept when it meets ``V``
    trivially. Distinct complements are returned in discovery order.
    """
    if not is_solvable(G):
        raise NotSolvable("find_complements needs a solvable group")
    if not V.is_subgroup_of(G) or not _is_minimal_normal(G, V):
        raise VNotMinimalNormal("V is not a minimal normal subgroup of G")
    gens = list(G.generators)
    target = G.order()
    i = 0
    while i < len(gens):
        rest = gens[:i] + gens[i + 1:]
        if join(G, rest, V).order() == target:
            gens = rest
        else:
            i += 1
    v_elems = V.elements()
    if len(v_elems) ** len(gens) > cap:
        raise SearchBudgetExceeded(f"{len(v_elems)}^{len(gens)} candidates exceed cap {cap}")
    want = target // V.order()
    seen = set()
    out = []
    for lifts in itertools.product(v_elems, repeat=len(gens)):
        cand = [g * v for g, v in zip(gens, lifts)]
        A = subgroup_from_elements(G, cand)
        if A.order() != want:
            continue
        key = frozenset(A.elements())
        if key not in seen:
            seen.add(key)
            out.append(A)
    return out
