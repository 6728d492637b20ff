"""Conjugate-generation criteria for solvability and nilpotency.

The exhaustive searches fix the first entry of every tuple to the class
representative (solvability of ``<x_1, ..., x_k>`` is invariant under
simultaneous conjugation) and walk the distinct subgroups generated by the
representative together with at most ``k - 1`` further class elements. Each
subgroup is generated and tested once; a tuple that repeats an element, or adds
one already inside, gives a subgroup that has been seen. Coverage is therefore
that of every multiset of size ``k`` containing the representative.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from . import height, series
from .cayley import TABLE_BOUND
from .errors import (
    BudgetExceeded,
    EmptyClass,
    NotPrimeOrder,
    NotSolvable,
    OrderConditionViolated,
    TheoremViolationSuspected,
)
from .group import (
    ConjugacyClass,
    PermGroup,
    SubgroupHandle,
    class_of,
    conjugacy_classes,
    normal_closure,
)
from .perm import Permutation, element_order, format_permutation

__all__ = [
    "CriterionVerdict",
    "WitnessProfile",
    "BaerSuzukiReport",
    "PairTestReport",
    "T2Report",
    "class_k_test",
    "min_witness",
    "verify_witness",
    "radical_by_criterion",
    "baer_suzuki_check",
    "pair_test_prime_ge5",
    "max_fh_subgroup_search",
    "lemma_t2_property",
    "canonical_tuple_count",
    "DEFAULT_BUDGET",
    "DEFAULT_SAMPLES",
]

DEFAULT_BUDGET = 10 ** 8
DEFAULT_SAMPLES = 10 ** 5


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def canonical_tuple_count(class_size: int, k: int) -> int:
    """Multisets of size ``k`` from the class whose first entry is fixed."""
    if k <= 1:
        return 1
    return math.comb(class_size + k - 2, k - 1)


def _cycles(perms) -> list:
    return [format_permutation(p) for p in perms]


@dataclass
class CriterionVerdict:
    class_rep: Permutation
    k: int
    mode: str
    all_solvable: bool
    witness: tuple | None = None
    tuples_checked: int = 0
    subgroups_tested: int = 0
    sample_count: int | None = None
    seed: int | None = None

    def to_json(self) -> dict:
        return {
            "class_rep": format_permutation(self.class_rep),
            "k": self.k,
            "mode": self.mode,
            "all_solvable": self.all_solvable,
            "witness": None if self.witness is None else _cycles(self.witness),
            "tuples_checked": self.tuples_checked,
            "subgroups_tested": self.subgroups_tested,
            "sample_count": self.sample_count,
            "seed": self.seed,
        }


@dataclass
class WitnessProfile:
    class_rep: Permutation
    class_size: int
    generates_solvable: bool
    min_witness_k: int | None = None
    witness: tuple | None = None
    mode: str = "exhaustive"

    def to_json(self) -> dict:
        return {
            "class_rep": format_permutation(self.class_rep),
            "class_size": self.class_size,
            "generates_solvable": self.generates_solvable,
            "min_witness_k": self.min_witness_k,
            "witness": None if self.witness is None else _cycles(self.witness),
            "mode": self.mode,
        }


# -- search engines ----------------------------------------------------------

def _table(G: PermGroup):
    return G.cayley() if G.order() <= TABLE_BOUND else None


def _bfs_subgroups(T, rep: int, pool, depth: int, stop=None):
    """Distinct subgroups generated by ``rep`` and at most ``depth - 1``
    elements of ``pool``, in breadth-first (canonical) order.

    ``stop(mask, gens, level)`` may end the walk early by returning True.
    Returns ``(found, stopped, steps)`` with ``found`` a list of
    ``(mask, generating tuple, level)``.
    """
    root = T.closure([rep])
    found = [(root, (rep,), 1)]
    if stop is not None and stop(root, (rep,), 1):
        return found, True, 0
    seen = {T.key(root)}
    frontier = [(root, (rep,))]
    steps = 0
    for level in range(2, depth + 1):
        nxt = []
        for mask, gens in frontier:
            for x in pool:
                if mask[x]:
                    continue
                steps += 1
                g2 = gens + (int(x),)
                m2 = T.closure(g2, mask)
                key = T.key(m2)
                if key in seen:
                    continue
                seen.add(key)
                found.append((m2, g2, level))
                nxt.append((m2, g2))
                if stop is not None and stop(m2, g2, level):
                    return found, True, steps
        frontier = nxt
    return found, False, steps


def _class_indices(T, C: ConjugacyClass) -> np.ndarray:
    return np.array(sorted(T.index[p] for p in C.elements), dtype=np.int64)


def _pad(witness: tuple, k: int) -> tuple:
    return witness + (witness[0],) * (k - len(witness))


def _exhaustive_search(G: PermGroup, C: ConjugacyClass, k: int):
    """Return ``(witness or None, level, subgroups_tested, steps)``."""
    rep = C.representative
    T = _table(G)
    if T is not None:
        pool = _class_indices(T, C)
        hit = {}

        def stop(mask, gens, level):
            if not T.is_solvable(mask, gens):
                hit["w"], hit["level"] = tuple(T.perm(i) for i in gens), level
                return True
            return False

        found, _, steps = _bfs_subgroups(T, T.index[rep], pool, k, stop)
        return hit.get("w"), hit.get("level"), len(found), steps
    # no table: plain multiset iteration with chain-based checks
    others = [x for x in C.elements]
    memo = {}
    tested = steps = 0
    for level in range(1, k + 1):
        for combo in combinations_with_replacement(others, level - 1):
            steps += 1
            gens = tuple(sorted({rep, *combo}))
            if gens in memo:
                continue
            tested += 1
            memo[gens] = series.is_solvable(PermGroup(list(gens)))
            if not memo[gens]:
                return (rep,) + tuple(combo), level, tested, steps
    return None, None, tested, steps


def _random_search(G: PermGroup, C: ConjugacyClass, k: int, samples: int, seed: int):
    rep = C.representative
    rng = random.Random(seed)
    T = _table(G)
    for i in range(samples):
        tup = (rep,) + tuple(rep ^ G.random_element(rng) for _ in range(k - 1))
        if T is not None:
            idx = [T.index[p] for p in tup]
            ok = T.is_solvable(T.closure(idx), idx)
        else:
            ok = series.is_solvable(PermGroup(list(tup)))
        if not ok:
            return tup, i + 1
    return None, samples


def verify_witness(G: PermGroup, C: ConjugacyClass, witness) -> bool:
    """Independent check: every entry lies in ``C`` and the entries generate a
    nonsolvable subgroup (chain-based derived series)."""
    if not all(w in C for w in witness):
        return False
    return not series.is_solvable(SubgroupHandle(G, list(witness), check=False))


def _checked(G, C, witness):
    if witness is not None and not verify_witness(G, C, witness):
        raise RuntimeError(f"witness {_cycles(witness)} failed independent verification")
    return witness


# -- public operations -------------------------------------------------------

def class_k_test(G: PermGroup, C: ConjugacyClass, k: int, mode: str = "exhaustive", *,
                 budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                 seed: int = 0) -> CriterionVerdict:
    """Do all ``k``-element multisets of ``C`` generate solvable subgroups?

    ``mode`` is ``"exhaustive"``, ``"randomized"`` or ``"auto"`` (exhaustive
    when the canonical tuple count fits in ``budget``).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if C.size == 0:
        raise EmptyClass("empty conjugacy class")
    count = canonical_tuple_count(C.size, k)
    if mode == "auto":
        mode = "exhaustive" if count <= budget else "randomized"
    if mode == "exhaustive":
        if count > budget:
            raise BudgetExceeded(f"{count} canonical {k}-tuples exceed budget {budget}")
        witness, _, tested, steps = _exhaustive_search(G, C, k)
        witness = _checked(G, C, witness)
        return CriterionVerdict(C.representative, k, "exhaustive", witness is None,
                                None if witness is None else _pad(witness, k),
                                count if witness is None else steps, tested)
    if mode != "randomized":
        raise ValueError(f"unknown mode {mode!r}")
    witness, used = _random_search(G, C, k, samples, seed)
    witness = _checked(G, C, witness)
    return CriterionVerdict(C.representative, k, "randomized", witness is None, witness,
                            used, used, samples, seed)


def min_witness(G: PermGroup, C: ConjugacyClass, budget: int = DEFAULT_BUDGET, *,
                samples: int = DEFAULT_SAMPLES, seed: int = 0) -> WitnessProfile:
    """Least ``k`` such that some ``k`` elements of ``C`` generate a
    nonsolvable subgroup; absent when ``C`` generates a solvable subgroup."""
    rep = C.representative
    if series.is_solvable(normal_closure(G, rep)):
        return WitnessProfile(rep, C.size, True)
    if canonical_tuple_count(C.size, 4) <= budget:
        witness, level, _, _ = _exhaustive_search(G, C, 4)
        if witness is None:
            raise TheoremViolationSuspected(
                f"class of {rep}: nonsolvable closure but every 4 members generate a solvable subgroup",
                {"class_rep": format_permutation(rep), "exhaustive": True})
        return WitnessProfile(rep, C.size, False, level, _checked(G, C, witness), "exhaustive")
    for k in range(2, 5):
        witness, _ = _random_search(G, C, k, samples, seed)
        if witness is not None:
            return WitnessProfile(rep, C.size, False, k, _checked(G, C, witness), "randomized")
    raise TheoremViolationSuspected(
        f"class of {rep}: no nonsolvable 4-tuple among {samples} random samples",
        {"class_rep": format_permutation(rep), "exhaustive": False, "samples": samples, "seed": seed})


def radical_by_criterion(G: PermGroup, k: int = 4, *, budget: int = DEFAULT_BUDGET,
                         samples: int = DEFAULT_SAMPLES, seed: int = 0) -> SubgroupHandle:
    """Normal closure of every class whose ``k``-tuples all generate solvable
    subgroups; must coincide with the solvable radical."""
    reps = [C.representative for C in conjugacy_classes(G)
            if class_k_test(G, C, k, "auto", budget=budget, samples=samples, seed=seed).all_solvable]
    R = normal_closure(G, reps)
    oracle = series.solvable_radical(G)
    if not R.equals(oracle):
        raise TheoremViolationSuspected(
            f"criterion radical (order {R.order()}) differs from solvable radical (order {oracle.order()})",
            {"criterion_order": R.order(), "radical_order": oracle.order(), "k": k})
    return R


@dataclass
class BaerSuzukiReport:
    element: Permutation
    all_pairs_nilpotent: bool
    closure_nilpotent: bool
    counterexample: Permutation | None
    pairs_checked: int

    @property
    def consistent(self) -> bool:
        return self.all_pairs_nilpotent == self.closure_nilpotent

    def to_json(self) -> dict:
        return {
            "element": format_permutation(self.element),
            "all_pairs_nilpotent": self.all_pairs_nilpotent,
            "closure_nilpotent": self.closure_nilpotent,
            "counterexample": None if self.counterexample is None else format_permutation(self.counterexample),
            "pairs_checked": self.pairs_checked,
        }


def baer_suzuki_check(G: PermGroup, g: Permutation) -> BaerSuzukiReport:
    """Compare "every ``<g, g^h>`` is nilpotent" with "``<g^G>`` is nilpotent"
    for an element of prime order."""
    if not _is_prime(element_order(g)):
        raise NotPrimeOrder(f"{g} has order {element_order(g)}, not a prime")
    C = class_of(G, g)
    T = _table(G)
    counter = None
    checked = 0
    for c in C.elements:
        checked += 1
        if T is not None:
            gens = [T.index[g], T.index[c]]
            nil = T.is_nilpotent(T.closure(gens), gens)
        else:
            nil = series.is_nilpotent(PermGroup([g, c]))
        if not nil:
            counter = c
            break
    report = BaerSuzukiReport(g, counter is None,
                              series.is_nilpotent(normal_closure(G, g)), counter, checked)
    if not report.consistent:
        raise TheoremViolationSuspected(f"nilpotency pair criterion fails for {g}", report.to_json())
    return report


@dataclass
class PairTestReport:
    class_rep: Permutation
    prime: int
    class_generates_solvable: bool
    all_pairs_solvable: bool
    witness: tuple | None

    def to_json(self) -> dict:
        return {
            "class_rep": format_permutation(self.class_rep),
            "prime": self.prime,
            "class_generates_solvable": self.class_generates_solvable,
            "all_pairs_solvable": self.all_pairs_solvable,
            "witness": None if self.witness is None else _cycles(self.witness),
        }


def pair_test_prime_ge5(G: PermGroup, C: ConjugacyClass) -> PairTestReport:
    """For a class of elements of prime order at least 5: the class generates a
    solvable subgroup iff every pair from it does (exhaustive over pairs)."""
    p = element_order(C.representative)
    if not _is_prime(p) or p < 5:
        raise OrderConditionViolated(f"class elements have order {p}, need a prime >= 5")
    whole = series.is_solvable(normal_closure(G, C.representative))
    verdict = class_k_test(G, C, 2, "exhaustive")
    report = PairTestReport(C.representative, p, whole, verdict.all_solvable, verdict.witness)
    if whole != verdict.all_solvable:
        raise TheoremViolationSuspected("pair criterion for prime order >= 5 fails", report.to_json())
    return report


# -- maximal Fitting height conjugate subgroups --------------------------------

def _valid_five(T, a: int, mask, m: int):
    """Generating tuple of ``mask`` made of ``a`` and at most ``m - 1``
    elements of ``a``'s conjugacy class inside ``mask``, or None."""
    gens = T.generators_of(mask)
    orbit = np.flatnonzero(T.orbit_under(a, gens))
    target = T.key(mask)
    hit = {}

    def stop(mk, g, level):
        if T.key(mk) == target:
            hit["g"] = g
            return True
        return False

    _bfs_subgroups(T, a, orbit, m, stop)
    return hit.get("g")


def max_fh_subgroup_search(G: PermGroup, a: Permutation, m: int = 5, *,
                           budget: int = DEFAULT_BUDGET, mode: str = "auto",
                           samples: int = 2000, seed: int = 0) -> SubgroupHandle:
    """A subgroup ``A = <a_1, ..., a_m>`` of maximal observed Fitting height
    whose generators are conjugates of ``a`` that are mutually conjugate in
    ``A``. The returned subgroup's generators are such a tuple with
    ``a_1 = a``."""
    if not series.is_solvable(G):
        raise NotSolvable("max_fh_subgroup_search needs a solvable group")
    C = class_of(G, a)
    count = canonical_tuple_count(C.size, m)
    if mode == "auto":
        mode = "exhaustive" if count <= budget and G.order() <= TABLE_BOUND else "randomized"
    T = G.cayley()
    ai = T.index[a]
    if mode == "exhaustive":
        if count > budget:
            raise BudgetExceeded(f"{count} canonical {m}-tuples exceed budget {budget}")
        found, _, _ = _bfs_subgroups(T, ai, _class_indices(T, C), m)
        ranked = sorted(range(len(found)), key=lambda i: (-T.fitting_height(found[i][0]), i))
        for i in ranked:
            gens = _valid_five(T, ai, found[i][0], m)
            if gens is not None:
                return SubgroupHandle(G, [T.perm(x) for x in gens], check=False)
        raise RuntimeError("no valid subgroup found; <a> itself always qualifies")
    rng = random.Random(seed)
    best, best_h = (ai,), T.fitting_height(T.closure([ai]))
    for _ in range(samples):
        tup = (ai,) + tuple(T.index[a ^ G.random_element(rng)] for _ in range(m - 1))
        mask = T.closure(tup)
        orbit = T.orbit_under(ai, tup)
        if not all(orbit[x] for x in tup):
            continue
        h = T.fitting_height(mask)
        if h > best_h:
            best, best_h = tup, h
    return SubgroupHandle(G, [T.perm(x) for x in best], check=False)


@dataclass
class T2Report:
    element: Permutation
    subgroup_order: int
    fitting_height: int
    sfit_order: int | None
    fitting_order: int
    holds: bool
    generators: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "element": format_permutation(self.element),
            "subgroup_order": self.subgroup_order,
            "fitting_height": self.fitting_height,
            "sfit_order": self.sfit_order,
            "fitting_order": self.fitting_order,
            "holds": self.holds,
            "generators": _cycles(self.generators),
        }


def lemma_t2_property(G: PermGroup, a: Permutation, m: int = 5) -> T2Report:
    """Check that sfit of a maximal-height conjugate-generated subgroup lies in
    the Fitting subgroup of ``G``. Trivial ``A`` holds vacuously."""
    A = max_fh_subgroup_search(G, a, m, mode="exhaustive")
    F = series.fitting_subgroup(G)
    if A.order() == 1:
        return T2Report(a, 1, 0, None, F.order(), True, list(A.generators))
    prof = height.fitting_profile(A)
    holds = prof.sfit.is_subgroup_of(F)
    report = T2Report(a, A.order(), prof.height, prof.sfit.order(), F.order(), holds, list(A.generators))
    if not holds:
        raise TheoremViolationSuspected("sfit(A) is not contained in F(G)", report.to_json())
    return report
