import json
import random

import pytest

import oracles as O
from conftest import CORPUS_FACTS, corpus, corpus_group
from solvrad.errors import NotNormal
from solvrad.group import conjugacy_classes, join, normal_closure, subgroup_from_elements
from solvrad.perm import parse_permutation
from solvrad.series import (
    commutator_subgroup,
    derived_series,
    fitting_subgroup,
    is_nilpotent,
    is_solvable,
    is_solvable_mod,
    lower_central_series,
    nilpotent_residual,
    solvable_radical,
)


def P(text, n):
    return parse_permutation(text, n)


def test_commutator_examples():
    S4, A4, C6 = corpus_group("sym:4"), corpus_group("alt:4"), corpus_group("cyclic:6")
    assert commutator_subgroup(S4, S4, S4).order() == 12
    assert commutator_subgroup(A4, A4, A4).order() == 4
    assert commutator_subgroup(C6, C6, C6).order() == 1


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_commutator_subgroup_matches_all_commutators(spec):
    G = corpus_group(spec)
    n = G.degree
    elems = O.closure(O.raw(G.generators), n)
    assert len(commutator_subgroup(G, G, G)) == len(O.all_commutators(elems, elems, n))
    if G.order() <= 400:
        rng = random.Random(3)
        for _ in range(3):
            A = subgroup_from_elements(G, [G.random_element(rng)])
            B = subgroup_from_elements(G, [G.random_element(rng), G.random_element(rng)])
            ours = commutator_subgroup(G, A, B)
            theirs = O.all_commutators(O.raw(A.elements()), O.raw(B.elements()), n)
            assert set(O.raw(ours.elements())) == set(theirs)


def test_derived_series_examples():
    assert derived_series(corpus_group("sym:4")).orders == [24, 12, 4, 1]
    assert derived_series(corpus_group("sym:5")).orders == [120, 60, 60]
    assert derived_series(corpus_group("cyclic:7")).orders == [7, 1]


def test_series_json():
    doc = derived_series(corpus_group("sym:4")).to_json()
    assert doc["kind"] == "derived" and doc["orders"] == [24, 12, 4, 1]
    assert doc["generators"][-1] == ["()"]
    json.dumps(doc)


def test_is_solvable_examples():
    assert is_solvable(corpus_group("sym:4"))
    assert not is_solvable(corpus_group("alt:5"))
    from solvrad.group import group_from_generators
    adj = group_from_generators([P("(1 2)", 5), P("(2 3)", 5), P("(3 4)", 5), P("(4 5)", 5)])
    assert adj.order() == 120 and not is_solvable(adj)


def test_lower_central_examples():
    D4 = corpus_group("dihedral:4")
    assert is_nilpotent(D4) and lower_central_series(D4).orders == [8, 2, 1]
    S3 = lower_central_series(corpus_group("sym:3"))
    assert S3.orders == [6, 3, 3] and not S3.reaches_trivial()
    assert is_nilpotent(corpus_group("cyclic:12"))


def test_nilpotent_residual_examples():
    assert nilpotent_residual(corpus_group("sym:4")).order() == 12
    assert nilpotent_residual(corpus_group("alt:4")).order() == 4
    D8 = corpus_group("dihedral:8")
    Z = normal_closure(D8, P("(1 5)(2 6)(3 7)(4 8)", 8))
    assert Z.order() == 2
    assert nilpotent_residual(D8, Z).equals(Z)


def test_nilpotent_residual_needs_normal_base():
    S4 = corpus_group("sym:4")
    with pytest.raises(NotNormal):
        nilpotent_residual(S4, S4.subgroup([P("(1 2)", 4)]))


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_residual_relative_to_itself_is_stable(spec):
    G = corpus_group(spec)
    K = nilpotent_residual(G)
    assert nilpotent_residual(G, K).equals(K)


def test_fitting_and_radical_examples():
    assert fitting_subgroup(corpus_group("sym:4")).order() == 4
    assert fitting_subgroup(corpus_group("alt:5")).order() == 1
    assert fitting_subgroup(corpus_group("direct:cyclic:6,sym:3")).order() == 18
    assert solvable_radical(corpus_group("sym:4")).order() == 24
    assert solvable_radical(corpus_group("alt:5")).order() == 1
    R = solvable_radical(corpus_group("direct:sym:3,alt:5"))
    assert R.order() == 6 and all(max(g.support(), default=0) <= 3 for g in R.generators)


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_verdicts_match_brute_force(spec):
    G = corpus_group(spec)
    order, _, solv, nil, _, f, r = CORPUS_FACTS[spec]
    n = G.degree
    elems = O.closure(O.raw(G.generators), n)
    assert is_solvable(G) == solv == O.is_solvable(elems, n)
    assert is_nilpotent(G) == nil == O.is_nilpotent(elems, n)
    F, R = fitting_subgroup(G), solvable_radical(G)
    assert (F.order(), R.order()) == (f, r)
    assert is_nilpotent(F) and is_solvable(R)
    assert F.is_normalized_by(G.generators) and R.is_normalized_by(G.generators)
    assert F.is_subgroup_of(R)


@pytest.mark.parametrize("spec", corpus(max_order=500))
def test_fitting_and_radical_are_largest(spec):
    G = corpus_group(spec)
    n = G.degree
    elems = O.closure(O.raw(G.generators), n)
    F = O.largest_normal_with(elems, n, lambda N: O.is_nilpotent(N, n))
    R = O.largest_normal_with(elems, n, lambda N: O.is_solvable(N, n))
    assert set(O.raw(fitting_subgroup(G).elements())) == F
    assert set(O.raw(solvable_radical(G).elements())) == R


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_elementwise_characterizations(spec):
    G = corpus_group(spec)
    F, R = fitting_subgroup(G), solvable_radical(G)
    for C in conjugacy_classes(G):
        N = normal_closure(G, C.representative)
        nil, solv = is_nilpotent(N), is_solvable(N)
        for g in C.elements:
            assert F.contains(g) == nil
            assert R.contains(g) == solv


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_quotient_by_radical_has_trivial_radical(spec):
    G = corpus_group(spec)
    R = solvable_radical(G)
    assert is_solvable_mod(G, R) == (R.order() == G.order())
    for C in conjugacy_classes(G):
        if not R.contains(C.representative):
            X = join(G, normal_closure(G, C.representative), R)
            assert not is_solvable_mod(X, R)
