import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from conftest import CORPUS_FACTS, corpus, corpus_group
from solvrad.errors import DegreeMismatch, EmptyGeneratorList, GroupTooLarge, MalformedFile
from solvrad.group import (
    PermGroup,
    center,
    centralizer,
    class_of,
    conjugacy_classes,
    format_group,
    group_from_generators,
    normal_closure,
    parse_group_text,
)
from solvrad.perm import Permutation, cycle, identity, parse_permutation


def P(text, n):
    return parse_permutation(text, n)


def test_generator_examples():
    assert group_from_generators([P("(1 2)", 4), P("(1 2 3 4)", 4)]).order() == 24
    assert group_from_generators([P("(1 2)", 4)]).order() == 2
    A4 = group_from_generators([P("(1 2 3)", 4), P("(2 3 4)", 4)])
    assert A4.order() == 12 == len(O.closure(O.raw(A4.generators)))


def test_generator_errors():
    with pytest.raises(EmptyGeneratorList):
        group_from_generators([])
    with pytest.raises(DegreeMismatch):
        group_from_generators([P("(1 2)", 3), P("(1 2)", 4)])


def test_identity_generators_give_trivial_group():
    G = group_from_generators([identity(3), identity(3)])
    assert G.order() == 1 and G.is_trivial()
    assert G.random_element(random.Random(1)) == identity(3)


def test_order_examples():
    assert corpus_group("sym:5").order() == 120
    assert corpus_group("psl2:7").order() == 168


def test_contains_examples():
    A4 = group_from_generators([P("(1 2 3)", 4), P("(2 3 4)", 4)])
    assert A4.contains(P("(1 2 3)", 4))
    assert not A4.contains(P("(1 2)", 4))
    K = group_from_generators([P("(1 2)", 4), P("(3 4)", 4)])
    assert not K.contains(P("(1 3)(2 4)", 4))
    with pytest.raises(DegreeMismatch):
        K.contains(P("(1 2)", 5))


def test_order_is_product_of_transversals():
    for spec in corpus():
        G = corpus_group(spec)
        prod = 1
        for t in G.transversal_sizes():
            prod *= t
        assert prod == G.order()


@pytest.mark.parametrize("spec", corpus(max_order=5000))
def test_chain_matches_closure_and_membership(spec):
    G = corpus_group(spec)
    elems = O.closure(O.raw(G.generators), G.degree)
    assert G.order() == len(elems) == CORPUS_FACTS[spec][0]
    rng = random.Random(7)
    pts = list(range(G.degree))
    for _ in range(1000):
        rng.shuffle(pts)
        p = Permutation(pts, zero_based=True)
        assert G.contains(p) == (tuple(pts) in elems)
    for g in G.generators:
        assert G.contains(g)


def test_chain_is_deterministic():
    a = corpus_group("psl2:11")
    b = PermGroup(list(a.generators))
    assert a.base == b.base
    assert a.strong_generators() == b.strong_generators()


def test_random_elements_uniform_on_s3():
    G = corpus_group("sym:3")
    rng = random.Random(0)
    n = 100_000
    counts = Counter(G.random_element(rng) for _ in range(n))
    assert len(counts) == 6
    sigma = (n * (1 / 6) * (5 / 6)) ** 0.5
    for c in counts.values():
        assert abs(c - n / 6) < 5 * sigma


@given(st.integers(0, 2 ** 32))
@settings(max_examples=30, deadline=None)
def test_random_elements_are_members(seed):
    G = corpus_group("gl23")
    rng = random.Random(seed)
    for _ in range(20):
        assert G.contains(G.random_element(rng))


def test_normal_closure_examples():
    S4 = corpus_group("sym:4")
    assert normal_closure(S4, P("(1 2 3)", 4)).order() == 12
    assert normal_closure(corpus_group("sym:5"), P("(1 2)", 5)).order() == 120
    A4 = corpus_group("alt:4")
    assert normal_closure(A4, P("(1 2)(3 4)", 4)).order() == 4


def test_class_examples():
    assert sorted(C.size for C in conjugacy_classes(corpus_group("sym:3"))) == [1, 2, 3]
    assert sorted(C.size for C in conjugacy_classes(corpus_group("sym:4"))) == [1, 3, 6, 6, 8]
    assert [C.size for C in conjugacy_classes(corpus_group("cyclic:5"))] == [1] * 5


def test_class_bound():
    with pytest.raises(GroupTooLarge):
        conjugacy_classes(corpus_group("sym:6"), bound=100)


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_classes_match_orbit_oracle(spec):
    G = corpus_group(spec)
    elems = O.closure(O.raw(G.generators), G.degree)
    ours = conjugacy_classes(G)
    theirs = {frozenset(c) for c in O.classes(elems)}
    assert {frozenset(O.raw(C.elements)) for C in ours} == theirs
    assert sum(C.size for C in ours) == G.order()
    assert len(ours) == CORPUS_FACTS[spec][1]
    for C in ours:
        assert C.representative == min(C.elements)
        assert G.order() % C.size == 0


@pytest.mark.parametrize("spec", ["sym:4", "gl23", "dihedral:6", "frobenius20"])
def test_class_size_is_centralizer_index(spec):
    G = corpus_group(spec)
    for C in conjugacy_classes(G):
        assert C.size * centralizer(G, C.representative).order() == G.order()


@pytest.mark.parametrize("spec", corpus(max_order=2000))
def test_normal_closures_match_oracle(spec):
    G = corpus_group(spec)
    n = G.degree
    elems = O.closure(O.raw(G.generators), n)
    for C in conjugacy_classes(G):
        N = normal_closure(G, C.representative)
        assert N.order() == len(O.normal_closure(elems, [tuple(C.representative.array)], n))
        assert N.is_normalized_by(G.generators)
        assert N.contains(C.representative)


@pytest.mark.parametrize("spec", ["sym:4", "gl23", "direct:sym:4,sym:3", "wreath:sym:3,cyclic:2"])
def test_normal_closure_minimal(spec):
    # the closure lies inside every normal subgroup containing the seed
    G = corpus_group(spec)
    n = G.degree
    normals = O.normal_subgroups(O.closure(O.raw(G.generators), n), n)
    for C in conjugacy_classes(G):
        N = frozenset(O.raw(normal_closure(G, C.representative).elements()))
        r = tuple(C.representative.array)
        assert N in normals
        assert all(N <= M for M in normals if r in M)


def test_center():
    assert center(corpus_group("dihedral:4")).order() == 2
    assert center(corpus_group("sym:4")).order() == 1
    assert center(corpus_group("sl23")).order() == 2


def test_class_of_rejects_outsider():
    with pytest.raises(ValueError):
        class_of(corpus_group("alt:4"), P("(1 2)", 4))


def test_group_text_roundtrip(tmp_path):
    G = parse_group_text("degree 4\n# comment\n(1 2)\n\n(1 2 3 4)\n")
    assert G.order() == 24
    assert parse_group_text(format_group(G)).generators == G.generators


@pytest.mark.parametrize("text,line", [("(1 2)\n", 1), ("degree x\n(1 2)", 1),
                                       ("degree 3\n(1 2\n", 2), ("degree 3\n(1 4)\n", 2)])
def test_group_text_errors(text, line):
    with pytest.raises(MalformedFile) as info:
        parse_group_text(text)
    assert info.value.line == line


def test_group_text_without_generators():
    with pytest.raises(EmptyGeneratorList):
        parse_group_text("degree 3\n")


def test_pickled_group_survives():
    import pickle
    G = corpus_group("frobenius20")
    H = pickle.loads(pickle.dumps(G))
    assert H.order() == 20 and H.contains(cycle(5, 1, 2, 3, 4, 5))
