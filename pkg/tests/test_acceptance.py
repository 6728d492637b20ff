"""Acceptance criteria 1-10, each at its stated tolerance.

Run under pytest (a summary section lists one PASS/FAIL line per criterion) or
directly with ``python tests/test_acceptance.py``.
"""

import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles as O  # noqa: E402
import sweeps  # noqa: E402
from conftest import corpus, corpus_group  # noqa: E402
from solvrad import height, modrep, series  # noqa: E402
from solvrad.criterion import (  # noqa: E402
    canonical_tuple_count,
    class_k_test,
    min_witness,
    radical_by_criterion,
    verify_witness,
)
from solvrad.group import class_of, conjugacy_classes, normal_closure  # noqa: E402
from solvrad.perm import parse_permutation  # noqa: E402

EXHAUSTIVE_LIMIT = 10 ** 7
RANDOM_SAMPLES = 10 ** 5


def _report(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


def test_criterion_1_tightness_of_four():
    start = time.perf_counter()
    S5 = corpus_group("sym:5")
    C = class_of(S5, parse_permutation("(1 2)", 5))
    k3 = class_k_test(S5, C, 3, "exhaustive")
    prof = min_witness(S5, C)
    elapsed = time.perf_counter() - start
    ok = (k3.all_solvable and prof.min_witness_k == 4
          and verify_witness(S5, C, prof.witness) and elapsed < 10)
    _report(1, ok, f"k=3 all_solvable={k3.all_solvable}, min_witness_k={prof.min_witness_k}, {elapsed:.2f} s")
    assert ok


def test_criterion_2_four_conjugates_detect_radical():
    start = time.perf_counter()
    violations, exhaustive, sampled = [], 0, 0
    for spec in corpus():
        G = corpus_group(spec)
        for C in conjugacy_classes(G):
            solvable = series.is_solvable(normal_closure(G, C.representative))
            if canonical_tuple_count(C.size, 4) <= EXHAUSTIVE_LIMIT:
                exhaustive += 1
                v = class_k_test(G, C, 4, "exhaustive", budget=EXHAUSTIVE_LIMIT)
                if v.all_solvable != solvable:
                    violations.append((spec, str(C.representative)))
            elif not solvable:
                sampled += 1
                v = class_k_test(G, C, 4, "randomized", samples=RANDOM_SAMPLES, seed=0)
                if v.all_solvable:
                    violations.append((spec, str(C.representative)))
    elapsed = time.perf_counter() - start
    ok = not violations and elapsed < 30 * 60
    _report(2, ok, f"{exhaustive} classes exhaustive, {sampled} sampled, "
                   f"violations {violations}, {elapsed:.1f} s")
    assert ok


def test_criterion_3_pairs_for_prime_at_least_five():
    start = time.perf_counter()
    reports = []
    for spec in corpus():
        reports += sweeps.prime_ge5_pairs(corpus_group(spec))
    bad = [r for r in reports if r.class_generates_solvable != r.all_pairs_solvable]
    elapsed = time.perf_counter() - start
    ok = not bad and len(reports) > 0 and elapsed < 5 * 60
    _report(3, ok, f"{len(reports)} classes, {len(bad)} mismatches, {elapsed:.1f} s")
    assert ok


def test_criterion_4_baer_suzuki():
    start = time.perf_counter()
    bad = []
    for spec in corpus(max_order=2000):
        bad += [(spec, g) for g in sweeps.baer_suzuki_all(corpus_group(spec))]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10 * 60
    _report(4, ok, f"{len(bad)} inconsistent elements, {elapsed:.1f} s")
    assert ok


def test_criterion_5_radical_equivalence():
    bad = []
    for spec in corpus():
        G = corpus_group(spec)
        R, oracle = radical_by_criterion(G, 4), series.solvable_radical(G)
        if not (R.order() == oracle.order() and R.is_subgroup_of(oracle) and oracle.is_subgroup_of(R)):
            bad.append(spec)
    r_s3a5 = radical_by_criterion(corpus_group("direct:sym:3,alt:5")).order()
    r_a5 = radical_by_criterion(corpus_group("alt:5")).order()
    ok = not bad and r_s3a5 == 6 and r_a5 == 1
    _report(5, ok, f"mismatches {bad}, R(S3 x A5)={r_s3a5}, R(A5)={r_a5}")
    assert ok


def test_criterion_6_height_and_sfit():
    S4, GL = corpus_group("sym:4"), corpus_group("gl23")
    v4 = {parse_permutation(t, 4) for t in ("()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")}
    facts = (height.fitting_height(S4) == 3 and set(height.sfit(S4).elements()) == v4
             and height.fitting_height(GL) == 3)
    failures = {}
    for name in ("lemma_p1", "lemma_p2", "lemma_p3", "lemma_t3a_subgroups", "sfit_intersection"):
        bad = []
        for spec in corpus(max_order=500, solvable=True):
            bad += getattr(sweeps, name)(corpus_group(spec))
        failures[name] = bad
    ok = facts and not any(failures.values())
    _report(6, ok, f"fh/sfit facts {facts}, sweep failures "
                   f"{ {k: len(v) for k, v in failures.items()} }")
    assert ok


def test_criterion_7_fixed_space_bound():
    start = time.perf_counter()
    checks, worst = 0, 0.0
    violations = []
    for spec in corpus(solvable=True):
        for r in modrep.t1_sweep(corpus_group(spec)):
            checks += 1
            worst = max(worst, r.ratio)
            if 4 * r.fixed_dim > 3 * r.dim:
                violations.append((spec, r.to_json()))
    elapsed = time.perf_counter() - start
    ok = not violations and checks > 0 and elapsed < 5 * 60
    _report(7, ok, f"{checks} checks, max ratio {worst:.4f}, {len(violations)} violations, {elapsed:.1f} s")
    assert ok


def test_criterion_8_lemma_t2():
    bad = []
    count = 0
    for spec in corpus(max_order=500, solvable=True):
        G = corpus_group(spec)
        count += len(conjugacy_classes(G))
        bad += [(spec, a) for a in sweeps.lemma_t2_all(G)]
    ok = not bad
    _report(8, ok, f"{count} class representatives, {len(bad)} failures")
    assert ok


def _oracle_mismatches(spec):
    G = corpus_group(spec)
    n = G.degree
    elems = O.closure(O.raw(G.generators), n)
    out = []
    if G.order() != len(elems):
        out.append("order")
    if not all(G.contains(g) for g in G.elements()) or len(set(G.elements())) != len(elems):
        out.append("membership")
    if {frozenset(O.raw(C.elements)) for C in conjugacy_classes(G)} != set(O.classes(elems)):
        out.append("classes")
    if series.commutator_subgroup(G, G, G).order() != len(O.all_commutators(elems, elems, n)):
        out.append("commutators")
    for C in conjugacy_classes(G):
        N = normal_closure(G, C.representative)
        if N.order() != len(O.normal_closure(elems, [tuple(C.representative.array)], n)):
            out.append("normal closure")
            break
    return out


def test_criterion_9_infrastructure_oracles():
    bad = {}
    for spec in corpus(max_order=2000):
        m = _oracle_mismatches(spec)
        if m:
            bad[spec] = m
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "solvrad", "order", "psl2:13"],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    ok = not bad and proc.stdout.strip() == "1092" and proc.returncode == 0 and elapsed < 1.0
    _report(9, ok, f"oracle mismatches {bad}, order psl2:13 -> {proc.stdout.strip()} in {elapsed:.2f} s")
    assert ok


def test_criterion_10_determinism(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.json"
        proc = subprocess.run([sys.executable, "-m", "solvrad", "survey", "--corpus", "default",
                               "--k", "4", "--seed", "0", "--json", str(path)],
                              capture_output=True, text=True)
        outs.append((proc.returncode, path.read_bytes()))
    ok = outs[0][0] == outs[1][0] == 0 and outs[0][1] == outs[1][1]
    _report(10, ok, f"exit codes {[c for c, _ in outs]}, identical bytes {outs[0][1] == outs[1][1]}, "
                    f"{len(outs[0][1])} bytes")
    assert ok


if __name__ == "__main__":
    import tempfile

    failed = 0
    for name, fn in sorted(globals().items(), key=lambda kv: int(kv[0].split("_")[2])
                           if kv[0].startswith("test_criterion_") else 0):
        if not name.startswith("test_criterion_"):
            continue
        try:
            if "tmp_path" in fn.__code__.co_varnames[:fn.__code__.co_argcount]:
                with tempfile.TemporaryDirectory() as d:
                    fn(Path(d))
            else:
                fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
