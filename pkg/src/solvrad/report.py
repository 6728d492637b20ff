"""Corpus-wide survey: radicals, Fitting data and per-class witness profiles.

Per-group work is independent, so ``survey`` fans groups out to a process pool
and reassembles the records in corpus order. Reports hold no timing data, so
identical inputs give identical JSON.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from . import catalog, height, series
from .criterion import (
    DEFAULT_SAMPLES,
    class_k_test,
    min_witness,
    radical_by_criterion,
)
from .errors import TheoremViolationSuspected
from .group import conjugacy_classes, normal_closure

__all__ = ["SCHEMA", "SURVEY_BUDGET", "survey_group", "survey", "fitting_json"]

SCHEMA = 1
SURVEY_BUDGET = 10 ** 7


def fitting_json(G) -> dict | None:
    """Fitting height, lower Fitting orders and sfit, or None if ``G`` is not
    solvable."""
    if not series.is_solvable(G):
        return None
    return height.fitting_profile(G).to_json()


def survey_group(spec: str, k: int = 4, seed: int = 0, budget: int = SURVEY_BUDGET,
                 samples: int = DEFAULT_SAMPLES) -> dict:
    """Survey one group. Violations are recorded, not raised."""
    G = catalog.build(spec)
    violations = []
    classes = []
    for C in conjugacy_classes(G):
        rep = C.representative
        closure_solvable = series.is_solvable(normal_closure(G, rep))
        verdict = class_k_test(G, C, k, "auto", budget=budget, samples=samples, seed=seed)
        entry = {"k_test": verdict.to_json()}
        if verdict.mode == "exhaustive" and k >= 4 and verdict.all_solvable != closure_solvable:
            violations.append({"group": spec, "kind": "class_k_test", **verdict.to_json()})
        if verdict.mode == "randomized" and closure_solvable and not verdict.all_solvable:
            violations.append({"group": spec, "kind": "class_k_test", **verdict.to_json()})
        try:
            profile = min_witness(G, C, budget, samples=samples, seed=seed)
            entry = {**profile.to_json(), **entry}
        except TheoremViolationSuspected as exc:
            violations.append({"group": spec, "kind": "min_witness", "message": str(exc),
                               "details": exc.details})
        classes.append(entry)
    radical_ok = None
    if k >= 4:
        try:
            radical_by_criterion(G, k, budget=budget, samples=samples, seed=seed)
            radical_ok = True
        except TheoremViolationSuspected as exc:
            radical_ok = False
            violations.append({"group": spec, "kind": "radical", "message": str(exc),
                               "details": exc.details})
    return {
        "spec": spec,
        "degree": G.degree,
        "order": G.order(),
        "solvable": series.is_solvable(G),
        "radical": series.subgroup_json(series.solvable_radical(G)),
        "radical_matches_criterion": radical_ok,
        "fitting_subgroup": series.subgroup_json(series.fitting_subgroup(G)),
        "fitting": fitting_json(G),
        "classes": classes,
        "violations": violations,
    }


def _survey_args(args):
    return survey_group(*args)


def survey(specs, k: int = 4, seed: int = 0, budget: int = SURVEY_BUDGET,
           samples: int = DEFAULT_SAMPLES, threads: int | None = None) -> dict:
    """Survey every spec; records come back in input order."""
    specs = list(specs)
    threads = threads or os.cpu_count() or 1
    jobs = [(s, k, seed, budget, samples) for s in specs]
    if threads == 1 or len(jobs) <= 1:
        records = [_survey_args(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            records = list(pool.map(_survey_args, jobs))
    violations = [v for r in records for v in r.pop("violations")]
    return {
        "schema": SCHEMA,
        "command": "survey",
        "corpus": specs,
        "k": k,
        "seed": seed,
        "budget": budget,
        "samples": samples,
        "groups": records,
        "theorem_violations": violations,
    }
