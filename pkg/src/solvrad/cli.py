"""``solvrad`` command line.

Exit codes: 0 success, 1 usage or input error, 2 a report contains a theorem
violation, 3 a search budget was exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import catalog, height, modrep, report, series
from .criterion import (
    DEFAULT_BUDGET,
    DEFAULT_SAMPLES,
    baer_suzuki_check,
    class_k_test,
    min_witness,
)
from .errors import BudgetExceeded, GroupError, TheoremViolationSuspected
from .group import class_of, conjugacy_classes, normal_closure
from .perm import element_order, format_permutation, parse_permutation

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _classes_for(G, rep_text):
    if rep_text is None:
        return conjugacy_classes(G)
    return [class_of(G, parse_permutation(rep_text, G.degree))]


def _specs(args) -> list:
    if getattr(args, "corpus", None) == "default":
        return list(catalog.DEFAULT_CORPUS)
    if getattr(args, "corpus", None):
        raise GroupError(f"unknown corpus {args.corpus!r}")
    if not args.group:
        raise GroupError("give a group spec or --corpus default")
    return list(args.group)


# -- subcommands: each returns (json payload, text lines, violation flag) ------

def cmd_order(args):
    G = catalog.build(args.group)
    return {"group": args.group, "order": G.order(), "degree": G.degree}, [str(G.order())], False


def cmd_radical(args):
    G = catalog.build(args.group)
    R = series.solvable_radical(G)
    lines = [f"order {R.order()}", "generators " + " ".join(R.generator_string() or ["()"])]
    return {"group": args.group, "radical": series.subgroup_json(R)}, lines, False


def cmd_fitting(args):
    G = catalog.build(args.group)
    F = series.fitting_subgroup(G)
    prof = report.fitting_json(G)
    lines = [f"fitting subgroup order {F.order()}"]
    if prof is None:
        lines.append("group is not solvable; no Fitting height")
    else:
        lines.append(f"fitting height {prof['height']}")
        lines.append("lower Fitting series orders " + " ".join(map(str, prof["orders"])))
    return {"group": args.group, "fitting_subgroup": series.subgroup_json(F), "profile": prof}, lines, False


def cmd_sfit(args):
    G = catalog.build(args.group)
    S = height.sfit(G)
    lines = [f"order {S.order()}", "generators " + " ".join(S.generator_string())]
    return {"group": args.group, "sfit": series.subgroup_json(S)}, lines, False


def cmd_classes(args):
    G = catalog.build(args.group)
    rows, lines = [], []
    for C in conjugacy_classes(G):
        rep = C.representative
        rows.append({"representative": format_permutation(rep), "size": C.size,
                     "element_order": element_order(rep)})
        lines.append(f"{format_permutation(rep)}  size {C.size}  order {element_order(rep)}")
    return {"group": args.group, "classes": rows}, lines, False


def cmd_class_test(args):
    G = catalog.build(args.group)
    out, lines, bad = [], [], False
    for C in _classes_for(G, args.rep):
        v = class_k_test(G, C, args.k, args.mode, budget=args.budget,
                         samples=args.samples, seed=args.seed)
        out.append(v.to_json())
        closure = series.is_solvable(normal_closure(G, C.representative))
        # below k = 4 a mismatch is expected (transpositions in S5 at k = 3)
        if v.mode == "exhaustive" and v.k >= 4 and closure != v.all_solvable:
            bad = True
        w = "" if v.witness is None else "  witness " + " ".join(map(format_permutation, v.witness))
        lines.append(f"{format_permutation(C.representative)}  k={v.k}  {v.mode}  "
                     f"all_solvable={str(v.all_solvable).lower()}{w}")
    return {"group": args.group, "verdicts": out}, lines, bad


def cmd_min_witness(args):
    G = catalog.build(args.group)
    out, lines = [], []
    for C in _classes_for(G, args.rep):
        prof = min_witness(G, C, args.budget, samples=args.samples, seed=args.seed)
        out.append(prof.to_json())
        k = "none (class generates a solvable subgroup)" if prof.min_witness_k is None else prof.min_witness_k
        lines.append(f"{format_permutation(C.representative)}  min_witness_k = {k}")
        if prof.witness is not None:
            lines.append("  witness " + " ".join(map(format_permutation, prof.witness)))
    return {"group": args.group, "profiles": out}, lines, False


def cmd_baer_suzuki(args):
    G = catalog.build(args.group)
    if args.rep is not None:
        elems = [parse_permutation(args.rep, G.degree)]
    else:
        elems = [C.representative for C in conjugacy_classes(G)
                 if _is_prime(element_order(C.representative))]
    out, lines = [], []
    for g in elems:
        r = baer_suzuki_check(G, g)
        out.append(r.to_json())
        lines.append(f"{format_permutation(g)}  pairs_nilpotent={str(r.all_pairs_nilpotent).lower()}  "
                     f"closure_nilpotent={str(r.closure_nilpotent).lower()}")
    return {"group": args.group, "reports": out}, lines, False


def cmd_t1_sweep(args):
    specs = _specs(args)
    primes = tuple(args.primes)
    groups, lines = [], []
    for s in specs:
        G = catalog.build(s)
        reps = modrep.t1_sweep(G, primes)
        worst = max((r.ratio for r in reps), default=None)
        groups.append({"spec": s, "solvable": series.is_solvable(G), "checks": len(reps),
                       "max_ratio": worst, "reports": [r.to_json() for r in reps]})
        lines.append(f"{s}  checks {len(reps)}  max ratio {'-' if worst is None else f'{worst:.4f}'}")
    return {"primes": list(primes), "groups": groups}, lines, False


def cmd_survey(args):
    specs = _specs(args)
    rep = report.survey(specs, k=args.k, seed=args.seed, budget=args.budget,
                        samples=args.samples, threads=args.threads)
    lines = []
    for g in rep["groups"]:
        fh = "-" if g["fitting"] is None else g["fitting"]["height"]
        lines.append(f"{g['spec']}  order {g['order']}  radical {g['radical']['order']}  "
                     f"fitting height {fh}  classes {len(g['classes'])}")
    lines.append(f"theorem violations: {len(rep['theorem_violations'])}")
    return rep, lines, bool(rep["theorem_violations"])


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="solvrad", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, group="required"):
        sp = sub.add_parser(name, help=help_text)
        if group == "required":
            sp.add_argument("group", help="group spec, e.g. sym:5 or file:gens.grp")
        elif group == "many":
            sp.add_argument("group", nargs="*", help="group specs")
            sp.add_argument("--corpus", help="named corpus (only 'default')")
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here")
        sp.add_argument("--seed", type=int, default=0)
        sp.set_defaults(func=func)
        return sp

    add("order", cmd_order, "group order")
    add("radical", cmd_radical, "solvable radical")
    add("fitting", cmd_fitting, "Fitting subgroup and Fitting height")
    add("sfit", cmd_sfit, "last nontrivial lower Fitting term")
    add("classes", cmd_classes, "conjugacy classes")
    for name, func in (("class-test", cmd_class_test), ("min-witness", cmd_min_witness)):
        sp = add(name, func, "k-tuple solvability test" if name == "class-test" else "smallest witness size")
        sp.add_argument("--rep", help="class representative in cycle notation")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        if name == "class-test":
            sp.add_argument("--k", type=int, default=4)
            sp.add_argument("--mode", choices=("exhaustive", "randomized", "auto"), default="auto")
    sp = add("baer-suzuki", cmd_baer_suzuki, "pair criterion for nilpotent normal closure")
    sp.add_argument("--rep", help="element of prime order (default: every prime-order class)")
    sp = add("t1-sweep", cmd_t1_sweep, "fixed-space bound over permutation-module constituents", "many")
    sp.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11, 13])
    sp = add("survey", cmd_survey, "corpus survey", "many")
    sp.add_argument("--k", type=int, default=4)
    sp.add_argument("--budget", type=int, default=report.SURVEY_BUDGET)
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return p


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        payload, lines, violated = args.func(args)
    except TheoremViolationSuspected as exc:
        print(f"theorem violation suspected: {exc}", file=sys.stderr)
        if args.json:
            _write_json(args.json, {"schema": report.SCHEMA, "command": args.command,
                                    "theorem_violations": [{"message": str(exc), "details": exc.details}]})
        return EXIT_VIOLATION
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for line in lines:
        print(line)
    if args.command == "survey":
        print(f"wall time {time.perf_counter() - start:.2f} s", file=sys.stderr)
    if args.json:
        payload = {"schema": report.SCHEMA, "command": args.command, **payload}
        _write_json(args.json, payload)
    return EXIT_VIOLATION if violated else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
