"""Fitting heights and radicals across the default corpus.

For each group: order, solvable radical, Fitting subgroup and, for solvable
groups, the lower Fitting series together with its last nontrivial term.
"""

from solvrad import catalog, height, series

print(f"{'group':24s} {'|G|':>5s} {'|R|':>5s} {'|F|':>5s}  fh  lower Fitting orders")
for spec, G in catalog.default_corpus():
    R, F = series.solvable_radical(G), series.fitting_subgroup(G)
    if series.is_solvable(G):
        prof = height.fitting_profile(G)
        tail = f"{prof.height:3d}  {[t.order() for t in prof.lower_fitting_terms]}"
    else:
        tail = "  -  (not solvable)"
    print(f"{spec:24s} {G.order():5d} {R.order():5d} {F.order():5d} {tail}")
