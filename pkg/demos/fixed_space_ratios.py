"""Distribution of dim C_V(a) / dim V over irreducible permutation-module
constituents in coprime characteristic.

The bound being probed is 3/4; the histogram shows how close the corpus gets.
"""

import numpy as np

from solvrad import catalog, modrep, series

ratios = []
for spec, G in catalog.default_corpus():
    if not series.is_solvable(G):
        continue
    reports = modrep.t1_sweep(G)
    ratios += [r.ratio for r in reports]
    if reports:
        worst = max(reports, key=lambda r: r.ratio)
        print(f"{spec:24s} checks {len(reports):4d}  worst {worst.fixed_dim}/{worst.dim} "
              f"(p = {worst.p}, a = {worst.element})")

ratios = np.array(ratios)
counts, edges = np.histogram(ratios, bins=[0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 1.0])
print(f"\n{len(ratios)} checks, max ratio {ratios.max():.4f}")
for c, lo, hi in zip(counts, edges, edges[1:]):
    print(f"  [{lo:.3f}, {hi:.3f})  {'#' * int(np.ceil(60 * c / counts.max()))} {c}")
