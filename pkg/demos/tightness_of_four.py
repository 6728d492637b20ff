"""How many transpositions does it take to leave the solvable world?

Any three transpositions of S_n generate a solvable group; four adjacent ones
already generate S_5. This script checks both facts for n = 5..8 and prints
the witness found by the exhaustive search.
"""

from solvrad import catalog
from solvrad.criterion import class_k_test, min_witness
from solvrad.group import class_of
from solvrad.perm import cycle, format_permutation

for n in range(5, 9):
    G = catalog.build(f"sym:{n}")
    C = class_of(G, cycle(n, 1, 2))
    three = class_k_test(G, C, 3, "exhaustive")
    prof = min_witness(G, C)
    witness = " ".join(format_permutation(w) for w in prof.witness)
    print(f"S{n}: |C| = {C.size:2d}  k=3 all solvable: {three.all_solvable}  "
          f"({three.subgroups_tested} subgroups)  min k = {prof.min_witness_k}  witness {witness}")
