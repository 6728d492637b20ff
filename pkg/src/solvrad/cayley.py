"""Multiplication-table view of a small permutation group.

Elements are indexed in lexicographic order (index 0 is the identity) and
subgroups are boolean masks over that index. This is the engine behind the
exhaustive tuple searches, where the same small subgroups are generated and
tested many thousands of times.
"""

from __future__ import annotations

import numpy as np

from .errors import GroupTooLarge
from .perm import Permutation

#: Largest order for which a table is built (the table has order**2 entries).
TABLE_BOUND = 6000


class CayleyTable:
    def __init__(self, G, bound: int = TABLE_BOUND):
        n = G.order()
        if n > bound:
            raise GroupTooLarge(f"order {n} exceeds multiplication-table bound {bound}")
        self.group = G
        self.elements = G.elements()
        self.n = n
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.mul = self._build_mul()
        self.inv = np.argmin(self.mul, axis=1).astype(np.int32)
        self._solvable: dict = {}
        self._nilpotent: dict = {}

    def _build_mul(self) -> np.ndarray:
        n, deg = self.n, self.group.degree
        E = np.array([p.array for p in self.elements], dtype=np.int64).reshape(n, deg)
        mul = np.empty((n, n), dtype=np.int32)
        if deg ** deg < 2 ** 62:
            weights = deg ** np.arange(deg - 1, -1, -1, dtype=np.int64)
            codes = E @ weights  # ascending, since elements are lex sorted
            for i in range(n):
                # row i: e_i * e_j has images e_j[e_i[x]]
                prod_codes = E[:, E[i]] @ weights
                mul[i] = np.searchsorted(codes, prod_codes)
        else:
            index = {p.array: i for i, p in enumerate(self.elements)}
            for i in range(n):
                rows = E[:, E[i]]
                mul[i] = [index[tuple(r)] for r in rows.tolist()]
        return mul

    # -- conversion ------------------------------------------------------
    def idx(self, p: Permutation) -> int:
        return self.index[p]

    def perm(self, i: int) -> Permutation:
        return self.elements[int(i)]

    def mask_elements(self, mask: np.ndarray) -> list:
        return [self.elements[i] for i in np.flatnonzero(mask)]

    def mask_of(self, H) -> np.ndarray:
        """Mask of a subgroup given as a group object or generator list."""
        gens = list(H.generators) if hasattr(H, "generators") else list(H)
        return self.closure([self.index[g] for g in gens])

    @staticmethod
    def key(mask: np.ndarray) -> bytes:
        return np.packbits(mask).tobytes()

    # -- closures --------------------------------------------------------
    def closure(self, gens, start: np.ndarray | None = None) -> np.ndarray:
        """Subgroup generated by ``gens`` (indices) and, if given, the
        subgroup ``start``."""
        gens = np.asarray(list(gens), dtype=np.int64)
        if start is None:
            mask = np.zeros(self.n, dtype=bool)
            mask[0] = True
            frontier = np.array([0])
        else:
            mask = start.copy()
            frontier = np.flatnonzero(mask)
        if gens.size == 0:
            return mask
        while frontier.size:
            prod = self.mul[np.ix_(frontier, gens)].ravel()
            new = np.unique(prod[~mask[prod]])
            mask[new] = True
            frontier = new
        return mask

    def conj(self, x, g):
        """``x ^ g = g**-1 x g`` elementwise on index arrays."""
        return self.mul[self.mul[self.inv[g], x], g]

    def comm(self, a, b):
        """``[a, b] = a**-1 b**-1 a b`` on index arrays."""
        m = self.mul
        return m[m[m[self.inv[a], self.inv[b]], a], b]

    def normal_closure(self, gens, conj_by, start: np.ndarray | None = None) -> np.ndarray:
        """Smallest subgroup containing ``gens`` normalized by ``conj_by``."""
        gens = [int(g) for g in gens]
        conj_by = [int(h) for h in conj_by]
        mask = self.closure(gens, start)
        while True:
            elems = np.flatnonzero(mask)
            extra = []
            for h in conj_by:
                c = self.conj(elems, h)
                missing = c[~mask[c]]
                if missing.size:
                    extra.append(int(missing[0]))
            if not extra:
                return mask
            mask = self.closure(extra, mask)

    def generators_of(self, mask: np.ndarray) -> list:
        """A small generating set for a subgroup mask (greedy)."""
        gens = []
        cur = np.zeros(self.n, dtype=bool)
        cur[0] = True
        for i in np.flatnonzero(mask):
            if not cur[i]:
                gens.append(int(i))
                cur = self.closure([i], cur)
                if cur.sum() == mask.sum():
                    break
        return gens

    # -- series ----------------------------------------------------------
    def commutator(self, A: np.ndarray, B: np.ndarray, gens_a=None, gens_b=None) -> np.ndarray:
        ga = self.generators_of(A) if gens_a is None else list(gens_a)
        gb = self.generators_of(B) if gens_b is None else list(gens_b)
        if not ga or not gb:
            triv = np.zeros(self.n, dtype=bool)
            triv[0] = True
            return triv
        comms = {int(self.comm(a, b)) for a in ga for b in gb}
        return self.normal_closure(sorted(comms), ga + gb)

    def derived_subgroup(self, H: np.ndarray, gens=None) -> np.ndarray:
        g = self.generators_of(H) if gens is None else list(gens)
        return self.commutator(H, H, g, g)

    def is_solvable(self, H: np.ndarray, gens=None) -> bool:
        """Derived series reaches 1; every term visited shares the verdict."""
        visited = []
        cur, g = H, gens
        while True:
            k = self.key(cur)
            hit = self._solvable.get(k)
            if hit is not None:
                result = hit
                break
            visited.append(k)
            size = int(cur.sum())
            if size == 1:
                result = True
                break
            nxt = self.derived_subgroup(cur, g)
            if int(nxt.sum()) == size:
                result = False
                break
            cur, g = nxt, None
        for k in visited:
            self._solvable[k] = result
        return result

    def is_nilpotent(self, H: np.ndarray, gens=None) -> bool:
        key = self.key(H)
        hit = self._nilpotent.get(key)
        if hit is not None:
            return hit
        result = int(self.nilpotent_residual(H, gens).sum()) == 1
        self._nilpotent[key] = result
        return result

    def nilpotent_residual(self, H: np.ndarray, gens=None) -> np.ndarray:
        gh = self.generators_of(H) if gens is None else list(gens)
        cur = H
        size = int(H.sum())
        while size > 1:
            nxt = self.commutator(cur, H, None, gh)
            nsize = int(nxt.sum())
            if nsize == size:
                break
            cur, size = nxt, nsize
        return cur

    def lower_fitting(self, H: np.ndarray) -> list:
        """Lower Fitting series of a subgroup; ends at the trivial group when
        solvable, otherwise at a nontrivial perfect-residual term."""
        terms = [H]
        cur = H
        while cur.sum() > 1:
            nxt = self.nilpotent_residual(cur)
            if nxt.sum() == cur.sum():
                break
            terms.append(nxt)
            cur = nxt
        return terms

    def fitting_height(self, H: np.ndarray) -> int | None:
        terms = self.lower_fitting(H)
        if terms[-1].sum() != 1:
            return None
        return len(terms) - 1

    def orbit_under(self, x: int, gens) -> np.ndarray:
        """Conjugation orbit of ``x`` under the subgroup generated by ``gens``."""
        seen = np.zeros(self.n, dtype=bool)
        seen[x] = True
        frontier = np.array([x])
        gens = [int(g) for g in gens]
        while frontier.size:
            nxt = np.concatenate([self.conj(frontier, h) for h in gens]) if gens else frontier[:0]
            new = np.unique(nxt[~seen[nxt]])
            seen[new] = True
            frontier = new
        return seen
