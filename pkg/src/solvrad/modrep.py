"""Small modules over prime fields: fixed spaces, spinning, irreducibility and
the splitting of permutation modules in coprime characteristic.

Vectors are rows and matrices act on the right, so ``v -> v @ rho(g)`` and
``rho(g * h) = rho(g) @ rho(h)`` under the left-to-right permutation product.
All arithmetic is exact integer arithmetic mod ``p``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np
import sympy

from . import series
from .errors import (
    BudgetExceeded,
    ElementNotInGroup,
    HypothesisNotMet,
    ModularCharacteristic,
    TheoremViolationSuspected,
    ZeroVector,
)
from .group import PermGroup, conjugacy_classes, normal_closure
from .perm import Permutation, format_permutation

__all__ = [
    "GfMatrix",
    "GModule",
    "IrreducibilityVerdict",
    "T1Report",
    "rref",
    "rank_mod",
    "nullspace_mod",
    "inverse_mod",
    "permutation_module",
    "fixed_space_dim",
    "spin",
    "is_irreducible",
    "endomorphism_basis",
    "permutation_module_constituents",
    "check_t1_bound",
    "t1_sweep",
    "EXHAUSTIVE_BOUND",
]

EXHAUSTIVE_BOUND = 10 ** 7


# -- linear algebra mod p ------------------------------------------------------

def rref(A, p: int):
    """Reduced row echelon form of ``A`` mod ``p``: ``(nonzero rows, pivots)``."""
    R = np.array(A, dtype=np.int64) % p
    if R.ndim == 1:
        R = R.reshape(1, -1)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        f = R[:, c].copy()
        f[r] = 0
        R = (R - np.outer(f, R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank_mod(A, p: int) -> int:
    return len(rref(A, p)[1])


def nullspace_mod(A, p: int) -> np.ndarray:
    """Basis (rows) of ``{x : A @ x = 0}`` mod ``p``."""
    A = np.array(A, dtype=np.int64) % p
    cols = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = np.zeros(cols, dtype=np.int64)
        x[f] = 1
        for row, pc in zip(R, pivots):
            x[pc] = (-row[f]) % p
        basis.append(x)
    return np.array(basis, dtype=np.int64).reshape(len(basis), cols)


def left_nullspace_mod(A, p: int) -> np.ndarray:
    """Basis (rows) of ``{v : v @ A = 0}``."""
    return nullspace_mod(np.array(A).T, p)


def inverse_mod(A, p: int) -> np.ndarray:
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    R, pivots = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ValueError("matrix is singular mod p")
    return R[:, n:]


@dataclass(frozen=True)
class GfMatrix:
    """A square matrix over GF(p) (thin wrapper used at API boundaries)."""

    p: int
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: "GfMatrix") -> "GfMatrix":
        return GfMatrix(self.p, (self.entries @ other.entries) % self.p)

    def det(self) -> int:
        return int(sympy.Matrix(self.entries.tolist()).det()) % self.p

    def to_list(self) -> list:
        return self.entries.astype(int).tolist()


class _Echelon:
    """Incrementally maintained reduced echelon basis of a subspace."""

    def __init__(self, p: int, d: int):
        self.p, self.d = p, d
        self.rows: list = []
        self.pivots: list = []

    def reduce(self, v):
        v = np.array(v, dtype=np.int64) % self.p
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * pow(int(v[c]), -1, self.p)) % self.p
        for i, row in enumerate(self.rows):
            if row[c]:
                self.rows[i] = (row - row[c] * v) % self.p
        pos = int(np.searchsorted(self.pivots, c))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        return True

    def __len__(self) -> int:
        return len(self.rows)

    def basis(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(len(self.rows), self.d)


# -- modules -------------------------------------------------------------------

@dataclass
class GModule:
    """``group`` acting on ``GF(p)^dim``; ``action[i]`` is the matrix of
    ``group.generators[i]``. ``basis`` embeds the module in the ambient space
    it was cut out of (rows), when it came from a splitting."""

    group: PermGroup
    p: int
    dim: int
    action: list
    basis: np.ndarray | None = None
    irreducible: bool | None = None
    certification: str | None = None
    _matrices: dict = field(default_factory=dict, repr=False)

    def is_trivial_action(self) -> bool:
        eye = np.eye(self.dim, dtype=np.int64)
        return all(np.array_equal(A % self.p, eye) for A in self.action)

    def element_matrices(self) -> dict:
        """Matrix of every group element, by breadth-first search over the
        Cayley graph from the identity."""
        if not self._matrices:
            ident = self.group.identity()
            mats = {ident: np.eye(self.dim, dtype=np.int64)}
            frontier = [ident]
            gens = list(zip(self.group.generators, self.action))
            while frontier:
                nxt = []
                for x in frontier:
                    for s, A in gens:
                        y = x * s
                        if y not in mats:
                            mats[y] = (mats[x] @ A) % self.p
                            nxt.append(y)
                frontier = nxt
            self._matrices = mats
        return self._matrices

    def matrix(self, g: Permutation) -> np.ndarray:
        mats = self.element_matrices()
        if g not in mats:
            raise ElementNotInGroup(f"{format_permutation(g)} is not in the group")
        return mats[g]

    def is_homomorphism(self) -> bool:
        """Every Cayley-graph edge ``x -> x * s`` satisfies
        ``rho(x) rho(s) = rho(x * s)``; with the tree above this is a complete
        check that the generator matrices define a representation."""
        mats = self.element_matrices()
        if len(mats) != self.group.order():
            return False
        for x, M in mats.items():
            for s, A in zip(self.group.generators, self.action):
                if not np.array_equal((M @ A) % self.p, mats[x * s]):
                    return False
        return True

    def check_random_words(self, words: int = 1000, length: int = 12, seed: int = 0) -> bool:
        """Random generator words: the product of the matrices must equal the
        matrix of the product permutation."""
        rng = random.Random(seed)
        mats = self.element_matrices()
        pairs = list(zip(self.group.generators, self.action))
        for _ in range(words):
            g, M = self.group.identity(), np.eye(self.dim, dtype=np.int64)
            for _ in range(rng.randrange(1, length + 1)):
                s, A = rng.choice(pairs)
                g, M = g * s, (M @ A) % self.p
            if not np.array_equal(M, mats[g]):
                return False
        return True

    def dual(self) -> "GModule":
        acts = [inverse_mod(A, self.p).T % self.p for A in self.action]
        return GModule(self.group, self.p, self.dim, acts)

    def submodule(self, B: np.ndarray) -> "GModule":
        """Module on the row space of ``B`` (assumed invariant)."""
        B, piv = rref(B, self.p)
        acts = [((B @ A) % self.p)[:, piv] for A in self.action]
        ambient = B if self.basis is None else (B @ self.basis) % self.p
        return GModule(self.group, self.p, len(piv), acts, basis=ambient)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "dim": self.dim,
            "generators": [(A % self.p).astype(int).tolist() for A in self.action],
            "irreducible": self.irreducible,
            "certification": self.certification,
            "trivial_action": self.is_trivial_action(),
        }


def permutation_module(G: PermGroup, p: int) -> GModule:
    """The natural module ``GF(p)^n`` with ``e_i -> e_{g(i)}``."""
    n = G.degree
    acts = []
    for g in G.generators:
        P = np.zeros((n, n), dtype=np.int64)
        P[np.arange(n), list(g.array)] = 1
        acts.append(P)
    return GModule(G, p, n, acts)


def fixed_space_dim(M: GModule, a: Permutation) -> int:
    """``dim C_V(a)``: nullity of ``rho(a) - 1``."""
    if not M.group.contains(a):
        raise ElementNotInGroup(f"{format_permutation(a)} is not in the group")
    X = (M.matrix(a) - np.eye(M.dim, dtype=np.int64)) % M.p
    return M.dim - rank_mod(X, M.p)


def spin(M: GModule, v) -> np.ndarray:
    """Echelon basis of the smallest invariant subspace containing ``v``."""
    v = np.array(v, dtype=np.int64) % M.p
    if not v.any():
        raise ZeroVector("cannot spin the zero vector")
    ech = _Echelon(M.p, M.dim)
    ech.add(v)
    queue = [v]
    while queue and len(ech) < M.dim:
        w = queue.pop()
        for A in M.action:
            u = (w @ A) % M.p
            if ech.add(u):
                queue.append(u)
    return ech.basis()


def _algebra_basis(M: GModule) -> np.ndarray:
    """Basis of the span of all ``rho(g)`` (the enveloping algebra), as
    flattened matrices."""
    d, p = M.dim, M.p
    ech = _Echelon(p, d * d)
    eye = np.eye(d, dtype=np.int64)
    ech.add(eye.ravel())
    queue = [eye]
    while queue:
        X = queue.pop()
        for A in M.action:
            Y = (X @ A) % p
            if ech.add(Y.ravel()):
                queue.append(Y)
    return ech.basis().reshape(-1, d, d)


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    method: str  # "exhaustive" or "sampled"
    trivial_action: bool = False
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.irreducible


def _projective_points(p: int, d: int):
    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            v = [0] * lead + [1] + list(tail)
            yield np.array(v, dtype=np.int64)


def _normalize_rows(V: np.ndarray, p: int) -> np.ndarray:
    lead = np.argmax(V != 0, axis=1)
    scale = np.array([pow(int(x), -1, p) for x in V[np.arange(len(V)), lead]], dtype=np.int64)
    return (V * scale[:, None]) % p


def is_irreducible(M: GModule, *, exhaustive_bound: int = EXHAUSTIVE_BOUND,
                   samples: int = 200, seed: int = 0, method: str = "auto") -> IrreducibilityVerdict:
    """Spinning test.

    Exhaustive when ``p**dim <= exhaustive_bound``: every projective point is
    spun (points in one group orbit share the verdict, so one per orbit is
    enough). Otherwise ``samples`` random vectors of the module and of its dual
    must all spin to the whole space; that verdict is only probabilistic and is
    flagged ``"sampled"``.
    """
    p, d = M.p, M.dim
    trivial = M.is_trivial_action()
    if method == "auto":
        method = "exhaustive" if p ** d <= exhaustive_bound else "sampled"
    if method == "exhaustive":
        if p ** d > exhaustive_bound:
            raise BudgetExceeded(f"{p}^{d} vectors exceed exhaustive bound {exhaustive_bound}")
        algebra = _algebra_basis(M)
        mats = np.array(list(M.element_matrices().values()))
        weights = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
        seen = np.zeros(p ** d, dtype=bool)
        for v in _projective_points(p, d):
            code = int(v @ weights)
            if seen[code]:
                continue
            if rank_mod(np.einsum("i,mij->mj", v, algebra), p) < d:
                return IrreducibilityVerdict(False, "exhaustive", trivial, tuple(int(x) for x in v))
            orbit = _normalize_rows(np.einsum("i,gij->gj", v, mats) % p, p)
            seen[orbit @ weights] = True
        return IrreducibilityVerdict(True, "exhaustive", trivial)
    rng = np.random.default_rng(seed)
    for module in (M, M.dual()):
        for _ in range(samples):
            v = rng.integers(0, p, size=d)
            if not v.any():
                continue
            if len(spin(module, v)) < d:
                return IrreducibilityVerdict(False, "sampled", trivial, tuple(int(x) for x in v))
    return IrreducibilityVerdict(True, "sampled", trivial)


def endomorphism_basis(M: GModule) -> np.ndarray:
    """Basis of ``{X : rho(s) X = X rho(s)}`` (flattened row-major)."""
    d, p = M.dim, M.p
    eye = np.eye(d, dtype=np.int64)
    eqs = [np.kron(A, eye) - np.kron(eye, A.T) for A in M.action]
    return nullspace_mod(np.vstack(eqs) % p, p)


def _min_poly(X: np.ndarray, p: int) -> list:
    """Monic minimal polynomial of ``X``, coefficients from highest degree."""
    d = X.shape[0]
    powers = [np.eye(d, dtype=np.int64)]
    while True:
        nxt = (powers[-1] @ X) % p
        A = np.array([P.ravel() for P in powers]).T  # columns are powers
        sol = nullspace_mod(np.hstack([A, nxt.ravel()[:, None]]) % p, p)
        if len(sol):
            c = sol[0]
            c = (c * pow(int(c[-1]), -1, p)) % p
            return [1] + [int(x) for x in c[-2::-1]]
        powers.append(nxt)


def _poly_at(coeffs: list, X: np.ndarray, p: int) -> np.ndarray:
    R = np.zeros_like(X)
    eye = np.eye(X.shape[0], dtype=np.int64)
    for c in coeffs:
        R = (R @ X + c * eye) % p
    return R


def _maschke_complement(M: GModule, W: np.ndarray) -> np.ndarray:
    """An invariant complement of the submodule with row basis ``W``."""
    p, d = M.p, M.dim
    W, piv = rref(W, p)
    rest = [c for c in range(d) if c not in piv]
    full = np.vstack([W, np.eye(d, dtype=np.int64)[rest]])
    mask = np.diag([1] * len(piv) + [0] * len(rest)).astype(np.int64)
    P0 = (inverse_mod(full, p) @ mask @ full) % p
    total = np.zeros((d, d), dtype=np.int64)
    for g, R in M.element_matrices().items():
        total = (total + M.matrix(~g) @ P0 @ R) % p
    proj = (total * pow(M.group.order(), -1, p)) % p
    return left_nullspace_mod(proj, p)


def _split(M: GModule, rng: random.Random, attempts: int = 500) -> list:
    E = endomorphism_basis(M)
    if len(E) == 1:
        M.irreducible, M.certification = True, "endomorphism"
        return [M]
    d, p = M.dim, M.p
    x = sympy.Symbol("x")
    for _ in range(attempts):
        coeffs = [rng.randrange(p) for _ in range(len(E))]
        X = (np.tensordot(coeffs, E, axes=1) % p).reshape(d, d)
        f = _min_poly(X, p)
        _, factors = sympy.Poly(f, x, modulus=p).factor_list()
        if len(factors) == 1 and factors[0][1] == 1:
            if len(f) - 1 == len(E):
                # the endomorphism algebra is the field GF(p)[X]
                M.irreducible, M.certification = True, "endomorphism"
                return [M]
            continue
        g = [int(c) % p for c in factors[0][0].all_coeffs()]
        W = left_nullspace_mod(_poly_at(g, X, p), p)
        if 0 < len(W) < d:
            U = _maschke_complement(M, W)
            return _split(M.submodule(W), rng) + _split(M.submodule(U), rng)
    raise RuntimeError("failed to split or certify module")


def permutation_module_constituents(G: PermGroup, p: int, *, certify: bool = True) -> list:
    """Irreducible constituents of the natural permutation module over GF(p),
    for ``p`` coprime to ``|G|``; sorted by dimension."""
    if G.order() % p == 0:
        raise ModularCharacteristic(f"{p} divides |G| = {G.order()}")
    parts = _split(permutation_module(G, p), random.Random(0))
    if certify:
        for C in parts:
            verdict = is_irreducible(C)
            if not verdict:
                raise RuntimeError("spinning test rejects a constituent certified by its endomorphisms")
            C.certification = f"endomorphism+{verdict.method}"
    return sorted(parts, key=lambda C: (C.dim, not C.is_trivial_action()))


@dataclass
class T1Report:
    element: Permutation
    p: int
    dim: int
    fixed_dim: int
    holds: bool

    @property
    def ratio(self) -> float:
        return self.fixed_dim / self.dim

    def to_json(self) -> dict:
        return {"element": format_permutation(self.element), "p": self.p, "dim": self.dim,
                "fixed_dim": self.fixed_dim, "ratio": self.ratio, "holds": self.holds}


def check_t1_bound(M: GModule, a: Permutation) -> T1Report:
    """``4 dim C_V(a) <= 3 dim V`` for a nontrivial irreducible module of a
    solvable group normally generated by ``a``."""
    G = M.group
    if not G.contains(a):
        raise ElementNotInGroup(f"{format_permutation(a)} is not in the group")
    if not series.is_solvable(G):
        raise HypothesisNotMet("solvable")
    if normal_closure(G, a).order() != G.order():
        raise HypothesisNotMet("normally generated", "the conjugates of a do not generate G")
    if M.is_trivial_action():
        raise HypothesisNotMet("nontrivial", "the module is trivial")
    if M.irreducible is None:
        M.irreducible = bool(is_irreducible(M))
    if not M.irreducible:
        raise HypothesisNotMet("irreducible")
    fixed = fixed_space_dim(M, a)
    report = T1Report(a, M.p, M.dim, fixed, 4 * fixed <= 3 * M.dim)
    if not report.holds:
        raise TheoremViolationSuspected("fixed-space bound violated", report.to_json())
    return report


def t1_sweep(G: PermGroup, primes=(5, 7, 11, 13)) -> list:
    """Check the bound for every class representative that normally generates
    ``G``, every coprime prime and every nontrivial constituent of the
    permutation module. Returns the reports (empty for nonsolvable ``G``)."""
    if not series.is_solvable(G):
        return []
    reps = [C.representative for C in conjugacy_classes(G)
            if normal_closure(G, C.representative).order() == G.order()]
    reports = []
    if not reps:
        return reports
    for p in primes:
        if G.order() % p == 0:
            continue
        for M in permutation_module_constituents(G, p):
            if M.is_trivial_action():
                continue
            for a in reps:
                reports.append(check_t1_bound(M, a))
    return reports
