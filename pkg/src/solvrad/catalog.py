"""Named permutation groups and the default verification corpus.

Group specs are short strings: ``sym:5``, ``psl2:7``, ``direct:sym:3,alt:5``,
``wreath:sym:3,cyclic:2``, ``file:path.grp``. Every constructed group is checked
against the closed-form order of its family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import OrderMismatch, ParameterOutOfRange
from .group import PermGroup, group_from_generators, parse_group_text
from .perm import Permutation, cycle

__all__ = [
    "GroupSpec",
    "parse_spec",
    "build",
    "load_group_file",
    "DEFAULT_CORPUS",
    "default_corpus",
    "sym",
    "alt",
    "cyclic",
    "dihedral",
    "psl2",
    "frobenius20",
    "sl23",
    "gl23",
    "direct",
    "wreath_small",
]

PRODUCT_ORDER_BOUND = 100_000
SIMPLE_KINDS = ("sym", "alt", "cyclic", "dihedral", "psl2")
FIXED_KINDS = ("frobenius20", "sl23", "gl23")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    n: int | None = None
    left: "GroupSpec | None" = None
    right: "GroupSpec | None" = None
    path: str | None = None

    def __str__(self) -> str:
        if self.kind in SIMPLE_KINDS:
            return f"{self.kind}:{self.n}"
        if self.kind in FIXED_KINDS:
            return self.kind
        if self.kind == "file":
            return f"file:{self.path}"
        kind = "direct" if self.kind == "direct" else "wreath"
        return f"{kind}:{_wrap(self.left)},{_wrap(self.right)}"


def _wrap(spec: GroupSpec) -> str:
    s = str(spec)
    return f"({s})" if spec.kind in ("direct", "wreath_small") else s


def _split_top(text: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    return text


def parse_spec(text: str) -> GroupSpec:
    """Parse a group spec string."""
    text = _strip_parens(text)
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind == "file":
        if not rest:
            raise ParameterOutOfRange("file: spec needs a path")
        return GroupSpec("file", path=rest)
    if kind in FIXED_KINDS:
        return GroupSpec(kind)
    if kind in SIMPLE_KINDS:
        try:
            return GroupSpec(kind, n=int(rest))
        except ValueError:
            raise ParameterOutOfRange(f"{kind} needs an integer parameter, got {rest!r}") from None
    if kind in ("direct", "wreath", "wreath_small"):
        parts = _split_top(rest)
        if len(parts) != 2:
            raise ParameterOutOfRange(f"{kind} needs exactly two factors: {text!r}")
        left, right = (parse_spec(p) for p in parts)
        return GroupSpec("direct" if kind == "direct" else "wreath_small", left=left, right=right)
    raise ParameterOutOfRange(f"unknown group kind {kind!r}")


# -- constructors ------------------------------------------------------------

def sym(n: int) -> PermGroup:
    if not 1 <= n <= 8:
        raise ParameterOutOfRange(f"sym n must be in 1..8, got {n}")
    if n == 1:
        return group_from_generators([Permutation.identity(1)])
    if n == 2:
        return group_from_generators([cycle(2, 1, 2)])
    return group_from_generators([cycle(n, 1, 2), cycle(n, *range(1, n + 1))])


def alt(n: int) -> PermGroup:
    if not 3 <= n <= 8:
        raise ParameterOutOfRange(f"alt n must be in 3..8, got {n}")
    if n == 3:
        return group_from_generators([cycle(3, 1, 2, 3)])
    long = cycle(n, *range(1, n + 1)) if n % 2 else cycle(n, *range(2, n + 1))
    return group_from_generators([cycle(n, 1, 2, 3), long])


def cyclic(n: int) -> PermGroup:
    if not 1 <= n <= 10_000:
        raise ParameterOutOfRange(f"cyclic n must be in 1..10000, got {n}")
    if n == 1:
        return group_from_generators([Permutation.identity(1)])
    return group_from_generators([cycle(n, *range(1, n + 1))])


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order ``2n`` acting on the ``n`` vertices of a polygon."""
    if not 3 <= n <= 10_000:
        raise ParameterOutOfRange(f"dihedral n must be in 3..10000, got {n}")
    refl = Permutation([n + 1 - i for i in range(1, n + 1)])
    return group_from_generators([cycle(n, *range(1, n + 1)), refl])


def psl2(p: int) -> PermGroup:
    """PSL(2, p) on the ``p + 1`` points of the projective line.

    Points ``0..p-1`` map to ``1..p`` and infinity to ``p + 1``; generated by
    ``x -> x + 1`` and ``x -> -1/x``.
    """
    if p not in (5, 7, 11, 13):
        raise ParameterOutOfRange(f"psl2 p must be one of 5, 7, 11, 13, got {p}")
    inf = p
    t = [(x + 1) % p for x in range(p)] + [inf]
    w = [inf] + [(-pow(x, -1, p)) % p for x in range(1, p)] + [0]
    return group_from_generators([Permutation(t, zero_based=True), Permutation(w, zero_based=True)])


def frobenius20() -> PermGroup:
    """C5 x| C4: the affine maps ``x -> a x + b`` of GF(5)."""
    t = [(x + 1) % 5 for x in range(5)]
    m = [(2 * x) % 5 for x in range(5)]
    return group_from_generators([Permutation(t, zero_based=True), Permutation(m, zero_based=True)])


_GF3_VECTORS = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]


def _gf3_matrix_perm(m) -> Permutation:
    (a, b), (c, d) = m
    img = []
    for x, y in _GF3_VECTORS:
        v = ((a * x + b * y) % 3, (c * x + d * y) % 3)
        img.append(_GF3_VECTORS.index(v))
    return Permutation(img, zero_based=True)


def sl23() -> PermGroup:
    """SL(2, 3) on the 8 nonzero vectors of GF(3)^2."""
    return group_from_generators([_gf3_matrix_perm(((1, 1), (0, 1))),
                                  _gf3_matrix_perm(((1, 0), (1, 1)))])


def gl23() -> PermGroup:
    """GL(2, 3) on the 8 nonzero vectors of GF(3)^2."""
    return group_from_generators([_gf3_matrix_perm(((1, 1), (0, 1))),
                                  _gf3_matrix_perm(((1, 0), (1, 1))),
                                  _gf3_matrix_perm(((2, 0), (0, 1)))])


def direct(A: PermGroup, B: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    m, k = A.degree, B.degree
    if A.order() * B.order() > PRODUCT_ORDER_BOUND:
        raise ParameterOutOfRange("direct product order exceeds 10^5")
    gens = [Permutation(list(g.array) + list(range(m, m + k)), zero_based=True)
            for g in A.generators if not g.is_identity()]
    gens += [Permutation(list(range(m)) + [m + x for x in g.array], zero_based=True)
             for g in B.generators if not g.is_identity()]
    if not gens:
        gens = [Permutation.identity(m + k)]
    return group_from_generators(gens)


def wreath_small(A: PermGroup, B: PermGroup) -> PermGroup:
    """Imprimitive wreath product ``A wr B`` on ``deg(A) * deg(B)`` points."""
    m, k = A.degree, B.degree
    if A.order() ** k * B.order() > PRODUCT_ORDER_BOUND:
        raise ParameterOutOfRange("wreath product order exceeds 10^5")
    gens = [Permutation(list(g.array) + list(range(m, m * k)), zero_based=True)
            for g in A.generators if not g.is_identity()]
    for b in B.generators:
        if b.is_identity():
            continue
        gens.append(Permutation([b.array[i] * m + j for i in range(k) for j in range(m)],
                                zero_based=True))
    if not gens:
        gens = [Permutation.identity(m * k)]
    return group_from_generators(gens)


def load_group_file(path) -> PermGroup:
    """Read a group file (``degree N`` header, one generator per line)."""
    return parse_group_text(Path(path).read_text())


def _expected_order(spec: GroupSpec, built: dict) -> int | None:
    k, n = spec.kind, spec.n
    if k == "sym":
        return math.factorial(n)
    if k == "alt":
        return math.factorial(n) // 2
    if k == "cyclic":
        return n
    if k == "dihedral":
        return 2 * n
    if k == "psl2":
        return n * (n * n - 1) // 2
    if k == "frobenius20":
        return 20
    if k == "sl23":
        return 24
    if k == "gl23":
        return 48
    if k == "direct":
        return built["left"].order() * built["right"].order()
    if k == "wreath_small":
        return built["left"].order() ** built["right"].degree * built["right"].order()
    return None


def build(spec) -> PermGroup:
    """Construct the group for a spec (or spec string), checking its order."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    built = {}
    k = spec.kind
    if k == "file":
        return load_group_file(spec.path)
    if k in ("direct", "wreath_small"):
        built["left"], built["right"] = build(spec.left), build(spec.right)
        ctor = direct if k == "direct" else wreath_small
        G = ctor(built["left"], built["right"])
    elif k in FIXED_KINDS:
        G = {"frobenius20": frobenius20, "sl23": sl23, "gl23": gl23}[k]()
    else:
        G = {"sym": sym, "alt": alt, "cyclic": cyclic, "dihedral": dihedral, "psl2": psl2}[k](spec.n)
    expected = _expected_order(spec, built)
    if expected is not None and G.order() != expected:
        raise OrderMismatch(f"{spec}: built order {G.order()}, expected {expected}")
    return G


DEFAULT_CORPUS = (
    [f"sym:{n}" for n in range(3, 7)]
    + [f"alt:{n}" for n in range(4, 7)]
    + [f"cyclic:{n}" for n in range(2, 13)]
    + [f"dihedral:{n}" for n in range(3, 9)]
    + ["frobenius20", "sl23", "gl23"]
    + [f"psl2:{p}" for p in (5, 7, 11, 13)]
    + ["direct:sym:3,alt:5", "direct:sym:4,sym:3", "wreath:sym:3,cyclic:2"]
)


def default_corpus() -> list:
    """``(spec string, group)`` pairs of the default verification corpus."""
    return [(s, build(s)) for s in DEFAULT_CORPUS]

