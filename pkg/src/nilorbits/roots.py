"""Irreducible root systems over the integers.

Roots are stored as integer coefficient vectors with respect to a fixed set
of simple roots, so every computation here (closure, heights, norms, the
Coxeter number) is exact.  Node numbering conventions:

* A_n, B_n, C_n: a chain alpha_1 .. alpha_n; for B_n the last node is short,
  for C_n the last node is long and the first n-1 are short.
* D_n: chain alpha_1 .. alpha_{n-2} with the fork nodes alpha_{n-1}, alpha_n
  both attached to alpha_{n-2}.
* E_6/E_7/E_8: chain alpha_1, alpha_3, alpha_4, ..., alpha_n with the branch
  node alpha_2 attached to alpha_4 (Bourbaki).
* F_4: chain alpha_1 - alpha_2 = alpha_3 - alpha_4 with alpha_1, alpha_2
  short; G_2: alpha_1 short, alpha_2 long.  (These two follow the numbering
  of Onishchik--Vinberg rather than Bourbaki; the short end comes first.)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

EXCEPTIONAL_DIMENSION = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248,
                         ("F", 4): 52, ("G", 2): 14}

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),  # D2 = A1+A1 and D3 = A3 are rejected; use those types
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Lie algebra type, e.g. SimpleType('E', 6)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError("type E exists only in ranks 6, 7, 8")
            return
        if self.family not in _RANK_BOUNDS:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo:
            if self.family == "D" and self.rank in (2, 3):
                hint = "A1xA1" if self.rank == 2 else "A3"
                raise ValueError(f"D{self.rank} is rejected; use {hint} "
                                 "explicitly")
            raise ValueError(f"rank must be >= {lo} for family {self.family}")
        if hi is not None and self.rank > hi:
            raise ValueError(f"rank must be {hi} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "SimpleType":
        text = text.strip()
        if not text or text[0].upper() not in "ABCDEFG":
            raise ValueError(f"cannot parse simple type from {text!r}")
        return SimpleType(text[0].upper(), int(text[1:]))

    @property
    def dimension(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 2)
        if self.family in ("B", "C"):
            return n * (2 * n + 1)
        if self.family == "D":
            return n * (2 * n - 1)
        return EXCEPTIONAL_DIMENSION[(self.family, n)]

    @property
    def num_positive_roots(self) -> int:
        n = self.rank
        return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n,
                "D": n * (n - 1), "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
                "F": 24, "G": 6}[self.family]

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows indexed by i: entry [i][j] = <alpha_j, alpha_i^vee>."""
        n = self.rank
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def bond(i, j, aij=-1, aji=-1):
            a[i][j] = aij
            a[j][i] = aji

        if self.family in ("A", "B", "C"):
            for i in range(n - 1):
                bond(i, i + 1)
            if self.family == "B" and n >= 2:
                a[n - 1][n - 2] = -2        # alpha_n short
            if self.family == "C" and n >= 2:
                a[n - 2][n - 1] = -2        # alpha_n long
        elif self.family == "D":
            for i in range(n - 3):
                bond(i, i + 1)
            bond(n - 3, n - 2)
            bond(n - 3, n - 1)
        elif self.family == "E":
            chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
            for i, j in zip(chain, chain[1:]):
                bond(i, j)
            bond(1, 3)
        elif self.family == "F":
            bond(0, 1)
            bond(1, 2, aij=-2, aji=-1)      # alpha_2 short, alpha_3 long
            bond(2, 3)
        elif self.family == "G":
            bond(0, 1, aij=-3, aji=-1)      # alpha_1 short
        return tuple(tuple(row) for row in a)

    def root_lengths(self) -> tuple[int, ...]:
        """Half squared norms (alpha_i, alpha_i)/2; long roots score highest."""
        n = self.rank
        if self.family == "B":
            return tuple([2] * (n - 1) + [1])
        if self.family == "C":
            return tuple([1] * (n - 1) + [2])
        if self.family == "F":
            return (1, 1, 2, 2)
        if self.family == "G":
            return (1, 3)
        return tuple([1] * n)

    def short_nodes(self) -> frozenset[int]:
        lengths = self.root_lengths()
        top = max(lengths)
        return frozenset(i for i, d in enumerate(lengths) if d < top)

    def adjacency(self) -> tuple[frozenset[int], ...]:
        a = self.cartan_matrix()
        n = self.rank
        return tuple(frozenset(j for j in range(n) if j != i and a[i][j] != 0)
                     for i in range(n))

    def branch_node(self) -> int | None:
        """The unique node with three neighbours (D and E types)."""
        for i, nb in enumerate(self.adjacency()):
            if len(nb) == 3:
                return i
        return None

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank}


@dataclass(frozen=True)
class Root:
    """A root written in simple-root coordinates."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("the zero vector is not a root")
        if any(c > 0 for c in self.coeffs) and any(c < 0 for c in self.coeffs):
            raise ValueError("root coefficients must not mix signs")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        terms = [f"{'' if c == 1 else c}a{i + 1}"
                 for i, c in enumerate(self.coeffs) if c]
        return "+".join(terms) if terms else "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


class RootSystem:
    """The positive system of an irreducible root system, built by closure."""

    def __init__(self, type: SimpleType, positive_roots: tuple[Root, ...]):
        self.type = type
        self.positive_roots = positive_roots
        self._index = {r.coeffs: r for r in positive_roots}
        self.simple_roots = tuple(r for r in positive_roots if r.height == 1)
        self.highest_root = max(positive_roots, key=lambda r: r.height)

    @property
    def rank(self) -> int:
        return self.type.rank

    def __contains__(self, root: Root) -> bool:
        c = root.coeffs
        if all(x <= 0 for x in c):
            c = tuple(-x for x in c)
        return c in self._index

    def pairing(self, root: Root, i: int) -> int:
        """<root, alpha_i^vee>, computed from the Cartan matrix."""
        a = self.type.cartan_matrix()
        return sum(c * a[i][j] for j, c in enumerate(root.coeffs))

    def norm2(self, root: Root) -> int:
        """(root, root), normalised so short simple roots have norm 2."""
        d = self.type.root_lengths()
        a = self.type.cartan_matrix()
        c = root.coeffs
        return sum(c[i] * c[j] * d[i] * a[i][j]
                   for i in range(self.rank) for j in range(self.rank))

    def is_long(self, root: Root) -> bool:
        return self.norm2(root) == max(self.norm2(s) for s in self.simple_roots)

    def roots_of_height(self, h: int) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if r.height == h)

    def to_json(self) -> dict:
        return {"type": self.type.to_json(),
                "positive_roots": [r.to_json() for r in self.positive_roots],
                "highest_root": self.highest_root.to_json()}


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Close the simple roots under root addition.

    A positive root gamma is extended by alpha_i whenever the alpha_i-string
    through gamma does not stop, i.e. q = p - <gamma, alpha_i^vee> > 0 where
    p is the largest k with gamma - k*alpha_i still a root.
    """
    n = t.rank
    a = t.cartan_matrix()
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[tuple[int, ...]] = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        new_layer = []
        for g in layer:
            for i in range(n):
                if g == simple[i]:
                    continue
                p = 0
                lower = tuple(c - (j == i) for j, c in enumerate(g))
                while lower in known:
                    p += 1
                    lower = tuple(c - (j == i) for j, c in enumerate(lower))
                pairing = sum(c * a[i][j] for j, c in enumerate(g))
                if p - pairing > 0:
                    up = tuple(c + (j == i) for j, c in enumerate(g))
                    if up not in known:
                        known.add(up)
                        new_layer.append(up)
        new_layer.sort()
        ordered.extend(new_layer)
        layer = new_layer
    roots = tuple(Root(c) for c in sorted(ordered, key=lambda c: (sum(c), c)))
    if len(roots) != t.num_positive_roots:
        raise RuntimeError(
            f"closure for {t} produced {len(roots)} positive roots, "
            f"expected {t.num_positive_roots}")
    return RootSystem(t, roots)


def coxeter_number(rs: RootSystem) -> int:
    return rs.highest_root.height + 1


def kappa_direct(t: SimpleType) -> int:
    """Maximal number of pairwise non-adjacent Dynkin diagram nodes."""
    if t.family == "D" and t.rank % 2 == 0:
        return t.rank // 2 + 1
    return (t.rank + 1) // 2


def kappa_root_count(rs: RootSystem) -> int:
    """Count positive roots at height floor((c+1)/2); agrees with kappa."""
    a = (coxeter_number(rs) + 1) // 2
    return len(rs.roots_of_height(a))


def principal_layer(rs: RootSystem, i: int) -> tuple[Root, ...]:
    """Roots of height i (negated for i < 0, empty for i = 0)."""
    if i == 0:
        return ()
    layer = rs.roots_of_height(abs(i))
    return layer if i > 0 else tuple(-r for r in layer)


def beta_root(rs: RootSystem) -> Root:
    """The long height-4 root completing the height-2 layer to a base of the
    even-height subsystem.

    Defined when the fixed algebra of the principal inner involution is
    semisimple, which excludes types A and C (and B2 = C2).
    """
    t = rs.type
    if t.family in ("A", "C") or (t.family == "B" and t.rank == 2):
        raise ValueError(f"beta root is not defined for type {t}")
    n = t.rank
    if t.family == "B":
        coeffs = [0] * n
        coeffs[n - 3] = 1
        coeffs[n - 2] = 1
        coeffs[n - 1] = 2
    elif t.family == "F":
        coeffs = [0, 2, 1, 1]
    elif t.family == "G":
        coeffs = [3, 1]
    else:  # D and E: branch node plus its three neighbours
        delta = t.branch_node()
        coeffs = [0] * n
        coeffs[delta] = 1
        for j in t.adjacency()[delta]:
            coeffs[j] = 1
    beta = Root(tuple(coeffs))
    assert beta in rs and beta.height == 4 and rs.is_long(beta)
    layer2 = rs.roots_of_height(2)
    for x in layer2:
        rest = tuple(b - a for a, b in zip(x.coeffs, beta.coeffs))
        if any(rest) and all(c >= 0 for c in rest) and Root(rest) in rs \
                and sum(rest) == 2:
            raise AssertionError(f"beta {beta} splits as a sum of two "
                                 f"height-2 roots in {t}")
    return beta


def all_simple_types(max_rank: int, families: Iterable[str] = "ABCDEFG"
                     ) -> list[SimpleType]:
    """Every valid simple type with rank <= max_rank, in a fixed order."""
    out = []
    for fam in families:
        if fam == "E":
            out.extend(SimpleType("E", r) for r in (6, 7, 8) if r <= max_rank)
        elif fam == "F":
            if max_rank >= 4:
                out.append(SimpleType("F", 4))
        elif fam == "G":
            if max_rank >= 2:
                out.append(SimpleType("G", 2))
        else:
            lo, _ = _RANK_BOUNDS[fam]
            out.extend(SimpleType(fam, r) for r in range(lo, max_rank + 1))
    return out
