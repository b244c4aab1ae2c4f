"""Directed 1-cographs and 1-structures on cographs.

A 1-cograph is a transitive relation, antisymmetric off the diagonal, that
also satisfies the quadruple condition read on ordered pairs. Forgetting
directions gives an ordinary cograph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Sequence

from .cograph import Cograph, CographError, _bits, cocomponents, components
from .cotree import Leaf, canonical_form
from .morphism import GraphMap, classify_map

__all__ = [
    "OneCograph",
    "is_onecograph",
    "symmetrize",
    "opposite",
    "osum",
    "odsum",
    "directed_paw",
    "one_structures",
    "one_structures_brute",
    "count_one_structures",
    "directed_map_ok",
    "accretive_lifts",
    "nonfunctorial_witness",
]


@dataclass(frozen=True)
class OneCograph:
    """Directed relation on ``n`` vertices; ``rows[i] >> j & 1`` means ``i -> j``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise CographError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        if any(r & ~full for r in self.rows):
            raise CographError("edge leaves the vertex set")

    @classmethod
    def from_edges(
        cls, n: int, dedges: Sequence[tuple[int, int]] = (), loops: Sequence[int] = (), *, check: bool = True
    ) -> "OneCograph":
        rows = [0] * n
        for a, b in dedges:
            if not (0 <= a < n and 0 <= b < n):
                raise CographError(f"edge ({a}, {b}) out of range")
            rows[a] |= 1 << b
        for a in loops:
            rows[a] |= 1 << a
        g = cls(n, tuple(rows))
        if check and not is_onecograph(g):
            raise CographError("relation is not a 1-cograph")
        return g

    def arrow(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def dedges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in _bits(self.rows[a]) if a != b]

    def loops(self) -> list[int]:
        return [a for a in range(self.n) if self.rows[a] >> a & 1]

    def __repr__(self) -> str:
        return f"OneCograph(n={self.n}, dedges={self.dedges()}, loops={self.loops()})"


def _antisymmetric(g: OneCograph) -> bool:
    return all(not (g.arrow(b, a)) for a, b in g.dedges())


def _transitive(g: OneCograph) -> bool:
    for a in range(g.n):
        reach = 0
        for b in _bits(g.rows[a]):
            reach |= g.rows[b]
        if reach & ~g.rows[a]:
            return False
    return True


def _quadruple(g: OneCograph) -> bool:
    # (w,x), (y,x), (y,z) present forces one of (y,w), (w,z), (z,x).
    into = [0] * g.n
    for a in range(g.n):
        for b in _bits(g.rows[a]):
            into[b] |= 1 << a
    for x in range(g.n):
        for w in _bits(into[x]):
            for y in _bits(into[x]):
                if g.rows[y] >> w & 1:
                    continue
                if g.rows[y] & ~g.rows[w] & ~into[x]:
                    return False
    return True


def is_onecograph(g: OneCograph) -> bool:
    return _antisymmetric(g) and _transitive(g) and _quadruple(g)


def symmetrize(g: OneCograph) -> Cograph:
    """Undirected closure, loops kept."""
    rows = list(g.rows)
    for a, b in g.dedges():
        rows[b] |= 1 << a
    return Cograph.build(g.n, rows, check=False)


def opposite(g: OneCograph) -> OneCograph:
    rows = [0] * g.n
    for a in range(g.n):
        for b in _bits(g.rows[a]):
            rows[b] |= 1 << a
    return OneCograph(g.n, tuple(rows))


def _join(a: OneCograph, b: OneCograph, forward: bool) -> OneCograph:
    shift = a.n
    across = ((1 << b.n) - 1) << shift if forward else 0
    rows = [r | across for r in a.rows] + [r << shift for r in b.rows]
    return OneCograph(a.n + b.n, tuple(rows))


def osum(a: OneCograph, b: OneCograph) -> OneCograph:
    """Ordered sum: an arrow from every vertex of ``a`` to every vertex of ``b``."""
    return _join(a, b, True)


def odsum(a: OneCograph, b: OneCograph) -> OneCograph:
    """Disjoint union."""
    return _join(a, b, False)


def directed_paw(k: int) -> OneCograph:
    """Paw with arrows: for ``i < j`` (1-based) there is an arrow ``i -> j`` iff ``j`` is even."""
    dedges = [(i - 1, j - 1) for j in range(2, k + 1, 2) for i in range(1, j)]
    return OneCograph.from_edges(k, dedges, check=False)


def one_structures(lam: Cograph) -> list[OneCograph]:
    """All 1-cographs whose symmetrisation is ``lam``, built from its cotree.

    Each connected-sum node picks a linear order of its children; arrows run
    from earlier children to later ones.
    """
    if canonical_form(lam) is None:
        return [OneCograph(0, ())]
    def blocks(verts: tuple[int, ...]) -> tuple[str, list[tuple[int, ...]]]:
        sub = lam.induced(verts)
        comps = components(sub)
        if len(comps) > 1:
            return "dsum", [tuple(verts[i] for i in g) for g in comps]
        return "csum", [tuple(verts[i] for i in g) for g in cocomponents(sub)]

    def orientations(verts: tuple[int, ...]) -> list[list[tuple[int, int]]]:
        if len(verts) == 1:
            return [[]]
        tag, kids = blocks(verts)
        sub = [orientations(k) for k in kids]
        inner = [sum(choice, []) for choice in product(*sub)]
        if tag == "dsum":
            return inner
        out = []
        for perm in permutations(range(len(kids))):
            cross = [
                (a, b)
                for p in range(len(perm))
                for q in range(p + 1, len(perm))
                for a in kids[perm[p]]
                for b in kids[perm[q]]
            ]
            out.extend(arcs + cross for arcs in inner)
        return out

    loops = lam.loops()
    result = [OneCograph.from_edges(lam.n, arcs, loops, check=False) for arcs in orientations(tuple(range(lam.n)))]
    return sorted(result, key=lambda g: g.rows)


def one_structures_brute(lam: Cograph) -> list[OneCograph]:
    """Oracle: try every orientation of every edge and keep the 1-cographs."""
    edges = lam.edges()
    loops = lam.loops()
    out = []
    for bits in product((0, 1), repeat=len(edges)):
        arcs = [(a, b) if bit else (b, a) for (a, b), bit in zip(edges, bits)]
        g = OneCograph.from_edges(lam.n, arcs, loops, check=False)
        if is_onecograph(g):
            out.append(g)
    return sorted(out, key=lambda g: g.rows)


def count_one_structures(lam: Cograph) -> int:
    """Product over connected-sum nodes of the number of orderings of their children."""
    def walk(e) -> int:
        if e is None or isinstance(e, Leaf):
            return 1
        k = factorial(len(e.children)) if e.tag == "csum" else 1
        for ch in e.children:
            k *= walk(ch)
        return k

    return walk(canonical_form(lam))


def directed_map_ok(g: OneCograph, h: OneCograph, f: Sequence[int]) -> bool:
    """``f`` carries every arrow of ``g`` to an arrow of ``h``."""
    return all(h.arrow(f[a], f[b]) for a in range(g.n) for b in _bits(g.rows[a]))


def accretive_lifts(m: GraphMap, delta: OneCograph) -> list[OneCograph]:
    """1-structures on the source of ``m`` mapping onto ``delta`` along ``m``."""
    if not classify_map(m).accretive:
        raise CographError("lifts are only defined along accretive maps")
    if symmetrize(delta) != m.tgt:
        raise CographError("delta is not a 1-structure on the target")
    return [g for g in one_structures(m.src) if directed_map_ok(g, delta, m.f)]


def nonfunctorial_witness() -> tuple[OneCograph, Cograph, list[tuple[int, int]]]:
    """A 1-cograph and an undirected sub-cograph of its shadow with no 1-structure inside it.

    The linear order on three vertices has shadow the triangle. Dropping the
    pair (0, 2) leaves a vertex joined to two others; restricting the
    orientation to it gives 0 -> 1 -> 2, which is not transitive.
    """
    gamma = OneCograph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    sub = Cograph.from_edges(3, [(0, 1), (1, 2)])
    restricted = [e for e in gamma.dedges() if sub.related(*e)]
    return gamma, sub, restricted
