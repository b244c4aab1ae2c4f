"""Finite posets, weak orders and finite categories with lazily built composition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Callable, Hashable, Iterator, Sequence

import networkx as nx

__all__ = [
    "PosetError",
    "FinitePoset",
    "WeakOrder",
    "weak_orders",
    "coarse",
    "FiniteCategory",
]


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePoset:
    """Elements plus a reflexive, antisymmetric, transitive ``leq`` matrix."""

    elements: tuple
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.elements)
        if len(self.leq) != n or any(len(r) != n for r in self.leq):
            raise PosetError("leq matrix has the wrong shape")
        for i in range(n):
            if not self.leq[i][i]:
                raise PosetError(f"leq is not reflexive at {i}")
            for j in range(n):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    raise PosetError(f"leq is not antisymmetric at ({i}, {j})")
                if self.leq[i][j]:
                    for k in range(n):
                        if self.leq[j][k] and not self.leq[i][k]:
                            raise PosetError(f"leq is not transitive at ({i}, {j}, {k})")

    @classmethod
    def from_relation(cls, elements: Sequence, le: Callable[[Any, Any], bool]) -> "FinitePoset":
        els = tuple(elements)
        return cls(els, tuple(tuple(le(a, b) for b in els) for a in els))

    @classmethod
    def generated(cls, elements: Sequence, pairs: Sequence[tuple[int, int]]) -> "FinitePoset":
        """Reflexive transitive closure of ``pairs`` (given as index pairs)."""
        n = len(elements)
        reach = [1 << i for i in range(n)]
        for a, b in pairs:
            reach[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = reach[i]
                for j in range(n):
                    if acc >> j & 1:
                        acc |= reach[j]
                if acc != reach[i]:
                    reach[i] = acc
                    changed = True
        return cls(tuple(elements), tuple(tuple(bool(reach[i] >> j & 1) for j in range(n)) for i in range(n)))

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: Hashable) -> int:
        return self.elements.index(x)

    def le(self, x: Hashable, y: Hashable) -> bool:
        return self.leq[self.index(x)][self.index(y)]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``i < j`` and nothing strictly between."""
        n = len(self)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if not any(k not in (i, j) and self.leq[i][k] and self.leq[k][j] for k in range(n)):
                    out.append((i, j))
        return out

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self)))
        g.add_edges_from((i, j) for i in range(len(self)) for j in range(len(self)) if i != j and self.leq[i][j])
        return g

    def isomorphism(self, other: "FinitePoset") -> dict[int, int] | None:
        """An order isomorphism as an index map, or ``None``."""
        if len(self) != len(other):
            return None
        gm = nx.algorithms.isomorphism.DiGraphMatcher(self.digraph(), other.digraph())
        for m in gm.isomorphisms_iter():
            return dict(m)
        return None

    def is_isomorphic(self, other: "FinitePoset") -> bool:
        return self.isomorphism(other) is not None

    def same_as(self, other: "FinitePoset") -> bool:
        """Equal element sets with the same order, ignoring the listing order."""
        if set(self.elements) != set(other.elements) or len(self) != len(other):
            return False
        pos = {x: i for i, x in enumerate(other.elements)}
        return all(
            self.leq[i][j] == other.leq[pos[x]][pos[y]]
            for i, x in enumerate(self.elements)
            for j, y in enumerate(self.elements)
        )

    def is_order_embedding(self, other: "FinitePoset", f: Callable[[Any], Any]) -> bool:
        imgs = [f(x) for x in self.elements]
        if len(set(imgs)) != len(imgs):
            return False
        return all(
            self.leq[i][j] == other.le(imgs[i], imgs[j]) for i in range(len(self)) for j in range(len(self))
        )


# -- weak orders ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class WeakOrder:
    """Ordered set partition of ``range(n)``; earlier blocks come first."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        flat = sorted(v for b in self.blocks for v in b)
        if flat != list(range(len(flat))) or any(not b for b in self.blocks):
            raise PosetError(f"not an ordered partition of range(n): {self.blocks}")
        if any(list(b) != sorted(b) for b in self.blocks):
            raise PosetError("blocks must be sorted")

    @classmethod
    def from_ranks(cls, ranks: Sequence[Any]) -> "WeakOrder":
        """Group vertices by rank value; smaller ranks come first."""
        levels = sorted(set(ranks))
        return cls(tuple(tuple(v for v, r in enumerate(ranks) if r == lev) for lev in levels))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def ranks(self) -> tuple[int, ...]:
        r = [0] * self.n
        for k, b in enumerate(self.blocks):
            for v in b:
                r[v] = k
        return tuple(r)

    def before(self, a: int, b: int) -> bool:
        r = self.ranks()
        return r[a] < r[b]

    def precedences(self) -> frozenset[tuple[int, int]]:
        r = self.ranks()
        return frozenset((a, b) for a in range(self.n) for b in range(self.n) if r[a] < r[b])

    def refines_to(self, other: "WeakOrder") -> bool:
        """Every strict precedence here also holds in ``other``."""
        return self.precedences() <= other.precedences()

    def separates(self, a: int, b: int) -> bool:
        r = self.ranks()
        return r[a] != r[b]

    def pullback(self, f: Sequence[int]) -> "WeakOrder":
        """Weak order on ``range(len(f))`` with ``a < b`` iff ``f(a) < f(b)``."""
        r = self.ranks()
        return WeakOrder.from_ranks([r[x] for x in f])

    def __str__(self) -> str:
        return "<".join("".join(str(v + 1) for v in b) if len(b) == 1 else "{" + ",".join(str(v + 1) for v in b) + "}" for b in self.blocks)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]
        yield [[first]] + part


def weak_orders(n: int) -> list[WeakOrder]:
    """All ordered set partitions of ``range(n)``."""
    out = set()
    for part in _set_partitions(list(range(n))):
        blocks = [tuple(sorted(b)) for b in part]
        for perm in permutations(blocks):
            out.add(WeakOrder(tuple(perm)))
    return sorted(out)


def coarse(n: int) -> WeakOrder:
    return WeakOrder((tuple(range(n)),) if n else ())


# -- finite categories -------------------------------------------------------------


@dataclass
class FiniteCategory:
    """Objects, hom-sets and a composition rule evaluated on demand.

    ``homs[(a, b)]`` lists morphism labels; ``compose_fn(a, b, c, g, f)``
    returns the label of ``g`` after ``f`` for ``f: a -> b`` and ``g: b -> c``.
    """

    objects: list
    homs: dict
    compose_fn: Callable[[int, int, int, Any, Any], Any]
    identity_fn: Callable[[int], Any]
    _memo: dict = field(default_factory=dict, repr=False)

    def hom(self, a: int, b: int) -> list:
        return self.homs.get((a, b), [])

    def compose(self, a: int, b: int, c: int, g: Any, f: Any) -> Any:
        key = (a, b, c, g, f)
        if key not in self._memo:
            self._memo[key] = self.compose_fn(a, b, c, g, f)
        return self._memo[key]

    def identity(self, a: int) -> Any:
        return self.identity_fn(a)

    def hom_counts(self) -> list[list[int]]:
        n = len(self.objects)
        return [[len(self.hom(a, b)) for b in range(n)] for a in range(n)]

    def composition_table(self) -> list[tuple]:
        n = len(self.objects)
        rows = []
        for a in range(n):
            for b in range(n):
                for f in self.hom(a, b):
                    for c in range(n):
                        for g in self.hom(b, c):
                            rows.append((a, b, c, g, f, self.compose(a, b, c, g, f)))
        return rows

    def check_closed(self) -> tuple | None:
        """First composite that is not a listed morphism, or ``None``."""
        n = len(self.objects)
        homsets = {k: set(v) for k, v in self.homs.items()}
        for a in range(n):
            for b in range(n):
                for f in self.hom(a, b):
                    for c in range(n):
                        for g in self.hom(b, c):
                            h = self.compose(a, b, c, g, f)
                            if h not in homsets.get((a, c), ()):
                                return (a, b, c, g, f, h)
        return None

    def check_unital(self) -> tuple | None:
        n = len(self.objects)
        for a in range(n):
            for b in range(n):
                for f in self.hom(a, b):
                    if self.compose(a, b, b, self.identity(b), f) != f:
                        return ("left", a, b, f)
                    if self.compose(a, a, b, f, self.identity(a)) != f:
                        return ("right", a, b, f)
        return None

    def check_associative(self) -> tuple | None:
        n = len(self.objects)
        for a in range(n):
            for b in range(n):
                for f in self.hom(a, b):
                    for c in range(n):
                        for g in self.hom(b, c):
                            gf = self.compose(a, b, c, g, f)
                            for d in range(n):
                                for h in self.hom(c, d):
                                    lhs = self.compose(a, c, d, h, gf)
                                    rhs = self.compose(a, b, d, self.compose(b, c, d, h, g), f)
                                    if lhs != rhs:
                                        return (a, b, c, d, f, g, h)
        return None
