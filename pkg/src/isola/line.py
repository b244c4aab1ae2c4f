"""Posets of refinements, the combinatorial line, and the unital Ran category.

``line_poset(lam)`` is the poset of weak orders on the vertices that put the
two ends of every edge in different blocks; a weak order sits below each of
its refinements. ``face_poset_oracle`` rebuilds the same poset from integer
points of a grid by perturbing them, which makes it an independent check.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Any, Hashable, Protocol, Sequence

from .cograph import Cograph, CographError, clique, depth
from .isolability import IsolabilityObject, supersets
from .morphism import GraphMap, Span, cartesian_lift, classify_map, span_compose
from .onecograph import OneCograph, is_onecograph, one_structures
from .poset import FiniteCategory, FinitePoset, WeakOrder, coarse, weak_orders

__all__ = [
    "K_poset",
    "ParaFamily",
    "TrivialFamily",
    "OrientedApartnessFamily",
    "envelope",
    "line_poset",
    "tensor_line",
    "face_poset_oracle",
    "weak_order_of",
    "LineFamily",
    "DiscreteFamily",
    "RanObject",
    "ran_unital",
    "monotone_count",
    "MAX_RAN",
]

MAX_RAN = 4


def _require_irr(lam: Cograph) -> None:
    if not lam.is_irreflexive:
        raise CographError("expected a loop-free cograph")


def K_poset(lam: Cograph) -> FinitePoset:
    """Loop-free cographs on the same vertices containing ``lam``, ordered by inclusion."""
    _require_irr(lam)
    els = sorted(supersets(lam), key=lambda c: c.rows)
    return FinitePoset.from_relation(els, lambda a, b: a.is_subrelation_of(b))


class ParaFamily(Protocol):
    def fiber(self, mu: Cograph) -> list[Hashable]: ...

    def hom(self, mu: Cograph, x: Hashable, nu: Cograph, y: Hashable) -> bool: ...

    def transport(self, m: GraphMap, y: Hashable) -> Hashable: ...


class TrivialFamily:
    """One element over every cograph."""

    def fiber(self, mu: Cograph) -> list[Hashable]:
        return [()]

    def hom(self, mu: Cograph, x: Hashable, nu: Cograph, y: Hashable) -> bool:
        return True

    def transport(self, m: GraphMap, y: Hashable) -> Hashable:
        return ()


class OrientedApartnessFamily:
    """Orientations of apartness relations: weak orders seen as 1-cographs of depth at most 2."""

    def fiber(self, mu: Cograph) -> list[OneCograph]:
        if not mu.is_irreflexive or depth(mu) > 2:
            return []
        return one_structures(mu)

    def hom(self, mu: Cograph, x: OneCograph, nu: Cograph, y: OneCograph) -> bool:
        return all(a & ~b == 0 for a, b in zip(x.rows, y.rows))

    def transport(self, m: GraphMap, y: OneCograph) -> OneCograph:
        """Pull arrows back along an accretive map."""
        if not classify_map(m).accretive:
            raise CographError("transport is only defined along accretive maps")
        arcs = [(a, b) for a in range(m.src.n) for b in range(m.src.n) if a != b and y.arrow(m.f[a], m.f[b])]
        g = OneCograph.from_edges(m.src.n, arcs, check=False)
        if not is_onecograph(g):
            raise CographError("pulled back relation is not a 1-cograph")
        return g


def envelope(para: ParaFamily, lam: Cograph) -> FinitePoset:
    """Pairs ``(mu, x)`` with ``mu`` a superset of ``lam`` and ``x`` over ``mu``."""
    _require_irr(lam)
    els = [(mu, x) for mu in sorted(supersets(lam), key=lambda c: c.rows) for x in para.fiber(mu)]
    return FinitePoset.from_relation(
        els, lambda p, q: p[0].is_subrelation_of(q[0]) and para.hom(p[0], p[1], q[0], q[1])
    )


def weak_order_of(g: OneCograph) -> WeakOrder:
    """Weak order of an oriented apartness relation: rank a vertex by its in-degree."""
    indeg = [sum(1 for a in range(g.n) if a != v and g.arrow(a, v)) for v in range(g.n)]
    return WeakOrder.from_ranks(indeg)


def _separating(w: WeakOrder, edges: list[tuple[int, int]]) -> bool:
    r = w.ranks()
    return all(r[a] != r[b] for a, b in edges)


def line_poset(lam: Cograph) -> FinitePoset:
    """Weak orders separating every edge, ordered by refinement."""
    _require_irr(lam)
    edges = lam.edges()
    els = [w for w in weak_orders(lam.n) if _separating(w, edges)]
    return FinitePoset.from_relation(els, lambda a, b: a.refines_to(b))


def tensor_line(n: int, lam: Cograph) -> FinitePoset:
    """Tuples of ``n`` weak orders that jointly separate every edge, ordered componentwise."""
    _require_irr(lam)
    if n < 1:
        raise CographError("n must be positive")
    if n == 1:
        return line_poset(lam)
    edges = lam.edges()
    ws = weak_orders(lam.n)
    ranks = {w: w.ranks() for w in ws}
    els = [
        t
        for t in product(ws, repeat=n)
        if all(any(ranks[w][a] != ranks[w][b] for w in t) for a, b in edges)
    ]
    return FinitePoset.from_relation(els, lambda s, t: all(a.refines_to(b) for a, b in zip(s, t)))


def face_poset_oracle(lam: Cograph, n: int = 1) -> FinitePoset:
    """Face poset of the configuration space of ``lam``-separated points in ``R^n``.

    Points range over the integer grid ``{0..|V|}`` on each axis; a point's
    label is the tuple of weak orders read off its coordinates. A stratum
    sits below every stratum reached by an infinitesimal perturbation in a
    direction from ``{-1, 0, 1}``, ties being broken by the direction.
    """
    _require_irr(lam)
    if lam.n > 4:
        raise CographError("face poset oracle is limited to 4 vertices")
    V = lam.n
    edges = lam.edges()
    grid = range(V + 1)

    def label(coords: Sequence[Sequence[Any]]) -> tuple[WeakOrder, ...]:
        return tuple(WeakOrder.from_ranks([coords[v][ax] for v in range(V)]) for ax in range(n))

    reps: dict[tuple[WeakOrder, ...], tuple] = {}
    for flat in product(grid, repeat=V * n):
        pt = tuple(tuple(flat[v * n : (v + 1) * n]) for v in range(V))
        if any(pt[a] == pt[b] for a, b in edges):
            continue
        reps.setdefault(label(pt), pt)

    # The label reached by a perturbation depends only on the stratum of the
    # starting point, so one representative point per stratum suffices.
    pairs: set[tuple[tuple[WeakOrder, ...], tuple[WeakOrder, ...]]] = set()
    for lab, pt in reps.items():
        for flat in product((-1, 0, 1), repeat=V * n):
            moved = tuple(tuple((pt[v][ax], flat[v * n + ax]) for ax in range(n)) for v in range(V))
            new = label(moved)
            if new not in reps:
                raise AssertionError("perturbation left the separated configurations")
            pairs.add((lab, new))

    els = sorted(reps)
    idx = {x: i for i, x in enumerate(els)}
    poset = FinitePoset.generated(els, [(idx[a], idx[b]) for a, b in pairs])
    if n == 1:
        return FinitePoset(tuple(x[0] for x in poset.elements), poset.leq)
    return poset


# -- Ran category -------------------------------------------------------------------


class LineFamily:
    """Weak orders separating a cograph, pulled back along maps."""

    name = "line"

    def elements(self, lam: Cograph) -> list[WeakOrder]:
        return list(line_poset(lam).elements)

    def restrict(self, m: GraphMap, w: WeakOrder) -> WeakOrder:
        return w.pullback(m.f)

    def leq(self, lam: Cograph, a: WeakOrder, b: WeakOrder) -> bool:
        return a.refines_to(b)


class DiscreteFamily:
    """A set-valued isolability object viewed as a family of discrete posets."""

    def __init__(self, obj: IsolabilityObject):
        self.obj = obj
        self.name = obj.name

    def elements(self, lam: Cograph) -> list:
        return list(self.obj.carrier(lam))

    def restrict(self, m: GraphMap, x: Any) -> Any:
        return self.obj.restrict(m, x)

    def leq(self, lam: Cograph, a: Any, b: Any) -> bool:
        return a == b


RanObject = tuple  # (n, element over the complete loop-free cograph on n vertices)


def monotone_count(n: int, m: int) -> int:
    """Weakly monotone maps from an ``m``-chain to an ``n``-chain."""
    if m == 0:
        return 1
    if n == 0:
        return 0
    return comb(n + m - 1, m)


def _span_for(family: Any, x_obj: RanObject, y_obj: RanObject, g: tuple[int, ...]) -> Span | None:
    n, x = x_obj
    m, y = y_obj
    kn, km = clique(n), clique(m)
    u = cartesian_lift(g, kn)
    if not u.is_subrelation_of(km):
        return None
    back = GraphMap(u, kn, g)
    fwd = GraphMap(u, km, tuple(range(m)))
    if not family.leq(u, family.restrict(back, x), family.restrict(fwd, y)):
        return None
    return Span(back, fwd, "hop")


def ran_unital(family: Any, max_n: int, *, min_n: int = 0) -> FiniteCategory:
    """Truncated unital Ran category of ``family``.

    Objects are ``(n, x)`` with ``x`` over the complete loop-free cograph on
    ``n`` vertices. A morphism ``(n, x) -> (m, y)`` is a span whose backward
    leg is the accretive map over some ``g: range(m) -> range(n)`` and whose
    forward leg is dispersive; it exists when the pulled back ``x`` lies below
    ``y``. Morphisms are labelled by ``g``. Composition pulls spans back.
    """
    if max_n > MAX_RAN:
        raise CographError(f"max_n is limited to {MAX_RAN}")
    objects = [(n, x) for n in range(min_n, max_n + 1) for x in family.elements(clique(n))]
    homs: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for i, a in enumerate(objects):
        for j, b in enumerate(objects):
            labels = [g for g in product(range(a[0]), repeat=b[0]) if _span_for(family, a, b, g) is not None]
            if labels:
                homs[(i, j)] = labels

    def compose(i: int, j: int, k: int, h: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        s = _span_for(family, objects[i], objects[j], g)
        t = _span_for(family, objects[j], objects[k], h)
        if s is None or t is None:
            raise CographError("composing morphisms that are not in the category")
        st = span_compose(s, t)
        inv = [0] * len(st.forward.f)
        for apex_v, z in enumerate(st.forward.f):
            inv[z] = apex_v
        return tuple(st.back.f[inv[z]] for z in range(len(inv)))

    def ident(i: int) -> tuple[int, ...]:
        return tuple(range(objects[i][0]))

    return FiniteCategory(objects, homs, compose, ident)


def pad_coarse(t: tuple[WeakOrder, ...] | WeakOrder, n_vertices: int) -> tuple[WeakOrder, ...]:
    """Embed an ``n``-tuple of weak orders into ``n + 1``-tuples using the coarse order."""
    if isinstance(t, WeakOrder):
        t = (t,)
    return tuple(t) + (coarse(n_vertices),)
