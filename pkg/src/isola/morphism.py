"""Relation-preserving maps, partial maps and spans of cographs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .cograph import Cograph, CographError, is_cograph

__all__ = [
    "MorphismError",
    "GraphMap",
    "MapClass",
    "identity",
    "compose",
    "hom_enumerate",
    "hom_count",
    "classify_map",
    "is_fibration",
    "is_attached",
    "factor_da",
    "cartesian_lift",
    "incompatible",
    "pullback",
    "PartialGraphMap",
    "compose_partial",
    "inert_active_factor",
    "is_thin",
    "Span",
    "span_compose",
    "span_equal",
    "span_key",
    "hom_vop",
    "hom_hop",
]


class MorphismError(ValueError):
    """Raised when a vertex map does not define a valid morphism."""


@dataclass(frozen=True)
class GraphMap:
    """Vertex map ``f`` from ``src`` to ``tgt`` preserving the relation."""

    src: Cograph
    tgt: Cograph
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.f) != self.src.n:
            raise MorphismError(f"map has {len(self.f)} entries, source has {self.src.n} vertices")
        for a, x in enumerate(self.f):
            if not 0 <= x < self.tgt.n:
                raise MorphismError(f"vertex {a} maps to {x}, outside the target")
        for a in range(self.src.n):
            for b in range(self.src.n):
                if self.src.related(a, b) and not self.tgt.related(self.f[a], self.f[b]):
                    raise MorphismError(f"pair ({a}, {b}) is related but its image is not")

    def __call__(self, a: int) -> int:
        return self.f[a]

    def image(self) -> frozenset[int]:
        return frozenset(self.f)


def identity(c: Cograph) -> GraphMap:
    return GraphMap(c, c, tuple(range(c.n)))


def compose(g: GraphMap, f: GraphMap) -> GraphMap:
    """``g`` after ``f``."""
    if f.tgt != g.src:
        raise MorphismError("maps are not composable")
    return GraphMap(f.src, g.tgt, tuple(g.f[x] for x in f.f))


def hom_enumerate(a: Cograph, b: Cograph) -> Iterator[GraphMap]:
    """All relation-preserving maps ``a -> b`` in lexicographic order of ``f``."""
    n = a.n
    f = [0] * n

    def place(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(f)
            return
        for x in range(b.n):
            if a.has_loop(i) and not b.has_loop(x):
                continue
            ok = True
            for j in range(i):
                if a.related(i, j) and not b.related(x, f[j]):
                    ok = False
                    break
            if ok:
                f[i] = x
                yield from place(i + 1)

    for vals in place(0):
        yield GraphMap(a, b, vals)


def hom_count(a: Cograph, b: Cograph) -> int:
    return sum(1 for _ in hom_enumerate(a, b))


def is_fibration(m: GraphMap) -> bool:
    """Whenever images differ and are related, the pair itself is related."""
    s, t, f = m.src, m.tgt, m.f
    for u in range(s.n):
        for v in range(s.n):
            if f[u] != f[v] and t.related(f[u], f[v]) and not s.related(u, v):
                return False
    return True


def is_attached(m: GraphMap) -> bool:
    """Nonempty ends, and every image vertex related to every non-image vertex."""
    if m.src.n == 0 or m.tgt.n == 0:
        return False
    im = m.image()
    out = [z for z in range(m.tgt.n) if z not in im]
    return all(m.tgt.related(y, z) for y in im for z in out)


def _is_accretive(m: GraphMap) -> bool:
    return all(
        m.src.related(a, b) == m.tgt.related(m.f[a], m.f[b])
        for a in range(m.src.n)
        for b in range(m.src.n)
    )


@dataclass(frozen=True)
class MapClass:
    dispersive: bool
    accretive: bool
    surjective: bool
    injective: bool
    fibration: bool
    attached: bool
    inert: bool
    active: bool


def classify_map(m: GraphMap) -> MapClass:
    injective = len(set(m.f)) == len(m.f)
    surjective = m.image() == frozenset(range(m.tgt.n))
    accretive = _is_accretive(m)
    dispersive = injective and surjective
    return MapClass(
        dispersive=dispersive,
        accretive=accretive,
        surjective=surjective,
        injective=injective,
        fibration=is_fibration(m),
        attached=is_attached(m),
        inert=dispersive and accretive,
        active=True,
    )


def cartesian_lift(f: Sequence[int], tgt: Cograph) -> Cograph:
    """Relation on ``range(len(f))`` pulled back from ``tgt`` along ``f``."""
    rows = []
    for a in range(len(f)):
        mask = 0
        for b in range(len(f)):
            if tgt.related(f[a], f[b]):
                mask |= 1 << b
        rows.append(mask)
    return Cograph.build(len(f), rows)


def factor_da(m: GraphMap) -> tuple[GraphMap, GraphMap]:
    """Split ``m`` as a dispersive map followed by an accretive one."""
    mid = cartesian_lift(m.f, m.tgt)
    disp = GraphMap(m.src, mid, tuple(range(m.src.n)))
    accr = GraphMap(mid, m.tgt, m.f)
    return disp, accr


def incompatible(phi: GraphMap, f: GraphMap) -> bool:
    """One of the two maps relates a pair of source vertices that the other collapses.

    Such a span has no cocone among loop-free cographs: the common image of
    the pair would need a loop.
    """
    if phi.src != f.src:
        raise MorphismError("incompatible needs a common source")
    n = phi.src.n

    def clash(a: GraphMap, b: GraphMap) -> bool:
        return any(
            a.tgt.related(a.f[i], a.f[j]) and b.f[i] == b.f[j]
            for i in range(n)
            for j in range(n)
        )

    return clash(phi, f) or clash(f, phi)


def pullback(f: GraphMap, g: GraphMap) -> tuple[Cograph, GraphMap, GraphMap]:
    """Fibre product of vertex sets with the conjunction of the two relations.

    Raises ``MorphismError`` if the result is not a cograph.
    """
    if f.tgt != g.tgt:
        raise MorphismError("pullback needs a common target")
    verts = [(a, b) for a in range(f.src.n) for b in range(g.src.n) if f.f[a] == g.f[b]]
    rows = []
    for a, b in verts:
        mask = 0
        for k, (c, d) in enumerate(verts):
            if f.src.related(a, c) and g.src.related(b, d):
                mask |= 1 << k
        rows.append(mask)
    p = Cograph(len(verts), tuple(rows))
    if not is_cograph(p):
        raise MorphismError("pullback relation is not a cograph")
    p1 = GraphMap(p, f.src, tuple(a for a, _ in verts))
    p2 = GraphMap(p, g.src, tuple(b for _, b in verts))
    return p, p1, p2


# -- partial maps -------------------------------------------------------------


@dataclass(frozen=True)
class PartialGraphMap:
    """Map defined on an induced sub-cograph ``domain`` of ``src``.

    ``f[k]`` is the image of ``domain[k]``.
    """

    src: Cograph
    domain: tuple[int, ...]
    tgt: Cograph
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.domain) != sorted(set(self.domain)):
            raise MorphismError("domain must be strictly increasing")
        if any(not 0 <= a < self.src.n for a in self.domain):
            raise MorphismError("domain leaves the source")
        if len(self.f) != len(self.domain):
            raise MorphismError("map length does not match the domain")
        GraphMap(self.src.induced(self.domain), self.tgt, self.f)

    @classmethod
    def total(cls, m: GraphMap) -> "PartialGraphMap":
        return cls(m.src, tuple(range(m.src.n)), m.tgt, m.f)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.f))

    def dom_graph(self) -> Cograph:
        return self.src.induced(self.domain)

    def active_part(self) -> GraphMap:
        return GraphMap(self.dom_graph(), self.tgt, self.f)

    @property
    def is_inert(self) -> bool:
        return classify_map(self.active_part()).inert

    @property
    def is_active(self) -> bool:
        return len(self.domain) == self.src.n


def compose_partial(g: PartialGraphMap, f: PartialGraphMap) -> PartialGraphMap:
    """``g`` after ``f``; defined where ``f`` is defined and lands in the domain of ``g``."""
    if f.tgt != g.src:
        raise MorphismError("partial maps are not composable")
    gd = g.as_dict()
    dom, vals = [], []
    for a, x in zip(f.domain, f.f):
        if x in gd:
            dom.append(a)
            vals.append(gd[x])
    return PartialGraphMap(f.src, tuple(dom), g.tgt, tuple(vals))


def inert_active_factor(p: PartialGraphMap) -> tuple[PartialGraphMap, PartialGraphMap]:
    """Inert restriction to the domain followed by the total map on it."""
    sub = p.dom_graph()
    inert = PartialGraphMap(p.src, p.domain, sub, tuple(range(len(p.domain))))
    active = PartialGraphMap(sub, tuple(range(sub.n)), p.tgt, p.f)
    return inert, active


def is_thin(f: PartialGraphMap, g: PartialGraphMap) -> bool:
    """The map from the domain of ``g`` after ``f`` into the domain of ``g`` is a fibration.

    An empty composite domain counts as thin.
    """
    if f.tgt != g.src:
        raise MorphismError("partial maps are not composable")
    gpos = {x: k for k, x in enumerate(g.domain)}
    dom, vals = [], []
    for a, x in zip(f.domain, f.f):
        if x in gpos:
            dom.append(a)
            vals.append(gpos[x])
    if not dom:
        return True
    m = GraphMap(f.src.induced(dom), g.dom_graph(), tuple(vals))
    return is_fibration(m)


# -- spans ----------------------------------------------------------------------

# In a "vop" span the backward leg is dispersive and the forward leg accretive;
# "hop" is the other way round.
_LEG_KINDS = {"vop": ("dispersive", "accretive"), "hop": ("accretive", "dispersive")}


@dataclass(frozen=True)
class Span:
    back: GraphMap
    forward: GraphMap
    flavor: str

    def __post_init__(self) -> None:
        if self.flavor not in _LEG_KINDS:
            raise MorphismError(f"unknown span flavor {self.flavor!r}")
        if self.back.src != self.forward.src:
            raise MorphismError("span legs need a common apex")
        kb, kf = _LEG_KINDS[self.flavor]
        if not getattr(classify_map(self.back), kb):
            raise MorphismError(f"backward leg is not {kb}")
        if not getattr(classify_map(self.forward), kf):
            raise MorphismError(f"forward leg is not {kf}")

    @property
    def apex(self) -> Cograph:
        return self.back.src

    @property
    def source(self) -> Cograph:
        return self.back.tgt

    @property
    def target(self) -> Cograph:
        return self.forward.tgt


def span_compose(s: Span, t: Span) -> Span:
    """Composite of ``s: X <- U -> Y`` and ``t: Y <- U' -> Z`` via a pullback over ``Y``."""
    if s.flavor != t.flavor or s.target != t.source:
        raise MorphismError("spans are not composable")
    _, p1, p2 = pullback(s.forward, t.back)
    return Span(compose(s.back, p1), compose(t.forward, p2), s.flavor)


def span_key(s: Span) -> tuple:
    """Normal form: relabel the apex along its bijective leg."""
    bij = s.back if s.flavor == "vop" else s.forward
    other = s.forward if s.flavor == "vop" else s.back
    apex = s.apex.relabel(bij.f)
    inv = [0] * len(bij.f)
    for a, x in enumerate(bij.f):
        inv[x] = a
    return (s.flavor, s.source, s.target, apex.rows, tuple(other.f[inv[x]] for x in range(len(inv))))


def span_equal(s: Span, t: Span) -> bool:
    """Brute force: an isomorphism of apexes commuting with both legs."""
    if s.flavor != t.flavor or s.source != t.source or s.target != t.target:
        return False
    if s.apex.n != t.apex.n:
        return False
    a, b = s.apex, t.apex
    for perm in permutations(range(a.n)):
        if any(s.back.f[i] != t.back.f[perm[i]] or s.forward.f[i] != t.forward.f[perm[i]] for i in range(a.n)):
            continue
        if a.relabel(perm) == b:
            return True
    return False


def hom_vop(x: Cograph, y: Cograph) -> list[Span]:
    """Spans ``x <- U -> y`` with dispersive back leg and accretive forward leg.

    Enumerated by running over every sub-relation ``U`` of ``x`` on the same
    vertices and every accretive map ``U -> y``.
    """
    out = []
    pairs = [(i, j) for i in range(x.n) for j in range(i, x.n) if x.related(i, j)]
    for bits in product((0, 1), repeat=len(pairs)):
        rows = [0] * x.n
        for (i, j), on in zip(pairs, bits):
            if on:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        u = Cograph(x.n, tuple(rows))
        if not is_cograph(u):
            continue
        back = GraphMap(u, x, tuple(range(x.n)))
        for fwd in hom_enumerate(u, y):
            if classify_map(fwd).accretive:
                out.append(Span(back, fwd, "vop"))
    return out


def hom_hop(x: Cograph, y: Cograph) -> list[Span]:
    """Spans ``x <- U -> y`` with accretive back leg and dispersive forward leg."""
    out = []
    for g in product(range(x.n), repeat=y.n):
        try:
            u = cartesian_lift(g, x)
        except CographError:
            continue
        if not u.is_subrelation_of(y):
            continue
        out.append(Span(GraphMap(u, x, g), GraphMap(u, y, tuple(range(y.n))), "hop"))
    return out
