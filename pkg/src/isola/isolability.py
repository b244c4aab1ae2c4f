"""Set-valued isolability objects on loop-free cographs.

An isolability object assigns to each loop-free cograph ``lam`` a finite set
of configurations (its carrier) and restricts configurations along maps by
precomposition. The two basic examples are points of a finite set kept apart
along every edge, and tuples of subsets that are disjoint along every edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Hashable, Iterator, Sequence

from .cograph import Cograph, CographError, _bits, clique, depth, dsum, trivial
from .cotree import enumerate_cographs
from .morphism import GraphMap, hom_enumerate, classify_map

__all__ = [
    "IsolabilityError",
    "IsolabilityObject",
    "PointIsolation",
    "SubsetIsolation",
    "Skeleton",
    "Coskeleton1",
    "Tensor",
    "skeleton",
    "coskeleton1",
    "tensor",
    "CheckReport",
    "check_functorial",
    "check_regular",
    "check_additive",
    "supersets",
    "regularity_squares",
    "EDGE",
]

EDGE = Cograph.from_edges(2, [(0, 1)])

Config = tuple


class IsolabilityError(ValueError):
    pass


def _require_irreflexive(lam: Cograph) -> None:
    if not lam.is_irreflexive:
        raise IsolabilityError("carriers are only defined on loop-free cographs")


class IsolabilityObject:
    """Base class. Subclasses implement ``_carrier``; ``restrict`` defaults to precomposition."""

    name = "isolability"

    def carrier(self, lam: Cograph) -> tuple[Config, ...]:
        _require_irreflexive(lam)
        return self._cached(lam)

    @lru_cache(maxsize=None)
    def _cached(self, lam: Cograph) -> tuple[Config, ...]:
        return tuple(sorted(self._carrier(lam)))

    def _carrier(self, lam: Cograph) -> Iterator[Config]:
        raise NotImplementedError

    def restrict(self, m: GraphMap, cfg: Config) -> Config:
        return tuple(cfg[x] for x in m.f)

    def unconstrained(self, n: int) -> tuple[Config, ...]:
        return self.carrier(trivial(n))

    def separates(self, cfg: Config, u: int, v: int) -> bool:
        """Whether the pair ``(u, v)`` of the configuration is kept apart."""
        n = len(cfg) if not isinstance(self, Tensor) else len(cfg[0])
        pair = self.restrict(GraphMap(trivial(2), trivial(n), (u, v)), cfg)
        return pair in self._edge_set()

    @lru_cache(maxsize=None)
    def _edge_set(self) -> frozenset:
        return frozenset(self.carrier(EDGE))

    def __hash__(self) -> int:
        return id(self)

    def __eq__(self, other: object) -> bool:
        return self is other


class PointIsolation(IsolabilityObject):
    """Maps from vertices into ``points`` sending related vertices to different points."""

    name = "points"

    def __init__(self, points: Sequence[Hashable]):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise IsolabilityError("points must be distinct")

    def _carrier(self, lam: Cograph) -> Iterator[Config]:
        n = lam.n
        cfg: list[Any] = [None] * n

        def place(i: int) -> Iterator[Config]:
            if i == n:
                yield tuple(cfg)
                return
            for p in self.points:
                if all(cfg[j] != p for j in _bits(lam.rows[i] & ((1 << i) - 1))):
                    cfg[i] = p
                    yield from place(i + 1)

        return place(0)

    def __repr__(self) -> str:
        return f"PointIsolation({list(self.points)})"


def _subsets(points: Sequence[Hashable], nonempty: bool) -> list[tuple]:
    out = []
    for k in range(1 if nonempty else 0, len(points) + 1):
        out.extend(combinations(points, k))
    return out


class SubsetIsolation(IsolabilityObject):
    """Tuples of subsets of ``points``, disjoint along every edge.

    Subsets are stored as sorted tuples. Empty subsets are allowed unless
    ``nonempty`` is set.
    """

    name = "subsets"

    def __init__(self, points: Sequence[Hashable], nonempty: bool = False):
        self.points = tuple(sorted(points))
        self.nonempty = nonempty
        self._all = _subsets(self.points, nonempty)

    def _carrier(self, lam: Cograph) -> Iterator[Config]:
        n = lam.n
        cfg: list[tuple] = [()] * n

        def place(i: int) -> Iterator[Config]:
            if i == n:
                yield tuple(cfg)
                return
            for s in self._all:
                ss = set(s)
                if all(ss.isdisjoint(cfg[j]) for j in _bits(lam.rows[i] & ((1 << i) - 1))):
                    cfg[i] = s
                    yield from place(i + 1)

        return place(0)

    def __repr__(self) -> str:
        return f"SubsetIsolation({list(self.points)}, nonempty={self.nonempty})"


def supersets(lam: Cograph, max_depth: int | None = None) -> list[Cograph]:
    """Loop-free cographs on the vertices of ``lam`` containing its relation."""
    missing = [(i, j) for i in range(lam.n) for j in range(i + 1, lam.n) if not lam.related(i, j)]
    out = []
    for bits in product((0, 1), repeat=len(missing)):
        rows = list(lam.rows)
        for (i, j), on in zip(missing, bits):
            if on:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        try:
            mu = Cograph.build(lam.n, rows)
        except CographError:
            continue
        if max_depth is None or depth(mu) <= max_depth:
            out.append(mu)
    return out


class Skeleton(IsolabilityObject):
    """Union of carriers over supersets of depth at most ``k``."""

    def __init__(self, base: IsolabilityObject, k: int):
        self.base = base
        self.k = k
        self.name = f"sk{k}({base.name})"

    def _carrier(self, lam: Cograph) -> Iterator[Config]:
        seen: set = set()
        for mu in supersets(lam, self.k):
            seen.update(self.base.carrier(mu))
        return iter(seen)

    def restrict(self, m: GraphMap, cfg: Config) -> Config:
        return self.base.restrict(m, cfg)

    def __repr__(self) -> str:
        return f"Skeleton({self.base!r}, {self.k})"


class Coskeleton1(IsolabilityObject):
    """Every configuration is allowed; the relation is ignored."""

    def __init__(self, base: IsolabilityObject):
        self.base = base
        self.name = f"cosk1({base.name})"

    def _carrier(self, lam: Cograph) -> Iterator[Config]:
        return iter(self.base.carrier(trivial(lam.n)))

    def restrict(self, m: GraphMap, cfg: Config) -> Config:
        return self.base.restrict(m, cfg)


class Tensor(IsolabilityObject):
    """Pairs of unconstrained configurations that jointly keep every edge apart."""

    def __init__(self, left: IsolabilityObject, right: IsolabilityObject):
        self.left = left
        self.right = right
        self.name = f"({left.name} x {right.name})"

    def _carrier(self, lam: Cograph) -> Iterator[Config]:
        edges = lam.edges()
        for x in self.left.unconstrained(lam.n):
            for y in self.right.unconstrained(lam.n):
                if all(self.left.separates(x, a, b) or self.right.separates(y, a, b) for a, b in edges):
                    yield (x, y)

    def restrict(self, m: GraphMap, cfg: Config) -> Config:
        x, y = cfg
        return (self.left.restrict(m, x), self.right.restrict(m, y))

    def separates(self, cfg: Config, u: int, v: int) -> bool:
        x, y = cfg
        return self.left.separates(x, u, v) or self.right.separates(y, u, v)


def skeleton(k: int, obj: IsolabilityObject) -> Skeleton:
    return Skeleton(obj, k)


def coskeleton1(obj: IsolabilityObject) -> Coskeleton1:
    return Coskeleton1(obj)


def tensor(a: IsolabilityObject, b: IsolabilityObject) -> Tensor:
    return Tensor(a, b)


# -- checks ---------------------------------------------------------------------


@dataclass
class CheckReport:
    passed: bool
    checked: int
    witness: Any = None
    details: dict = field(default_factory=dict)


def _irr_upto(bound: int, *, nonempty: bool = True) -> list[Cograph]:
    return [c for n in range(1 if nonempty else 0, bound + 1) for c in enumerate_cographs(n, "irr")]


def check_functorial(obj: IsolabilityObject, bound: int = 3) -> CheckReport:
    """Identities restrict trivially and restriction respects composition."""
    graphs = _irr_upto(bound)
    checked = 0
    for lam in graphs:
        ident = GraphMap(lam, lam, tuple(range(lam.n)))
        for cfg in obj.carrier(lam):
            checked += 1
            if obj.restrict(ident, cfg) != cfg:
                return CheckReport(False, checked, {"identity": repr(lam), "config": cfg})
    for a in graphs:
        for b in graphs:
            fs = list(hom_enumerate(a, b))
            if not fs:
                continue
            for c in graphs:
                gs = list(hom_enumerate(b, c))
                if not gs:
                    continue
                cfgs = obj.carrier(c)
                for g in gs:
                    for f in fs:
                        gf = GraphMap(a, c, tuple(g.f[x] for x in f.f))
                        for z in cfgs:
                            checked += 1
                            y = obj.restrict(g, z)
                            if obj.restrict(f, y) != obj.restrict(gf, z):
                                return CheckReport(False, checked, {"f": f.f, "g": g.f, "config": z})
                            if y not in obj.carrier(b):
                                return CheckReport(False, checked, {"g": g.f, "config": z, "not in carrier": y})
    return CheckReport(True, checked)


def _surjections(lam: Cograph, mu: Cograph) -> Iterator[GraphMap]:
    for m in hom_enumerate(lam, mu):
        if len(set(m.f)) == mu.n:
            yield m


def regularity_squares(bound: int) -> Iterator[tuple[Cograph, tuple[int, ...], GraphMap, Cograph, GraphMap, GraphMap]]:
    """Squares ``lam' <- lam -> mu`` with ``lam`` induced on ``S`` and ``i`` surjective.

    Yields ``(lam', S, i, mu', j, k)`` where ``mu'`` is the pushout,
    ``j: lam' -> mu'`` and ``k: mu -> mu'``. Only squares whose pushout is a
    loop-free cograph are produced.
    """
    for lam_p in _irr_upto(bound):
        n = lam_p.n
        for size in range(1, n + 1):
            for S in combinations(range(n), size):
                lam = lam_p.induced(S)
                outside = [v for v in range(n) if v not in S]
                for mu in _irr_upto(size):
                    for i in _surjections(lam, mu):
                        pos = {v: k for k, v in enumerate(outside)}
                        for k, v in enumerate(S):
                            pos[v] = len(outside) + i.f[k]
                        jf = tuple(pos[v] for v in range(n))
                        m = len(outside) + mu.n
                        rows = [0] * m
                        for a in range(n):
                            for b in _bits(lam_p.rows[a]):
                                rows[jf[a]] |= 1 << jf[b]
                        kf = tuple(len(outside) + x for x in range(mu.n))
                        for x in range(mu.n):
                            for y in _bits(mu.rows[x]):
                                rows[kf[x]] |= 1 << kf[y]
                        try:
                            mu_p = Cograph.build(m, rows)
                        except CographError:
                            continue
                        if not mu_p.is_irreflexive:
                            continue
                        yield lam_p, S, i, mu_p, GraphMap(lam_p, mu_p, jf), GraphMap(mu, mu_p, kf)


def check_regular(obj: IsolabilityObject, bound: int = 3) -> CheckReport:
    """Carriers turn every regularity square into a fibre product of sets."""
    checked = 0
    for lam_p, S, i, mu_p, j, k in regularity_squares(bound):
        lam, mu = i.src, i.tgt
        incl = GraphMap(lam, lam_p, S)
        left = {(obj.restrict(k, x), obj.restrict(j, x)) for x in obj.carrier(mu_p)}
        count_left = len(obj.carrier(mu_p))
        by_lam: dict = {}
        for z in obj.carrier(lam_p):
            by_lam.setdefault(obj.restrict(incl, z), []).append(z)
        right = {(y, z) for y in obj.carrier(mu) for z in by_lam.get(obj.restrict(i, y), [])}
        checked += 1
        if left != right or count_left != len(left):
            extra = sorted(right - left, key=repr)[:1] or sorted(left - right, key=repr)[:1]
            return CheckReport(
                False,
                checked,
                {"lambda_prime": repr(lam_p), "S": S, "i": i.f, "mu": repr(mu), "mu_prime": repr(mu_p), "mismatch": extra},
            )
    return CheckReport(True, checked)


def check_additive(obj: IsolabilityObject, bound: int = 4) -> CheckReport:
    """The carrier of a disjoint union is the product of the carriers."""
    checked = 0
    for n in range(1, bound):
        for a in enumerate_cographs(n, "irr"):
            for m in range(1, bound - n + 1):
                for b in enumerate_cographs(m, "irr"):
                    s = dsum(a, b)
                    ia = GraphMap(a, s, tuple(range(n)))
                    ib = GraphMap(b, s, tuple(range(n, n + m)))
                    image = {(obj.restrict(ia, x), obj.restrict(ib, x)) for x in obj.carrier(s)}
                    full = {(x, y) for x in obj.carrier(a) for y in obj.carrier(b)}
                    checked += 1
                    if image != full or len(image) != len(obj.carrier(s)):
                        missing = sorted(full - image, key=repr)[:1]
                        return CheckReport(False, checked, {"lambda": repr(a), "mu": repr(b), "missing": missing})
    return CheckReport(True, checked)
