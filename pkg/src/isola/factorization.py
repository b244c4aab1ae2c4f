"""Set-level factorization stacks, ravioli, Hecke modifications and the Grassmannian.

Families here are indexed by nonempty loop-free cographs and move along
attached maps: maps whose image is joined to everything outside it. Each
family projects to a base isolability object (usually points of ``X`` kept
apart).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Hashable, Iterator, Protocol, Sequence

from .cograph import Cograph, CographError, csum
from .cotree import enumerate_cographs
from .isolability import CheckReport, IsolabilityObject, PointIsolation, SubsetIsolation
from .morphism import GraphMap, compose, hom_enumerate, is_attached

__all__ = [
    "AttachedFamily",
    "DiagonalFamily",
    "SubsetFamily",
    "ProductFamily",
    "DroppedFamily",
    "BundleData",
    "Ravioli",
    "ravioli",
    "HeckeFamily",
    "GrassmannianFamily",
    "hecke",
    "grassmannian",
    "attached_maps",
    "check_factorization_stack",
    "check_factorization_groupoid",
    "check_attached_functorial",
    "check_pushpull",
]


class AttachedFamily(Protocol):
    base: IsolabilityObject

    def carrier(self, lam: Cograph) -> tuple: ...

    def project(self, lam: Cograph, y: Any) -> tuple: ...

    def transport(self, m: GraphMap, y: Any) -> Any: ...


class DiagonalFamily:
    """The base object itself, or the base times a fixed set ``U`` on the diagonal."""

    def __init__(self, base: IsolabilityObject, U: Sequence[Hashable] | None = None):
        self.base = base
        self.U = None if U is None else tuple(U)

    def carrier(self, lam: Cograph) -> tuple:
        xs = self.base.carrier(lam)
        if self.U is None:
            return xs
        return tuple((x, u, u) for x in xs for u in self.U)

    def project(self, lam: Cograph, y: Any) -> tuple:
        return y if self.U is None else y[0]

    def transport(self, m: GraphMap, y: Any) -> Any:
        if self.U is None:
            return self.base.restrict(m, y)
        return (self.base.restrict(m, y[0]), y[1], y[2])

    def decompose(self, lam: Cograph, mu: Cograph, y: Any) -> tuple[Any, Any]:
        s = csum(lam, mu)
        return (
            self.transport(GraphMap(lam, s, tuple(range(lam.n))), y),
            self.transport(GraphMap(mu, s, tuple(range(lam.n, s.n))), y),
        )

    def first(self, y: Any) -> Any:
        return y[1]

    def second(self, y: Any) -> Any:
        return y[2]


class SubsetFamily:
    """Separated configurations inside a subset ``A`` of the base points."""

    def __init__(self, base: PointIsolation, A: Sequence[Hashable]):
        if not set(A) <= set(base.points):
            raise CographError("A must be a subset of the base points")
        self.base = base
        self.inner = PointIsolation([p for p in base.points if p in set(A)])

    def carrier(self, lam: Cograph) -> tuple:
        return self.inner.carrier(lam)

    def project(self, lam: Cograph, y: Any) -> tuple:
        return y

    def transport(self, m: GraphMap, y: Any) -> Any:
        return self.inner.restrict(m, y)


class ProductFamily:
    """Base configurations decorated by an arbitrary label from ``labels`` at each vertex.

    This family is additive, yet it does not satisfy the surjection condition:
    collapsing two unrelated vertices forgets one of their labels.
    """

    def __init__(self, base: IsolabilityObject, labels: Sequence[Hashable]):
        self.base = base
        self.labels = tuple(labels)

    def carrier(self, lam: Cograph) -> tuple:
        return tuple((x, f) for x in self.base.carrier(lam) for f in product(self.labels, repeat=lam.n))

    def project(self, lam: Cograph, y: Any) -> tuple:
        return y[0]

    def transport(self, m: GraphMap, y: Any) -> Any:
        x, f = y
        return (self.base.restrict(m, x), tuple(f[a] for a in m.f))


class DroppedFamily:
    """Wraps a family and deletes one element from one carrier."""

    def __init__(self, inner: Any, lam: Cograph, victim: Any):
        self.inner = inner
        self.base = inner.base
        self.lam = lam
        self.victim = victim

    def carrier(self, lam: Cograph) -> tuple:
        items = self.inner.carrier(lam)
        if lam == self.lam:
            items = tuple(y for y in items if y != self.victim)
        return items

    def __getattr__(self, name: str) -> Any:
        return getattr(self.inner, name)


# -- bundles and ravioli ---------------------------------------------------------------


@dataclass(frozen=True)
class BundleData:
    """A finite set ``X`` with a finite fiber over each point."""

    X: tuple
    fibers: tuple[tuple, ...]

    def __post_init__(self) -> None:
        if len(self.fibers) != len(self.X):
            raise CographError("need exactly one fiber per point")
        if len(set(self.X)) != len(self.X):
            raise CographError("points of X must be distinct")

    @classmethod
    def constant(cls, X: Sequence[Hashable], fiber: Sequence[Hashable]) -> "BundleData":
        return cls(tuple(X), tuple(tuple(fiber) for _ in X))

    def index(self, x: Hashable) -> int:
        return self.X.index(x)

    def bun(self) -> list[tuple]:
        """Global sections, one fiber element per point."""
        return list(product(*self.fibers))


@dataclass(frozen=True)
class Ravioli:
    """Two copies of ``X`` glued away from a finite subset ``Z``."""

    X: tuple
    Z: frozenset
    points: tuple
    fold: dict
    left: dict
    right: dict

    def __len__(self) -> int:
        return len(self.points)


def _support(Z: Sequence[Any], observers: IsolabilityObject) -> frozenset:
    if isinstance(observers, SubsetIsolation):
        return frozenset(p for s in Z for p in s)
    return frozenset(Z)


def ravioli(X: Sequence[Hashable], lam: Cograph, Z: Sequence[Hashable]) -> Ravioli:
    """The pushout of ``X <- X minus im Z -> X``.

    ``fold`` sends every point to its point of ``X``; ``left`` and ``right``
    are the two inclusions of ``X``.
    """
    X = tuple(X)
    if tuple(Z) not in PointIsolation(X).carrier(lam):
        raise CographError("Z is not a configuration of separated points for lam")
    im = frozenset(Z)
    points: list = []
    fold, left, right = {}, {}, {}
    for x in X:
        if x in im:
            a, b = ("d", x, 1), ("d", x, 2)
            points += [a, b]
            fold[a] = fold[b] = x
            left[x], right[x] = a, b
        else:
            p = ("o", x)
            points.append(p)
            fold[p] = x
            left[x] = right[x] = p
    return Ravioli(X, im, tuple(points), fold, left, right)


def _agree_off(bd: BundleData, e1: tuple, e2: tuple, support: frozenset) -> bool:
    return all(e1[i] == e2[i] for i, x in enumerate(bd.X) if x not in support)


def check_pushpull(bd: BundleData, lam: Cograph) -> CheckReport:
    """Sections over ravioli match pairs of global sections agreeing off ``im Z``."""
    checked = 0
    pairs = [(e1, e2) for e1 in bd.bun() for e2 in bd.bun()]
    for Z in PointIsolation(bd.X).carrier(lam):
        rv = ravioli(bd.X, lam, Z)
        fibers = [bd.fibers[bd.index(rv.fold[p])] for p in rv.points]
        image = set()
        count = 0
        for choice in product(*fibers):
            sec = dict(zip(rv.points, choice))
            e1 = tuple(sec[rv.left[x]] for x in bd.X)
            e2 = tuple(sec[rv.right[x]] for x in bd.X)
            image.add((e1, e2))
            count += 1
        target = {p for p in pairs if _agree_off(bd, p[0], p[1], rv.Z)}
        checked += 1
        if image != target or count != len(image):
            return CheckReport(False, checked, {"Z": Z, "missing": sorted(target - image)[:1]})
    return CheckReport(True, checked)


# -- Hecke and Grassmannian --------------------------------------------------------------


class HeckeFamily:
    """Triples ``(Z, E1, E2)``: a configuration and two bundles agreeing off it.

    Transport along an attached map keeps ``E1`` and restricts the
    modification to the smaller configuration: ``E2`` is kept on its support
    and replaced by ``E1`` elsewhere.
    """

    def __init__(self, bd: BundleData, observers: IsolabilityObject | None = None):
        self.bd = bd
        self.base = observers if observers is not None else PointIsolation(bd.X)
        self._bun = bd.bun()
        self._memo: dict = {}

    def support(self, Z: Sequence[Any]) -> frozenset:
        return _support(Z, self.base)

    def _blend(self, inside: tuple, outside: tuple, support: frozenset) -> tuple:
        return tuple(inside[i] if x in support else outside[i] for i, x in enumerate(self.bd.X))

    def fiber(self, Z: Sequence[Any]) -> list[tuple[tuple, tuple]]:
        sup = self.support(Z)
        return [(e1, e2) for e1 in self._bun for e2 in self._bun if _agree_off(self.bd, e1, e2, sup)]

    def carrier(self, lam: Cograph) -> tuple:
        if lam not in self._memo:
            self._memo[lam] = tuple((Z, e1, e2) for Z in self.base.carrier(lam) for e1, e2 in self.fiber(Z))
        return self._memo[lam]

    def project(self, lam: Cograph, y: Any) -> tuple:
        return y[0]

    def transport(self, m: GraphMap, y: Any) -> Any:
        Z, e1, e2 = y
        Zm = self.base.restrict(m, Z)
        return (Zm, e1, self._blend(e2, e1, self.support(Zm)))

    def first(self, y: Any) -> tuple:
        return y[1]

    def second(self, y: Any) -> tuple:
        return y[2]

    def decompose(self, lam: Cograph, mu: Cograph, y: Any) -> tuple[Any, Any]:
        """Split a modification over ``lam (+) mu`` into composable pieces.

        The piece over ``mu`` goes from ``E1`` to an intermediate bundle ``B``;
        the piece over ``lam`` goes from ``B`` to ``E2``. So the first bundle of
        the ``lam`` piece equals the second bundle of the ``mu`` piece.
        """
        Z, e1, e2 = y
        z_lam, z_mu = tuple(Z[: lam.n]), tuple(Z[lam.n :])
        mid = self._blend(e1, e2, self.support(z_lam))
        return (z_lam, mid, e2), (z_mu, e1, mid)


class GrassmannianFamily:
    """Pairs ``(Z, E)`` with ``E`` equal to the fixed bundle ``P`` away from ``Z``."""

    def __init__(self, bd: BundleData, P: Sequence[Hashable], observers: IsolabilityObject | None = None):
        self.bd = bd
        self.P = tuple(P)
        if self.P not in bd.bun():
            raise CographError("P is not a global section")
        self.base = observers if observers is not None else PointIsolation(bd.X)
        self._memo: dict = {}

    def carrier(self, lam: Cograph) -> tuple:
        if lam not in self._memo:
            out = []
            bun = self.bd.bun()
            for Z in self.base.carrier(lam):
                sup = _support(Z, self.base)
                out.extend((Z, e) for e in bun if _agree_off(self.bd, self.P, e, sup))
            self._memo[lam] = tuple(out)
        return self._memo[lam]

    def project(self, lam: Cograph, y: Any) -> tuple:
        return y[0]

    def transport(self, m: GraphMap, y: Any) -> Any:
        Z, e = y
        Zm = self.base.restrict(m, Z)
        sup = _support(Zm, self.base)
        return (Zm, tuple(e[i] if x in sup else self.P[i] for i, x in enumerate(self.bd.X)))


def hecke(bd: BundleData, observers: IsolabilityObject | None = None) -> HeckeFamily:
    return HeckeFamily(bd, observers)


def grassmannian(bd: BundleData, P: Sequence[Hashable], lam: Cograph | None = None, observers: IsolabilityObject | None = None):
    """The family, or its carrier over ``lam`` when ``lam`` is given."""
    fam = GrassmannianFamily(bd, P, observers)
    return fam if lam is None else fam.carrier(lam)


# -- checks ------------------------------------------------------------------------------


def _nonempty_irr(bound: int) -> list[Cograph]:
    return [c for n in range(1, bound + 1) for c in enumerate_cographs(n, "irr")]


def attached_maps(bound: int) -> Iterator[GraphMap]:
    graphs = _nonempty_irr(bound)
    for a in graphs:
        for b in graphs:
            for m in hom_enumerate(a, b):
                if is_attached(m):
                    yield m


def _check_surjections(fam: Any, bound: int) -> CheckReport:
    checked = 0
    graphs = _nonempty_irr(bound)
    for lam in graphs:
        ylam: dict = {}
        for y in fam.carrier(lam):
            ylam.setdefault(fam.project(lam, y), []).append(y)
        for mu in graphs:
            if mu.n > lam.n:
                continue
            for s in hom_enumerate(lam, mu):
                if len(set(s.f)) != mu.n:
                    continue
                ys = fam.carrier(mu)
                image = [(fam.transport(s, y), fam.project(mu, y)) for y in ys]
                target = {
                    (yl, x) for x in fam.base.carrier(mu) for yl in ylam.get(fam.base.restrict(s, x), [])
                }
                checked += 1
                if set(image) != target or len(set(image)) != len(ys):
                    diff = sorted(target - set(image), key=repr)[:1] or sorted(set(image) - target, key=repr)[:1]
                    return CheckReport(
                        False,
                        checked,
                        {"condition": 1, "lambda": repr(lam), "mu": repr(mu), "s": s.f, "mismatch": diff,
                         "sizes": [len(ys), len(target)]},
                    )
    return CheckReport(True, checked)


def _gluing(fam: Any, bound: int, groupoid: bool) -> CheckReport:
    checked = 0
    graphs = _nonempty_irr(bound)
    for lam in graphs:
        for mu in graphs:
            if lam.n + mu.n > bound:
                continue
            s = csum(lam, mu)
            ia = GraphMap(lam, s, tuple(range(lam.n)))
            ib = GraphMap(mu, s, tuple(range(lam.n, s.n)))
            ys = fam.carrier(s)
            if groupoid:
                image = [fam.decompose(lam, mu, y) + (fam.project(s, y),) for y in ys]
            else:
                image = [(fam.transport(ia, y), fam.transport(ib, y), fam.project(s, y)) for y in ys]
            by_l: dict = {}
            for y in fam.carrier(lam):
                by_l.setdefault(fam.project(lam, y), []).append(y)
            by_m: dict = {}
            for y in fam.carrier(mu):
                by_m.setdefault(fam.project(mu, y), []).append(y)
            target = set()
            for x in fam.base.carrier(s):
                for yl in by_l.get(fam.base.restrict(ia, x), []):
                    for ym in by_m.get(fam.base.restrict(ib, x), []):
                        if groupoid and fam.first(yl) != fam.second(ym):
                            continue
                        target.add((yl, ym, x))
            checked += 1
            if set(image) != target or len(set(image)) != len(ys):
                diff = sorted(target - set(image), key=repr)[:1] or sorted(set(image) - target, key=repr)[:1]
                return CheckReport(
                    False,
                    checked,
                    {"condition": 2, "lambda": repr(lam), "mu": repr(mu), "mismatch": diff,
                     "sizes": [len(ys), len(target)]},
                )
    return CheckReport(True, checked)


def check_factorization_stack(fam: Any, bound: int = 3) -> CheckReport:
    """Surjection squares are pullbacks and connected sums glue from their parts."""
    r1 = _check_surjections(fam, bound)
    if not r1.passed:
        return r1
    r2 = _gluing(fam, bound, groupoid=False)
    return CheckReport(r2.passed, r1.checked + r2.checked, r2.witness)


def check_factorization_groupoid(fam: Any, U: Sequence[Hashable] | None = None, bound: int = 3) -> CheckReport:
    """As ``check_factorization_stack``, gluing over ``U``: first copy of the
    ``lam`` piece against the second copy of the ``mu`` piece."""
    r1 = _check_surjections(fam, bound)
    if not r1.passed:
        return r1
    if U is not None:
        allowed = set(U)
        for lam in _nonempty_irr(bound):
            for y in fam.carrier(lam):
                if fam.first(y) not in allowed or fam.second(y) not in allowed:
                    return CheckReport(False, r1.checked, {"outside U": y})
    r2 = _gluing(fam, bound, groupoid=True)
    return CheckReport(r2.passed, r1.checked + r2.checked, r2.witness)


def check_attached_functorial(fam: Any, bound: int = 3) -> CheckReport:
    """Transport along identities is trivial and transports compose."""
    checked = 0
    maps = list(attached_maps(bound))
    by_tgt: dict = {}
    for m in maps:
        by_tgt.setdefault(m.tgt, []).append(m)
    carriers = {lam: fam.carrier(lam) for lam in by_tgt}
    members = {lam: set(ys) for lam, ys in carriers.items()}
    for lam, ys in carriers.items():
        ident = GraphMap(lam, lam, tuple(range(lam.n)))
        for y in ys:
            checked += 1
            if fam.transport(ident, y) != y:
                return CheckReport(False, checked, {"identity": repr(lam), "y": y})
    for g in maps:
        moved = [fam.transport(g, y) for y in carriers[g.tgt]]
        for y, gy in zip(carriers[g.tgt], moved):
            if gy not in members[g.src]:
                return CheckReport(False, checked, {"map": g.f, "y": y, "reason": "lands outside carrier"})
        for f in by_tgt.get(g.src, []):
            gf = compose(g, f)
            for y, gy in zip(carriers[g.tgt], moved):
                checked += 1
                if fam.transport(f, gy) != fam.transport(gf, y):
                    return CheckReport(False, checked, {"f": f.f, "g": g.f, "y": y})
    return CheckReport(True, checked)
