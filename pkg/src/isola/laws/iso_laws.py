"""Laws about set-valued isolability objects."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from ..cograph import Cograph, clique, paw, trivial
from ..cotree import enumerate_cographs
from ..isolability import (
    EDGE,
    CheckReport,
    IsolabilityObject,
    PointIsolation,
    SubsetIsolation,
    Tensor,
    check_additive,
    check_functorial,
    check_regular,
    coskeleton1,
    skeleton,
    supersets,
)
from ..morphism import GraphMap, _is_accretive, hom_enumerate, incompatible
from .core import Mutation, law

M = "isolability-set"


def _irr(n_max: int, n_min: int = 1) -> list[Cograph]:
    return [c for n in range(n_min, n_max + 1) for c in enumerate_cographs(n, "irr")]


def _objects(x: int, kinds: str = "ps") -> list[IsolabilityObject]:
    out: list[IsolabilityObject] = []
    for k in range(x + 1):
        pts = list(range(1, k + 1))
        if "p" in kinds:
            out.append(PointIsolation(pts))
        if "s" in kinds:
            out.append(SubsetIsolation(pts))
    return out


class _Dropped(IsolabilityObject):
    """``base`` with one configuration removed from the carrier at ``victim``."""

    def __init__(self, base: IsolabilityObject, victim: Cograph, mut: Mutation):
        self.base, self.victim, self.mut = base, victim, mut
        self.name = f"dropped({base.name})"

    def _carrier(self, lam: Cograph) -> Iterator[tuple]:
        cfgs = self.base.carrier(lam)
        if lam == self.victim:
            cfgs = self.mut.drop(cfgs)
        return iter(cfgs)

    def restrict(self, m: GraphMap, cfg: tuple) -> tuple:
        return self.base.restrict(m, cfg)


@law("ISO-FUNCTORIALITY", M, "Isolability objects: restriction respects identities and composition")
def iso_functoriality(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for obj in _objects(b["x"]):
        rep = check_functorial(obj, b["n"])
        checked += rep.checked
        if not rep.passed:
            return CheckReport(False, checked, {"object": repr(obj), **rep.witness})
    return CheckReport(True, checked)


@law("ISO-REG", M, "Regularity: squares of a surjection against an accretive injection go to fibre products", mutable=True)
def iso_reg(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    objs = _objects(b["x"])
    if mut is not None:
        victim = mut.target(_irr(2))
        idx = mut.target([i for i, o in enumerate(objs) if o.carrier(victim)], key="object")
        objs[idx] = _Dropped(objs[idx], victim, mut)
    for obj in objs:
        rep = check_regular(obj, b["n"])
        checked += rep.checked
        if not rep.passed:
            return CheckReport(False, checked, {"object": repr(obj), **rep.witness})
    return CheckReport(True, checked)


@law("ISO-ADDITIVE", M, "Additivity: disjoint unions of cographs go to products of carriers")
def iso_additive(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for obj in _objects(b["x"]):
        rep = check_additive(obj, b["n"])
        checked += rep.checked
        if not rep.passed:
            return CheckReport(False, checked, {"object": repr(obj), **rep.witness})
    return CheckReport(True, checked)


@law("ISO-SK2-FIXED", M, "Skeletality: separating configurations of points form a 2-skeletal isolability object")
def iso_sk2_fixed(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for obj in _objects(b["x"], "p"):
        sk = skeleton(2, obj)
        for lam in _irr(b["n"], 0):
            checked += 1
            if sk.carrier(lam) != obj.carrier(lam):
                return CheckReport(False, checked, {"object": repr(obj), "lambda": lam})
    return CheckReport(True, checked)


@law("ISO-SK-MONOTONE", M, "Skeletality: the skeletal filtration is increasing and stabilises at the object itself")
def iso_sk_monotone(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for obj in _objects(b["x"]):
        for lam in _irr(b["n"], 0):
            full = set(obj.carrier(lam))
            prev: set = set()
            for k in range(1, lam.n + 2):
                checked += 1
                cur = set(skeleton(k, obj).carrier(lam))
                if not prev <= cur <= full:
                    return CheckReport(False, checked, {"object": repr(obj), "lambda": lam, "k": k})
                prev = cur
            # depth never exceeds the number of vertices, so the top skeleton is everything
            if prev != full:
                return CheckReport(False, checked, {"object": repr(obj), "lambda": lam, "reason": "does not stabilise"})
    return CheckReport(True, checked)


@law("ISO-SK1", M, "Skeletality: the 1-skeleton is everything on edgeless cographs and empty otherwise")
def iso_sk1(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for obj in _objects(b["x"]):
        sk = skeleton(1, obj)
        for lam in _irr(b["n"], 0):
            checked += 1
            want = obj.unconstrained(lam.n) if not lam.edges() else ()
            if sk.carrier(lam) != want:
                return CheckReport(False, checked, {"object": repr(obj), "lambda": lam})
    return CheckReport(True, checked)


@law("ISO-COSK1", M, "Skeletality: the 1-coskeleton ignores edges, so it inverts dispersive maps")
def iso_cosk1(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for obj in _objects(b["x"]):
        co = coskeleton1(obj)
        for lam in _irr(b["n"], 0):
            checked += 1
            if co.carrier(lam) != obj.unconstrained(lam.n):
                return CheckReport(False, checked, {"object": repr(obj), "lambda": lam})
            for mu in supersets(lam):
                # the dispersive map lam -> mu is the identity on vertices
                j = GraphMap(lam, mu, tuple(range(lam.n)))
                image = sorted(co.restrict(j, c) for c in co.carrier(mu))
                checked += 1
                if image != list(co.carrier(lam)):
                    return CheckReport(False, checked, {"object": repr(obj), "dispersive": j})
    return CheckReport(True, checked)


def _paw3_pieces() -> tuple[Cograph, Cograph, Cograph, Cograph]:
    p = paw(3)  # an edge 0-1 and a vertex 2 apart from both
    left = Cograph.from_edges(3, p.edges() + [(0, 2)])
    right = Cograph.from_edges(3, p.edges() + [(1, 2)])
    tri = clique(3)
    return p, left, right, tri


@law("ISO-COTRANS", M, "Skeletality: the cotransitivity formula writes the third paw's 2-skeleton as a union of two carriers over the triangle")
def iso_cotrans(b: dict, mut: Mutation | None) -> CheckReport:
    p, left, right, tri = _paw3_pieces()
    checked = 0
    for obj in _objects(b["x"]):
        checked += 1
        L, R, T = set(obj.carrier(left)), set(obj.carrier(right)), set(obj.carrier(tri))
        sk = set(skeleton(2, obj).carrier(p))
        if sk != L | R or L & R != T:
            return CheckReport(False, checked, {"object": repr(obj)})
        # separating points are already 2-skeletal, so the union is the whole carrier
        if isinstance(obj, PointIsolation) and set(obj.carrier(p)) != sk:
            return CheckReport(False, checked, {"object": repr(obj), "reason": "union misses configurations"})
    return CheckReport(True, checked)


@law("ISO-SK2-SUBSET", M, "Observer stacks: disjoint-subset isolation is not 2-skeletal; a triple of subsets at the third paw shows it")
def iso_sk2_subset(b: dict, mut: Mutation | None) -> CheckReport:
    obj = SubsetIsolation([1, 2])
    cfg = ((1,), (2,), (1, 2))
    p = paw(3)
    inside = cfg in obj.carrier(p)
    excluded = cfg not in skeleton(2, obj).carrier(p)
    if not (inside and excluded):
        return CheckReport(False, 1, {"config": cfg, "in_full": inside, "in_sk2": not excluded})
    return CheckReport(True, 1)


def _labeled_irr(n: int) -> list[Cograph]:
    pairs = list(combinations(range(n), 2))
    out = []
    for bits in product((0, 1), repeat=len(pairs)):
        try:
            out.append(Cograph.from_edges(n, [e for e, on in zip(pairs, bits) if on]))
        except ValueError:
            continue
    return out


@law("ISO-TENSOR-COLIM", M, "Products: the convolution product is the union of products of carriers over pairs of cographs covering the edges")
def iso_tensor_colim(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    objs = _objects(b["x"])
    for a in objs:
        for c in objs:
            t = Tensor(a, c)
            for n in range(b["n"] + 1):
                labeled = _labeled_irr(n)
                for lam in enumerate_cographs(n, "irr"):
                    checked += 1
                    e = set(lam.edges())
                    union = set()
                    for m1 in labeled:
                        for m2 in labeled:
                            if e <= set(m1.edges()) | set(m2.edges()):
                                union.update(product(a.carrier(m1), c.carrier(m2)))
                    if set(t.carrier(lam)) != union:
                        return CheckReport(False, checked, {"left": repr(a), "right": repr(c), "lambda": lam})
    return CheckReport(True, checked)


@law("ISO-BASIC", M, "A basic example: collapsing two points gives the diagonal, adding an edge removes it, and the two inclusions give the projections")
def iso_basic(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    one, two = trivial(1), trivial(2)
    for k in range(b["x"] + 1):
        obj = PointIsolation(list(range(k)))
        xs = obj.carrier(one)
        full = set(obj.carrier(two))
        checked += 1
        diag = {obj.restrict(GraphMap(two, one, (0, 0)), c) for c in xs}
        if diag != {(x, x) for (x,) in xs}:
            return CheckReport(False, checked, {"points": k, "reason": "diagonal"})
        checked += 1
        apart = set(obj.carrier(EDGE))
        if apart != full - diag:
            return CheckReport(False, checked, {"points": k, "reason": "complement of the diagonal"})
        for side in (0, 1):
            checked += 1
            inc = GraphMap(one, EDGE, (side,))
            if {obj.restrict(inc, c) for c in apart} != ({(x,) for x in range(k)} if k >= 2 else set()):
                return CheckReport(False, checked, {"points": k, "reason": "projection", "side": side})
            if any(obj.restrict(inc, c) != (c[side],) for c in apart):
                return CheckReport(False, checked, {"points": k, "reason": "projection", "side": side})
    return CheckReport(True, checked)


def _surjections(lam: Cograph) -> Iterator[GraphMap]:
    for mu in _irr(lam.n, 0):
        for m in hom_enumerate(lam, mu):
            if len(set(m.f)) == mu.n:
                yield m


def _complement_ok(obj: IsolabilityObject, lam_p: Cograph, lam: Cograph, maps: list[GraphMap]) -> bool:
    j = GraphMap(lam_p, lam, tuple(range(lam.n)))
    closed: set = set()
    for i in maps:
        if incompatible(j, i):
            closed.update(obj.restrict(i, c) for c in obj.carrier(i.tgt))
    opened = {obj.restrict(j, c) for c in obj.carrier(lam)}
    return opened == set(obj.carrier(lam_p)) - closed


@law("ISO-DISPERSIVE-COMPLEMENT", M, "A basic example: a dispersive map cuts out the complement of the images of the surjections incompatible with it; from an edgeless source the accretive surjections suffice")
def iso_dispersive_complement(b: dict, mut: Mutation | None) -> CheckReport:
    # From a source with edges the accretive surjections alone are not enough:
    # they cannot collapse two vertices with different neighbourhoods.
    checked = 0
    for obj in _objects(b["x"], "p"):
        for lam_p in _irr(b["n"], 0):
            surj = list(_surjections(lam_p))
            accr = [i for i in surj if _is_accretive(i)]
            for lam in supersets(lam_p):
                checked += 1
                if not _complement_ok(obj, lam_p, lam, surj):
                    return CheckReport(False, checked, {"object": repr(obj), "source": lam_p, "target": lam})
                if not lam_p.edges():
                    checked += 1
                    if not _complement_ok(obj, lam_p, lam, accr):
                        return CheckReport(False, checked, {"object": repr(obj), "source": lam_p, "target": lam, "accretive_only": True})
    return CheckReport(True, checked)
