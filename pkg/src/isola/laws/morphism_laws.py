"""Laws about maps of cographs: factorization, pullbacks, fibrations, spans, partial maps."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from ..cograph import Cograph, CographError, is_cograph_p4, neg
from ..cotree import canonical_key, enumerate_cographs
from ..isolability import CheckReport
from ..morphism import (
    _is_accretive,
    GraphMap,
    PartialGraphMap,
    cartesian_lift,
    classify_map,
    compose,
    compose_partial,
    factor_da,
    hom_count,
    hom_enumerate,
    hom_vop,
    incompatible,
    inert_active_factor,
    is_fibration,
)
from ..cograph import indexed_sum
from .core import Mutation, law

M = "morphism"


def _reps(n_max: int, flavor: str = "any", n_min: int = 0) -> list[Cograph]:
    return [c for n in range(n_min, n_max + 1) for c in enumerate_cographs(n, flavor)]


def _relations_over(src: Cograph):
    # every symmetric relation (loops allowed) on the vertices of src that contains it
    n = src.n
    pairs = [(i, j) for i in range(n) for j in range(i, n) if not src.related(i, j)]
    for bits in product((0, 1), repeat=len(pairs)):
        rows = list(src.rows)
        for (i, j), on in zip(pairs, bits):
            if on:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Cograph(n, tuple(rows))


@law("MOR-FACTOR-UNIQUE", M, "Dispersive and accretive maps: every map is a dispersive map followed by an accretive one, uniquely up to unique isomorphism")
def mor_factor_unique(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    reps = _reps(b["n"])
    for x in reps:
        for y in reps:
            for m in hom_enumerate(x, y):
                checked += 1
                try:
                    d, a = factor_da(m)
                except CographError:
                    return CheckReport(False, checked, {"map": m, "reason": "middle is not a cograph"})
                bij = d.f == tuple(range(x.n)) and d.tgt.n == x.n
                if not (bij and _is_accretive(a) and compose(a, d) == m):
                    return CheckReport(False, checked, {"map": m, "reason": "not a factorization"})
                if x.n <= b["n_unique"]:
                    # brute force: the only middle relation that works is the pulled back one
                    mids = [
                        r for r in _relations_over(x)
                        if all(r.related(i, j) == y.related(m.f[i], m.f[j]) for i in range(x.n) for j in range(x.n))
                    ]
                    if mids != [d.tgt]:
                        return CheckReport(False, checked, {"map": m, "middles": mids})
    return CheckReport(True, checked)


@law("MOR-PULLBACK-CLOSED", M, "Categories of isolation: pulling a cograph back along any vertex map gives a cograph")
def mor_pullback_closed(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for tgt in _reps(b["tgt"]):
        for k in range(b["src"] + 1):
            for f in product(range(tgt.n), repeat=k):
                checked += 1
                try:
                    lift = cartesian_lift(f, tgt)
                except CographError:
                    return CheckReport(False, checked, {"tgt": tgt, "f": [v + 1 for v in f]})
                if not is_cograph_p4(lift):
                    return CheckReport(False, checked, {"tgt": tgt, "f": [v + 1 for v in f]})
    return CheckReport(True, checked)


@law("MOR-FIB-SUM", M, "Fibrations and indexed sums: a fibration onto a reflexive cograph exhibits its source as the indexed sum of its fibres")
def mor_fib_sum(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for lam in _reps(b["n"], "refl", n_min=1):
        for mu in _reps(b["src"]):
            for m in hom_enumerate(mu, lam):
                if not is_fibration(m):
                    continue
                checked += 1
                fibers = [mu.induced([v for v in range(mu.n) if m.f[v] == a]) for a in range(lam.n)]
                order = sorted(range(mu.n), key=lambda v: (m.f[v], v))
                pos = [0] * mu.n
                for new, old in enumerate(order):
                    pos[old] = new
                if mu.relabel(pos) != indexed_sum(lam, fibers):
                    return CheckReport(False, checked, {"map": m})
    return CheckReport(True, checked)


def _image(lam: Cograph, g: tuple[int, ...], k: int) -> Cograph:
    rows = [0] * k
    for a in range(lam.n):
        for c in range(lam.n):
            if lam.related(a, c):
                rows[g[a]] |= 1 << g[c]
    return Cograph(k, tuple(rows))


def _surjections(n: int, k: int):
    for g in product(range(k), repeat=n):
        if len(set(g)) == k:
            yield g


@law("MOR-PUSHOUT-DA", M, "Dispersive and accretive maps: squares of a dispersive map against an accretive surjection are pushouts")
def mor_pushout_da(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    tests = _reps(b["test"])
    for lam in _reps(b["n"]):
        for k in range(1 if lam.n else 0, lam.n + 1):
            for g in _surjections(lam.n, k):
                mu = _image(lam, g, k)
                if not classify_map(GraphMap(lam, mu, g)).accretive or not is_cograph_p4(mu):
                    continue
                for lam_p in _relations_over(lam):
                    if not is_cograph_p4(lam_p):
                        continue
                    mu_p = _image(lam_p, g, k)
                    if not is_cograph_p4(mu_p) or not classify_map(GraphMap(lam_p, mu_p, g)).accretive:
                        continue
                    for t in tests:
                        checked += 1
                        # cocones (u, v) with u = v after g are determined by v
                        cocones = sum(
                            1 for v in hom_enumerate(mu, t)
                            if all(not lam_p.related(a, c) or t.related(v.f[g[a]], v.f[g[c]])
                                   for a in range(lam.n) for c in range(lam.n))
                        )
                        if cocones != hom_count(mu_p, t):
                            return CheckReport(False, checked, {"lambda": lam, "lambda_prime": lam_p, "g": g, "test": t})
    return CheckReport(True, checked)


@law("MOR-NEG-DUALITY", M, "Spans: negation identifies the vertical opposite with the category itself, exchanging loop-free and reflexive cographs", mutable=True)
def mor_neg_duality(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for n in range(b["n"] + 1):
        checked += 1
        irr = {canonical_key(neg(c)) for c in enumerate_cographs(n, "irr")}
        refl = {canonical_key(c) for c in enumerate_cographs(n, "refl")}
        if irr != refl:
            return CheckReport(False, checked, {"n": n, "reason": "negation is not a bijection onto reflexive cographs"})
    reps = _reps(b["n"])
    pairs = [(x, y) for x in reps for y in reps]
    victim = mut.target(range(len(pairs))) if mut else None
    done = False
    for idx, (x, y) in enumerate(pairs):
        spans = hom_vop(x, y)
        if victim is not None and not done and idx >= victim and spans:
            spans, done = list(mut.drop(spans)), True  # type: ignore[union-attr]
        checked += 1
        if len(spans) != hom_count(neg(x), neg(y)):
            return CheckReport(False, checked, {"x": x, "y": y, "vop": len(spans), "negated": hom_count(neg(x), neg(y))})
    return CheckReport(True, checked)


def _iso_over(mu: Cograph, f: tuple[int, ...]) -> tuple:
    best = None
    for perm in permutations(range(mu.n)):
        inv = [0] * mu.n
        for i, p in enumerate(perm):
            inv[p] = i
        key = (mu.relabel(perm).rows, tuple(f[inv[v]] for v in range(mu.n)))
        if best is None or key < best:
            best = key
    return best  # type: ignore[return-value]


@law("MOR-SEGAL-COUNT", M, "Examples: fibrations over a reflexive cograph correspond to tuples of fibres indexed by its vertices")
def mor_segal_count(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    per_vertex = len(_reps(b["fiber"]))
    for lam in _reps(b["n"], "refl"):
        classes = set()
        for mu in _reps(lam.n * b["fiber"]):
            for m in hom_enumerate(mu, lam):
                if not is_fibration(m):
                    continue
                if any(m.f.count(a) > b["fiber"] for a in range(lam.n)):
                    continue
                classes.add(_iso_over(mu, m.f))
        checked += 1
        if len(classes) != per_vertex**lam.n:
            return CheckReport(False, checked, {"lambda": lam, "classes": len(classes), "tuples": per_vertex**lam.n})
    return CheckReport(True, checked)


def _partials(a: Cograph, t: Cograph) -> list[PartialGraphMap]:
    out = []
    for k in range(a.n + 1):
        for dom in combinations(range(a.n), k):
            for m in hom_enumerate(a.induced(dom), t):
                out.append(PartialGraphMap(a, dom, t, m.f))
    return out


@law("MOR-PARTIAL-ASSOC", M, "Partial maps of cographs: composition of partial maps is associative and unital")
def mor_partial_assoc(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    objs = _reps(b["n"])
    homs = {(i, j): _partials(x, y) for i, x in enumerate(objs) for j, y in enumerate(objs)}
    N = len(objs)
    for i, x in enumerate(objs):
        ident = PartialGraphMap(x, tuple(range(x.n)), x, tuple(range(x.n)))
        for j in range(N):
            for f in homs[(i, j)]:
                idy = PartialGraphMap(objs[j], tuple(range(objs[j].n)), objs[j], tuple(range(objs[j].n)))
                if compose_partial(f, ident) != f or compose_partial(idy, f) != f:
                    return CheckReport(False, checked, {"identity": f})
    triples = [(a, bb, c, d) for a in range(N) for bb in range(N) for c in range(N) for d in range(N)]
    for a, bb, c, d in triples:
        for f in homs[(a, bb)]:
            for g in homs[(bb, c)]:
                gf = compose_partial(g, f)
                for h in homs[(c, d)]:
                    checked += 1
                    if compose_partial(h, gf) != compose_partial(compose_partial(h, g), f):
                        return CheckReport(False, checked, {"f": f, "g": g, "h": h})
    # seeded sample of longer chains on larger cographs
    rng = random.Random(b.get("seed", 0))
    big = _reps(b["sample_n"])
    for _ in range(b.get("samples", 0)):
        x, y, z, w = (rng.choice(big) for _ in range(4))
        fs, gs, hs = _partials(x, y), _partials(y, z), _partials(z, w)
        f, g, h = rng.choice(fs), rng.choice(gs), rng.choice(hs)
        checked += 1
        if compose_partial(h, compose_partial(g, f)) != compose_partial(compose_partial(h, g), f):
            return CheckReport(False, checked, {"f": f, "g": g, "h": h})
    return CheckReport(True, checked)


@law("MOR-INERT-ACTIVE", M, "Partial maps of cographs: every partial map is an inert map followed by an active one, the inert part fixed by the domain")
def mor_inert_active(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    objs = _reps(b["n"])
    for x in objs:
        for y in objs:
            for p in _partials(x, y):
                checked += 1
                inert, active = inert_active_factor(p)
                if not (inert.is_inert and active.is_active and inert.domain == p.domain):
                    return CheckReport(False, checked, {"partial": p, "reason": "legs have the wrong kind"})
                if compose_partial(active, inert) != p:
                    return CheckReport(False, checked, {"partial": p, "reason": "does not compose back"})
    return CheckReport(True, checked)


def _pushout_has_loop(phi: GraphMap, f: GraphMap) -> bool:
    # set pushout of the two vertex maps, with the union of the image relations
    n1 = phi.tgt.n
    parent = list(range(n1 + f.tgt.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(phi.src.n):
        parent[find(phi.f[i])] = find(n1 + f.f[i])
    for off, t in ((0, phi.tgt), (n1, f.tgt)):
        for a in range(t.n):
            for c in range(t.n):
                if t.related(a, c) and find(off + a) == find(off + c):
                    return True
    return False


@law("MOR-INCOMPATIBLE", M, "Categories of isolation: incompatible maps from a common loop-free source have no loop-free cocone")
def mor_incompatible(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    objs = _reps(b["n"], "irr")
    for src in objs:
        for t1 in objs:
            for phi in hom_enumerate(src, t1):
                for t2 in objs:
                    for f in hom_enumerate(src, t2):
                        checked += 1
                        # a cocone into a loop-free target exists iff the pushout relation is
                        # loop-free: such a relation embeds in a complete loop-free graph
                        if incompatible(phi, f) and not _pushout_has_loop(phi, f):
                            return CheckReport(False, checked, {"phi": phi, "f": f})
    return CheckReport(True, checked)
