"""Laws about single cographs: recognition, depth, canonical forms, enumeration."""

from __future__ import annotations

from itertools import combinations, permutations, product

from ..cograph import (
    Cograph,
    _bits,
    _irreflexive_rows,
    _quadruple_ok,
    all_relations,
    classify,
    cocomponents,
    codepth,
    components,
    copaw,
    csum,
    depth,
    dsum,
    indexed_sum,
    is_cograph_p4,
    neg,
    paw,
)
from ..cotree import FLAVORS, _from_cotrees, _from_filter, canonical_form, canonical_key, cotree_depth, enumerate_cographs, from_expr
from ..isolability import CheckReport
from .core import Mutation, law

M = "cograph-core"


def _reps(n_max: int, flavor: str = "any", n_min: int = 0) -> list[Cograph]:
    return [c for n in range(n_min, n_max + 1) for c in enumerate_cographs(n, flavor)]


@law("CG-EQUIV", M, "Cographs: the quadruple condition on a symmetric relation holds exactly when its loop-free part has no induced path on four vertices")
def cg_equiv(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for n in range(b["n"] + 1):
        for c in all_relations(n):
            checked += 1
            if _quadruple_ok(c.rows) != is_cograph_p4(c):
                return CheckReport(False, checked, {"relation": c, "quadruple": _quadruple_ok(c.rows)})
    return CheckReport(True, checked)


@law("CG-HEREDITARY", M, "Cographs: induced sub-relations of cographs are cographs")
def cg_hereditary(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"]):
        for k in range(c.n + 1):
            for sub in combinations(range(c.n), k):
                checked += 1
                if not is_cograph_p4(c.induced(sub)):
                    return CheckReport(False, checked, {"cograph": c, "subset": sub})
    return CheckReport(True, checked)


@law("CG-CONN-OR-COCONN", M, "Depth filtration: every nonempty cograph is connected or co-connected")
def cg_conn_or_coconn(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"], n_min=1):
        checked += 1
        if len(components(c)) != 1 and len(cocomponents(c)) != 1:
            return CheckReport(False, checked, {"cograph": c})
    return CheckReport(True, checked)


@law("CG-PARITY", M, "Depth filtration: with two or more vertices, connected means even depth and odd co-depth, co-connected means odd depth and even co-depth")
def cg_parity(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"], n_min=2):
        cl = classify(c)
        checked += 1
        ok = (
            cl.connected == (cl.depth % 2 == 0) == (cl.codepth % 2 == 1)
            and cl.coconnected == (cl.depth % 2 == 1) == (cl.codepth % 2 == 0)
        )
        if not ok:
            return CheckReport(False, checked, {"cograph": c, "class": cl.__dict__})
    return CheckReport(True, checked)


@law("CG-SINGLETON", M, "Depth filtration: a finite cograph both connected and co-connected is a singleton")
def cg_singleton(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"]):
        checked += 1
        if len(components(c)) == 1 and len(cocomponents(c)) == 1 and c.n != 1:
            return CheckReport(False, checked, {"cograph": c})
    return CheckReport(True, checked)


def _embeds(pattern: Cograph, rows: tuple[int, ...]) -> bool:
    # Induced embedding of a loop-free pattern into loop-free rows, by brute force.
    k, n = pattern.n, len(rows)
    for img in permutations(range(n), k):
        if all(
            bool(rows[img[i]] >> img[j] & 1) == pattern.related(i, j) for i in range(k) for j in range(i + 1, k)
        ):
            return True
    return False


def _codepth_by_copaws(c: Cograph) -> int:
    rows = _irreflexive_rows(c.rows)
    best = 0
    for k in range(1, c.n + 1):
        if _embeds(copaw(k), rows):
            best = k
    return best


@law("CG-CODEPTH-NEG", M, "Depth filtration: co-depth, read off co-paw embeddings, is the depth of the negation and differs from the depth by at most one")
def cg_codepth_neg(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"]):
        checked += 1
        cd = _codepth_by_copaws(c)
        if cd != depth(neg(c)) or cd != codepth(c):
            return CheckReport(False, checked, {"cograph": c, "copaw_search": cd, "depth_of_negation": depth(neg(c))})
        if c.n and abs(depth(c) - cd) > 1:
            return CheckReport(False, checked, {"cograph": c, "depth": depth(c), "codepth": cd})
    return CheckReport(True, checked)


@law("CG-INTERLEAVE", M, "Depth filtration: depth at most k-1 implies co-depth at most k, which implies depth at most k+1")
def cg_interleave(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"]):
        d, cd = depth(c), codepth(c)
        for k in range(1, c.n + 2):
            checked += 1
            if (d <= k - 1 and cd > k) or (cd <= k and d > k + 1):
                return CheckReport(False, checked, {"cograph": c, "k": k, "depth": d, "codepth": cd})
    return CheckReport(True, checked)


def _perm_tables(n: int) -> list[tuple[tuple[int, ...], list[int]]]:
    out = []
    for perm in permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1 << n):
            m = 0
            for v in _bits(mask):
                m |= 1 << perm[v]
            table[mask] = m
        out.append((perm, table))
    return out


def _orbit_min(rows: tuple[int, ...], tables: list) -> tuple[int, ...]:
    best = None
    for perm, table in tables:
        new = [0] * len(rows)
        for i, r in enumerate(rows):
            new[perm[i]] = table[r]
        t = tuple(new)
        if best is None or t < best:
            best = t
    return best  # type: ignore[return-value]


@law("CG-CANON", M, "Depth filtration: every cograph has a canonical form, which is a complete isomorphism invariant")
def cg_canon(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for n in range(b["n"] + 1):
        tables = _perm_tables(n)
        key_to_orbit: dict[str, tuple] = {}
        orbit_to_key: dict[tuple, str] = {}
        for c in all_relations(n, loops=n <= b["n_loops"]):
            if not is_cograph_p4(c):
                continue
            checked += 1
            key = canonical_key(c)
            orb = _orbit_min(c.rows, tables)
            if key_to_orbit.setdefault(key, orb) != orb or orbit_to_key.setdefault(orb, key) != key:
                return CheckReport(False, checked, {"cograph": c, "key": key})
            back = from_expr(canonical_form(c))
            if _orbit_min(back.rows, tables) != orb:
                return CheckReport(False, checked, {"round_trip": c, "realised": back})
    return CheckReport(True, checked)


@law("CG-COUNT-XCHECK", M, "Enumeration: cotree generation and filtering all relations give the same isomorphism classes", mutable=True)
def cg_count_xcheck(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    victim = mut.target([(n, f) for n in range(1, b["n"] + 1) for f in FLAVORS]) if mut else None
    for n in range(b["n"] + 1):
        for flavor in FLAVORS:
            gen = _from_cotrees(n, flavor)
            if (n, flavor) == victim:
                gen = list(mut.drop(gen))  # type: ignore[union-attr]
            filt = _from_filter(n, flavor)
            checked += 1
            if gen != filt:
                diff = sorted(set(gen) ^ set(filt))[:1]
                return CheckReport(False, checked, {"n": n, "flavor": flavor, "counts": [len(gen), len(filt)], "differs": diff})
    return CheckReport(True, checked)


@law("CG-DEPTH-COTREE", M, "Depth filtration: depth found by paw search equals depth read off the canonical cotree")
def cg_depth_cotree(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for c in _reps(b["n"]):
        checked += 1
        if depth(c) != cotree_depth(canonical_form(c)):
            return CheckReport(False, checked, {"cograph": c, "search": depth(c), "cotree": cotree_depth(canonical_form(c))})
    return CheckReport(True, checked)


@law("CG-PAW-DEPTH", M, "Depth filtration: the k-th paw has depth k, the k-th co-paw (k at least 2) depth k-1; even paws are connected, odd paws co-connected")
def cg_paw_depth(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for k in range(1, b["k"] + 1):
        checked += 1
        p, q = paw(k), copaw(k)
        # copaw(1) is a single vertex, which has depth 1 like every singleton
        if depth(p) != k or depth(q) != max(k - 1, 1):
            return CheckReport(False, checked, {"k": k, "paw": depth(p), "copaw": depth(q)})
        if k >= 2:
            conn = len(components(p)) == 1
            coconn = len(cocomponents(p)) == 1
            if (k % 2 == 0) != conn or (k % 2 == 1) != coconn:
                return CheckReport(False, checked, {"k": k, "connected": conn, "coconnected": coconn})
    return CheckReport(True, checked)


def _recursive_sum(lam: Cograph, parts: tuple[Cograph, ...]) -> tuple[Cograph, list[tuple[int, int]]]:
    """Indexed sum built along the decomposition of ``lam``; also returns (part, index) per vertex."""

    def walk(verts: tuple[int, ...]) -> tuple[Cograph, list[tuple[int, int]]]:
        if len(verts) == 1:
            a = verts[0]
            return parts[a], [(a, i) for i in range(parts[a].n)]
        sub = lam.induced(verts)
        comps = components(sub)
        op = dsum
        if len(comps) == 1:
            comps, op = cocomponents(sub), csum
        out, labels = Cograph(0, ()), []
        for comp in comps:
            g, lab = walk(tuple(verts[i] for i in comp))
            out = op(out, g)
            labels += lab
        return out, labels

    return walk(tuple(range(lam.n)))


@law("CG-IS-FLAT", M, "Fibrations and indexed sums: the recursive indexed sum over a reflexive cograph has the flat description")
def cg_is_flat(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    pieces = _reps(b["part"])
    for lam in _reps(b["n"], "refl", n_min=1):
        for parts in product(pieces, repeat=lam.n):
            checked += 1
            flat = indexed_sum(lam, parts)
            rec, labels = _recursive_sum(lam, parts)
            order = sorted(range(len(labels)), key=lambda v: labels[v])
            pos = [0] * len(labels)
            for new, old in enumerate(order):
                pos[old] = new
            if rec.relabel(pos) != flat:
                return CheckReport(False, checked, {"lambda": lam, "parts": list(parts)})
    return CheckReport(True, checked)


@law("CG-NEG-SUM", M, "Sums of cographs: negation is an involution exchanging the two sums")
def cg_neg_sum(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    reps = _reps(b["n"])
    for x in reps:
        if neg(neg(x)) != x:
            return CheckReport(False, checked, {"involution": x})
        for y in reps:
            if x.n + y.n > b["n"]:
                continue
            checked += 1
            s = csum(x, y)
            if neg(s) != dsum(neg(x), neg(y)) or not is_cograph_p4(s) or not is_cograph_p4(dsum(x, y)):
                return CheckReport(False, checked, {"a": x, "b": y})
    return CheckReport(True, checked)
