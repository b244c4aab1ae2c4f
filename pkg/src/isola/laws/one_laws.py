"""Laws about directed 1-cographs and 1-structures."""

from __future__ import annotations

from math import factorial

from ..cograph import Cograph, clique, csum, dsum, is_cograph_p4, paw
from ..cotree import enumerate_cographs
from ..isolability import CheckReport
from ..morphism import _is_accretive, hom_enumerate
from ..onecograph import (
    OneCograph,
    count_one_structures,
    directed_map_ok,
    directed_paw,
    is_onecograph,
    nonfunctorial_witness,
    odsum,
    one_structures,
    one_structures_brute,
    opposite,
    osum,
    symmetrize,
)
from .core import Mutation, law

M = "onecograph"


def _reps(n_max: int, flavor: str = "any", n_min: int = 0) -> list[Cograph]:
    return [c for n in range(n_min, n_max + 1) for c in enumerate_cographs(n, flavor)]


@law("ONE-COUNT", M, "1-cographs: the 1-structures on a cograph are obtained by ordering the children of each connected-sum node", mutable=True)
def one_count(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    reps = _reps(b["n"])
    victim = mut.target([c for c in reps if c.n >= 2]) if mut else None
    for lam in reps:
        checked += 1
        built = one_structures(lam)
        if lam == victim:
            built = list(mut.drop(built))  # type: ignore[union-attr]
        brute = one_structures_brute(lam)
        if built != brute or len(brute) != count_one_structures(lam):
            return CheckReport(False, checked, {"cograph": lam, "built": len(built), "brute": len(brute), "formula": count_one_structures(lam)})
    for n in range(b["complete"] + 1):
        checked += 1
        if len(one_structures_brute(clique(n))) != factorial(n):
            return CheckReport(False, checked, {"complete": n})
    return CheckReport(True, checked)


@law("ONE-S-ACCR-LIFT", M, "1-cographs: over accretive maps of loop-free cographs, 1-structures pull back uniquely")
def one_s_accr_lift(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    reps = _reps(b["n"], "irr")
    brute = {c: one_structures_brute(c) for c in reps}
    for lam in reps:
        for mu in reps:
            for m in hom_enumerate(lam, mu):
                if not _is_accretive(m):
                    continue
                for delta in brute[mu]:
                    checked += 1
                    lifts = [g for g in brute[lam] if directed_map_ok(g, delta, m.f)]
                    if len(lifts) != 1:
                        return CheckReport(False, checked, {"map": m, "delta": delta, "lifts": len(lifts)})
    return CheckReport(True, checked)


@law("ONE-NONFUNCTORIAL", M, "1-cographs: restricting a 1-structure to a sub-cograph of its shadow can lose transitivity")
def one_nonfunctorial(b: dict, mut: Mutation | None) -> CheckReport:
    gamma, sub, restricted = nonfunctorial_witness()
    shadow = symmetrize(gamma)
    inside = all(not sub.related(i, j) or shadow.related(i, j) for i in range(sub.n) for j in range(sub.n))
    oriented = OneCograph.from_edges(sub.n, restricted, sub.loops(), check=False)
    ok = (
        is_onecograph(gamma)
        and is_cograph_p4(sub)
        and inside
        and symmetrize(oriented) == sub
        and not is_onecograph(oriented)
    )
    if not ok:
        return CheckReport(False, 1, {"gamma": gamma, "sub": sub})
    # the witness is minimal: below three vertices every restriction stays a 1-cograph
    checked = 1
    for lam in _reps(2):
        for g in one_structures_brute(lam):
            for s in _sub_relations(lam):
                checked += 1
                o = OneCograph(lam.n, tuple(g.rows[i] & s.rows[i] for i in range(lam.n)))
                if not is_onecograph(o):
                    return CheckReport(False, checked, {"smaller": o})
    return CheckReport(True, checked)


def _sub_relations(lam: Cograph):
    n = lam.n
    pairs = [(i, j) for i in range(n) for j in range(i, n) if lam.related(i, j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        c = Cograph(n, tuple(rows))
        if is_cograph_p4(c):
            yield c


@law("ONE-OPPOSITE", M, "1-cographs: reversing arrows is an involution on 1-cographs over the identity of shadows")
def one_opposite(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for lam in _reps(b["n"]):
        for g in one_structures(lam):
            checked += 1
            op = opposite(g)
            if not is_onecograph(op) or opposite(op) != g or symmetrize(op) != symmetrize(g):
                return CheckReport(False, checked, {"gamma": g})
    return CheckReport(True, checked)


@law("ONE-SUMS", M, "1-cographs: the ordered and disjoint sums are associative, stay 1-cographs and lie over the two sums of cographs")
def one_sums(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    n = b["n"]
    structs = [g for lam in _reps(n) for g in one_structures(lam)]
    for x in structs:
        for y in structs:
            if x.n + y.n > n:
                continue
            checked += 1
            o, d = osum(x, y), odsum(x, y)
            if not (is_onecograph(o) and is_onecograph(d)):
                return CheckReport(False, checked, {"a": x, "b": y})
            if symmetrize(o) != csum(symmetrize(x), symmetrize(y)) or symmetrize(d) != dsum(symmetrize(x), symmetrize(y)):
                return CheckReport(False, checked, {"a": x, "b": y, "reason": "shadow"})
            for z in structs:
                if x.n + y.n + z.n > n:
                    continue
                checked += 1
                if osum(osum(x, y), z) != osum(x, osum(y, z)) or odsum(odsum(x, y), z) != odsum(x, odsum(y, z)):
                    return CheckReport(False, checked, {"a": x, "b": y, "c": z})
    return CheckReport(True, checked)


@law("ONE-PAW", M, "1-cographs: the directed paws are 1-cographs lying over the paws")
def one_paw(b: dict, mut: Mutation | None) -> CheckReport:
    for k in range(1, b["k"] + 1):
        p = directed_paw(k)
        if not is_onecograph(p) or symmetrize(p) != paw(k):
            return CheckReport(False, k, {"k": k})
    return CheckReport(True, b["k"])
