"""Laws about the isolability posets, the line and the truncated Ran category."""

from __future__ import annotations

from itertools import permutations

from ..cograph import Cograph
from ..cotree import enumerate_cographs
from ..isolability import CheckReport, PointIsolation, skeleton
from ..line import (
    DiscreteFamily,
    K_poset,
    LineFamily,
    OrientedApartnessFamily,
    TrivialFamily,
    envelope,
    face_poset_oracle,
    line_poset,
    monotone_count,
    pad_coarse,
    ran_unital,
    tensor_line,
    weak_order_of,
)
from ..poset import FinitePoset
from .core import Mutation, law

M = "strat-line"


def _irr(n_max: int, n_min: int = 0) -> list[Cograph]:
    return [c for n in range(n_min, n_max + 1) for c in enumerate_cographs(n, "irr")]


def _drop_element(p: FinitePoset, mut: Mutation) -> FinitePoset:
    idx = mut.drop(tuple(range(len(p))))
    els = tuple(p.elements[i] for i in idx)
    leq = tuple(tuple(p.leq[i][j] for j in idx) for i in idx)
    return FinitePoset(els, leq)


@law("LINE-L-ORACLE", M, "The isolability line: the face poset of separated configurations on the real line is the poset of separating weak orders", mutable=True)
def line_l_oracle(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    reps = _irr(b["n"])
    victim = mut.target([c for c in reps if c.n >= 1]) if mut else None
    for lam in reps:
        checked += 1
        lp = line_poset(lam)
        if lam == victim:
            lp = _drop_element(lp, mut)  # type: ignore[arg-type]
        oracle = face_poset_oracle(lam, 1)
        if not lp.same_as(oracle):
            return CheckReport(False, checked, {"lambda": lam, "line": len(lp), "oracle": len(oracle)})
    return CheckReport(True, checked)


@law("LINE-TENSOR-ORACLE", M, "The isolability line: the face poset of separated configurations in n-space is the n-th tensor power of the line")
def line_tensor_oracle(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for n in range(1, b["dim"] + 1):
        for lam in _irr(b["n"]):
            checked += 1
            t = tensor_line(n, lam)
            o = face_poset_oracle(lam, n)
            if not t.same_as(o):
                return CheckReport(False, checked, {"lambda": lam, "dim": n, "tensor": len(t), "oracle": len(o)})
    return CheckReport(True, checked)


@law("LINE-TENSOR-PAD", M, "The isolability line: padding with the coarse order embeds each tensor power of the line in the next")
def line_tensor_pad(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for n in range(1, b["dim"] + 1):
        # the top power grows like 13^n on three vertices, so it gets a smaller bound
        for lam in _irr(b["n"] if n == 1 else b["n_high"]):
            checked += 1
            small, big = tensor_line(n, lam), tensor_line(n + 1, lam)
            if not small.is_order_embedding(big, lambda t, v=lam.n: pad_coarse(t, v)):
                return CheckReport(False, checked, {"lambda": lam, "dim": n})
    return CheckReport(True, checked)


@law("LINE-ENV-LINE", M, "The isolability line: the envelope of oriented apartness relations is the line")
def line_env_line(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for lam in _irr(b["n"]):
        checked += 1
        env = envelope(OrientedApartnessFamily(), lam)
        lp = line_poset(lam)
        image = [weak_order_of(x) for _, x in env.elements]
        if sorted(image, key=str) != sorted(lp.elements, key=str) or len(set(image)) != len(image):
            return CheckReport(False, checked, {"lambda": lam, "reason": "not a bijection"})
        if not env.is_order_embedding(lp, lambda p: weak_order_of(p[1])):
            return CheckReport(False, checked, {"lambda": lam, "reason": "order differs"})
    return CheckReport(True, checked)


@law("LINE-ENV-K", M, "Para-isolability and envelopes: the envelope of the terminal family is the canonical isolability poset")
def line_env_k(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for lam in _irr(b["n"]):
        checked += 1
        env = envelope(TrivialFamily(), lam)
        k = K_poset(lam)
        if not env.is_order_embedding(k, lambda p: p[0]) or len(env) != len(k):
            return CheckReport(False, checked, {"lambda": lam})
    return CheckReport(True, checked)


@law("LINE-RAN-HOM", M, "Ran spaces: the unital Ran category of the line is the category of finite ordinals; hom-sets count monotone maps")
def line_ran_hom(b: dict, mut: Mutation | None) -> CheckReport:
    cat = ran_unital(LineFamily(), b["n"])
    counts = cat.hom_counts()
    checked = 0
    per_n: dict[int, int] = {}
    for n, _ in cat.objects:
        per_n[n] = per_n.get(n, 0) + 1
    for n, k in per_n.items():
        checked += 1
        if k != len(list(permutations(range(n)))):
            return CheckReport(False, checked, {"objects_over": n, "count": k})
    for i, (n, x) in enumerate(cat.objects):
        for j, (m, y) in enumerate(cat.objects):
            checked += 1
            if counts[i][j] != monotone_count(n, m):
                return CheckReport(False, checked, {"from": (n, str(x)), "to": (m, str(y)), "count": counts[i][j], "monotone": monotone_count(n, m)})
    return CheckReport(True, checked)


@law("LINE-RAN-SK2", M, "Ran spaces: the unital Ran category only depends on the 2-skeleton")
def line_ran_sk2(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for k in range(b["x"] + 1):
        obj = PointIsolation(list(range(1, k + 1)))
        full = ran_unital(DiscreteFamily(obj), b["n"])
        sk = ran_unital(DiscreteFamily(skeleton(2, obj)), b["n"])
        checked += 1
        if full.objects != sk.objects or full.hom_counts() != sk.hom_counts():
            return CheckReport(False, checked, {"points": k, "reason": "objects or hom-sets differ"})
        checked += 1
        if full.composition_table() != sk.composition_table():
            return CheckReport(False, checked, {"points": k, "reason": "composition differs"})
    return CheckReport(True, checked)


@law("LINE-RAN-ASSOC", M, "Ran spaces: composition of spans in the truncated unital Ran category is closed, unital and associative")
def line_ran_assoc(b: dict, mut: Mutation | None) -> CheckReport:
    fams = [("line", LineFamily())] + [
        (f"points{k}", DiscreteFamily(PointIsolation(list(range(1, k + 1))))) for k in range(b["x"] + 1)
    ]
    checked = 0
    for name, fam in fams:
        cat = ran_unital(fam, b["n"])
        for check in (cat.check_closed, cat.check_unital, cat.check_associative):
            checked += 1
            bad = check()
            if bad is not None:
                return CheckReport(False, checked, {"family": name, "check": check.__name__, "witness": bad})
    return CheckReport(True, checked)
