"""Laws about factorization stacks, groupoids and the finite Hecke construction."""

from __future__ import annotations

from itertools import product

from ..cograph import Cograph
from ..cotree import enumerate_cographs
from ..factorization import (
    BundleData,
    DiagonalFamily,
    DroppedFamily,
    GrassmannianFamily,
    SubsetFamily,
    _check_surjections,
    check_attached_functorial,
    check_factorization_groupoid,
    check_factorization_stack,
    check_pushpull,
    hecke,
)
from ..isolability import CheckReport, PointIsolation
from .core import Mutation, law

M = "factorization"


def _irr(n_max: int, n_min: int = 1) -> list[Cograph]:
    return [c for n in range(n_min, n_max + 1) for c in enumerate_cographs(n, "irr")]


def _bundles(x: int, fiber: int, *, min_x: int = 1) -> list[BundleData]:
    """Every bundle on ``1..k`` points (``k <= x``) with fibres of size ``1..fiber``."""
    out = []
    for k in range(min_x, x + 1):
        pts = tuple(range(1, k + 1))
        for sizes in product(range(1, fiber + 1), repeat=k):
            out.append(BundleData(pts, tuple(tuple("ab"[:s]) for s in sizes)))
    return out


def _fail(rep: CheckReport, checked: int, **ctx) -> CheckReport:
    w = rep.witness if isinstance(rep.witness, dict) else {"witness": rep.witness}
    return CheckReport(False, checked, {**ctx, **w})


@law("FAC-PUSHPULL", M, "The Grassmannian: sections over the ravioli space are pairs of global sections agreeing off the configuration")
def fac_pushpull(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for bd in _bundles(b["x"], b["fiber"]):
        for lam in _irr(b["n"], 0):
            rep = check_pushpull(bd, lam)
            checked += rep.checked
            if not rep.passed:
                return _fail(rep, checked, bundle=bd.fibers, **{"lambda": lam})
    return CheckReport(True, checked)


@law("FAC-HECKE-GROUPOID", M, "The Grassmannian: the Hecke construction is a factorization groupoid over the global sections", mutable=True)
def fac_hecke_groupoid(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    bundles = _bundles(b["x"], b["fiber"])
    victim = None
    if mut is not None:
        idx = mut.target(range(len(bundles)), key="bundle")
        lam = mut.target(_irr(b["n"]), key="lambda")
        victim = (idx, lam)
    for k, bd in enumerate(bundles):
        fam = hecke(bd)
        if victim is not None and victim[0] == k:
            lam = victim[1]
            gone = mut.target(fam.carrier(lam), key="element")  # type: ignore[union-attr]
            fam = DroppedFamily(fam, lam, gone)
        rep = check_factorization_groupoid(fam, bd.bun(), b["n"])
        checked += rep.checked
        if not rep.passed:
            return _fail(rep, checked, bundle=bd.fibers)
    return CheckReport(True, checked)


@law("FAC-REG-SURJ", M, "The Grassmannian: regularity of the point observers gives the surjection condition for the Hecke and Grassmannian families")
def fac_reg_surj(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for bd in _bundles(b["x"], b["fiber"]):
        fams = [("hecke", hecke(bd))] + [("grass", GrassmannianFamily(bd, P)) for P in bd.bun()]
        for name, fam in fams:
            rep = _check_surjections(fam, b["n"])
            checked += rep.checked
            if not rep.passed:
                return _fail(rep, checked, family=name, bundle=bd.fibers)
    return CheckReport(True, checked)


@law("FAC-ATT-FUNCTORIALITY", M, "Factorization stacks: families restrict functorially along attached maps")
def fac_att_functoriality(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for bd in _bundles(b["x"], b["fiber"]):
        pts = PointIsolation(bd.X)
        fams = [
            ("hecke", hecke(bd)),
            ("grass", GrassmannianFamily(bd, bd.bun()[0])),
            ("diagonal", DiagonalFamily(pts, bd.bun())),
        ]
        for name, fam in fams:
            rep = check_attached_functorial(fam, b["n"])
            checked += rep.checked
            if not rep.passed:
                return _fail(rep, checked, family=name, bundle=bd.fibers)
    return CheckReport(True, checked)


@law("FAC-GRASS", M, "The Grassmannian: the Grassmannian relative to a fixed bundle is a factorization stack")
def fac_grass(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for bd in _bundles(b["x"], b["fiber"]):
        for P in bd.bun():
            rep = check_factorization_stack(GrassmannianFamily(bd, P), b["n"])
            checked += rep.checked
            if not rep.passed:
                return _fail(rep, checked, bundle=bd.fibers, P=P)
    return CheckReport(True, checked)


@law("FAC-DIAGONAL", M, "Factorization stacks: the attached restriction of separated points, its subsets and its diagonal groupoid satisfy both conditions")
def fac_diagonal(b: dict, mut: Mutation | None) -> CheckReport:
    checked = 0
    for k in range(1, b["x"] + 1):
        pts = PointIsolation(list(range(1, k + 1)))
        U = list(range(b["u"]))
        checks = [
            ("points", check_factorization_stack(DiagonalFamily(pts), b["n"])),
            ("diagonal", check_factorization_groupoid(DiagonalFamily(pts, U), U, b["n"])),
        ]
        for r in range(k + 1):
            A = list(range(1, r + 1))
            checks.append((f"subset{r}", check_factorization_stack(SubsetFamily(pts, A), b["n"])))
        for name, rep in checks:
            checked += rep.checked
            if not rep.passed:
                return _fail(rep, checked, family=name, points=k)
    return CheckReport(True, checked)
