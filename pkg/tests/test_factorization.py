import pytest

import oracles
from isola.cograph import CographError, clique, csum, trivial
from isola.factorization import (
    BundleData,
    DiagonalFamily,
    DroppedFamily,
    GrassmannianFamily,
    ProductFamily,
    SubsetFamily,
    attached_maps,
    check_attached_functorial,
    check_factorization_groupoid,
    check_factorization_stack,
    check_pushpull,
    grassmannian,
    hecke,
    ravioli,
)
from isola.isolability import PointIsolation, SubsetIsolation
from isola.morphism import is_attached


def _bundle(k, fiber):
    return BundleData.constant(list(range(1, k + 1)), "abc"[:fiber])


def test_hecke_and_grassmannian_counts():
    bd = _bundle(2, 2)
    assert len(hecke(bd).carrier(trivial(1))) == 16
    assert len(grassmannian(bd, ("a", "a"), trivial(1))) == 4


@pytest.mark.parametrize("points,fiber,n", [(1, 2, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2), (2, 3, 1)])
def test_hecke_size_on_unrelated_points(points, fiber, n):
    assert len(hecke(_bundle(points, fiber)).carrier(trivial(n))) == oracles.hecke_size(points, fiber, n)


def test_hecke_on_an_edge_needs_distinct_points():
    bd = _bundle(2, 2)
    # two placements, each with both points modified: 4 * 4
    assert len(hecke(bd).carrier(clique(2))) == 2 * 16


def test_grassmannian_is_a_fibre_of_hecke():
    bd = _bundle(2, 2)
    P = ("a", "b")
    fam = hecke(bd)
    lam = trivial(1)
    grass = {(Z, e) for Z, e in GrassmannianFamily(bd, P).carrier(lam)}
    from_hecke = {(Z, e2) for Z, e1, e2 in fam.carrier(lam) if e1 == P}
    assert grass == from_hecke


def test_grassmannian_rejects_non_sections():
    with pytest.raises(CographError):
        GrassmannianFamily(_bundle(2, 2), ("z", "z"))


def test_bundle_validation():
    with pytest.raises(CographError):
        BundleData((1, 2), (("a",),))
    with pytest.raises(CographError):
        BundleData((1, 1), (("a",), ("a",)))
    assert _bundle(2, 2).bun() == [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]


def test_ravioli_doubles_the_configuration():
    rv = ravioli([1, 2, 3], trivial(1), (2,))
    assert len(rv) == 4
    assert rv.left[2] != rv.right[2] and rv.left[1] == rv.right[1]
    with pytest.raises(CographError):
        ravioli([1, 2], clique(2), (1, 1))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pushpull(k):
    for lam in (trivial(1), trivial(2), clique(2)):
        assert check_pushpull(_bundle(k, 2), lam).passed


def test_hecke_is_a_factorization_groupoid():
    bd = _bundle(2, 2)
    assert check_factorization_groupoid(hecke(bd), bd.bun(), 3).passed


def test_hecke_decomposition_matches_in_the_middle():
    bd = _bundle(2, 2)
    fam = hecke(bd)
    lam, mu = trivial(1), trivial(1)
    for y in fam.carrier(csum(lam, mu)):
        a, b = fam.decompose(lam, mu, y)
        assert fam.first(a) == fam.second(b)
        assert fam.first(b) == fam.first(y) and fam.second(a) == fam.second(y)


def test_dropping_one_element_breaks_the_groupoid():
    bd = _bundle(2, 2)
    fam = hecke(bd)
    victim = fam.carrier(trivial(1))[3]
    assert not check_factorization_groupoid(DroppedFamily(fam, trivial(1), victim), bd.bun(), 3).passed


def test_grassmannian_is_a_factorization_stack():
    bd = _bundle(2, 2)
    for P in bd.bun():
        assert check_factorization_stack(GrassmannianFamily(bd, P), 3).passed


def test_diagonal_and_subset_families():
    pts = PointIsolation([1, 2, 3])
    assert check_factorization_stack(DiagonalFamily(pts), 3).passed
    assert check_factorization_groupoid(DiagonalFamily(pts, ["u", "v"]), ["u", "v"], 3).passed
    assert check_factorization_stack(SubsetFamily(pts, [1, 3]), 3).passed
    with pytest.raises(CographError):
        SubsetFamily(pts, [4])


def test_product_family_fails_the_surjection_condition():
    fam = ProductFamily(PointIsolation([1, 2, 3]), "ab")
    rep = check_factorization_stack(fam, 3)
    assert not rep.passed
    w = rep.witness
    assert w["condition"] == 1 and w["s"] == (0, 0)
    # collapsing two points forgets one label: half of the expected pairs are reached
    assert w["sizes"] == [6, 12]


def test_families_restrict_functorially():
    bd = _bundle(2, 2)
    assert check_attached_functorial(hecke(bd), 3).passed
    assert check_attached_functorial(GrassmannianFamily(bd, bd.bun()[0]), 3).passed


def test_attached_maps_are_attached():
    maps = list(attached_maps(2))
    assert maps and all(is_attached(m) for m in maps)


def test_hecke_with_subset_observers():
    bd = _bundle(2, 2)
    fam = hecke(bd, SubsetIsolation([1, 2], nonempty=True))
    assert len(fam.carrier(trivial(1))) == 8 + 8 + 16
