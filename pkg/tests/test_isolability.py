import pytest
from hypothesis import given, settings

import oracles
from isola.cograph import Cograph, clique, complete, depth, paw, trivial
from isola.cotree import enumerate_cographs
from isola.morphism import GraphMap, hom_enumerate, incompatible
from isola.isolability import (
    IsolabilityError,
    PointIsolation,
    SubsetIsolation,
    check_additive,
    check_functorial,
    check_regular,
    coskeleton1,
    skeleton,
    supersets,
    tensor,
)
from strategies import cographs


@settings(max_examples=40)
@given(cographs(max_n=4, flavor="irr"))
def test_point_carrier_counts(lam):
    for k in range(4):
        assert len(PointIsolation(list(range(1, k + 1))).carrier(lam)) == oracles.point_configs(lam.n, lam.edges(), k)


@settings(max_examples=30)
@given(cographs(max_n=3, flavor="irr"))
def test_subset_carrier_counts(lam):
    for k in range(3):
        assert len(SubsetIsolation(list(range(1, k + 1))).carrier(lam)) == oracles.subset_configs(lam.n, lam.edges(), k)


def test_nonempty_subsets():
    obj = SubsetIsolation([1, 2], nonempty=True)
    assert len(obj.carrier(trivial(1))) == 3
    assert len(obj.carrier(clique(2))) == 2


def test_carriers_need_loop_free_input():
    with pytest.raises(IsolabilityError):
        PointIsolation([1]).carrier(complete(1))


def test_points_must_be_distinct():
    with pytest.raises(ValueError):
        PointIsolation([1, 1])


def test_restriction_is_precomposition():
    obj = PointIsolation([1, 2, 3])
    m = GraphMap(trivial(2), clique(3), (2, 0))
    assert obj.restrict(m, (1, 2, 3)) == (3, 1)


@pytest.mark.parametrize("k", range(4))
def test_point_isolation_is_a_regular_additive_functor(k):
    obj = PointIsolation(list(range(1, k + 1)))
    assert check_functorial(obj, 3).passed
    assert check_regular(obj, 3).passed
    assert check_additive(obj, 3).passed


def test_supersets():
    assert len(supersets(trivial(3))) == 8  # every graph on three vertices is a cograph
    assert all(depth(mu) <= 2 for mu in supersets(trivial(3), 2))
    assert supersets(clique(3)) == [clique(3)]


def test_point_isolation_is_two_skeletal():
    obj = PointIsolation([1, 2, 3])
    sk = skeleton(2, obj)
    for n in range(5):
        for lam in enumerate_cographs(n, "irr"):
            assert sk.carrier(lam) == obj.carrier(lam)


def test_one_skeleton_only_sees_edgeless_graphs():
    sk = skeleton(1, PointIsolation([1, 2, 3]))
    assert sk.carrier(clique(2)) == ()
    assert len(sk.carrier(trivial(2))) == 9


def test_subset_witness_excluded_by_two_skeleton():
    obj = SubsetIsolation([1, 2])
    cfg = ((1,), (2,), (1, 2))
    assert cfg in obj.carrier(paw(3))
    assert cfg not in skeleton(2, obj).carrier(paw(3))


def test_two_skeleton_of_subsets_is_neither_regular_nor_additive():
    sk = skeleton(2, SubsetIsolation([1, 2]))
    assert check_functorial(sk, 3).passed
    reg = check_regular(sk, 3)
    assert not reg.passed
    assert reg.witness["mismatch"] == [(((1,), (2,)), ((1,), (2,), (1, 2)))]
    add = check_additive(sk, 3)
    assert not add.passed
    # the full subset object has both properties
    assert check_regular(SubsetIsolation([1, 2]), 3).passed
    assert check_additive(SubsetIsolation([1, 2]), 3).passed


def test_coskeleton_ignores_edges():
    obj = PointIsolation([1, 2])
    assert len(coskeleton1(obj).carrier(clique(3))) == 8
    assert len(obj.carrier(clique(3))) == 0


def test_tensor_of_points_separates_by_either_factor():
    t = tensor(PointIsolation([1, 2]), PointIsolation([1, 2]))
    assert len(t.carrier(clique(2))) == 12
    assert len(t.carrier(clique(4))) == 24  # injective maps into four pairs


def _surjections(lam):
    for n in range(lam.n + 1):
        for mu in enumerate_cographs(n, "irr"):
            for m in hom_enumerate(lam, mu):
                if len(set(m.f)) == mu.n:
                    yield m


def _open_part(obj, lam_p, lam, maps):
    j = GraphMap(lam_p, lam, tuple(range(lam.n)))
    closed = {obj.restrict(i, c) for i in maps if incompatible(j, i) for c in obj.carrier(i.tgt)}
    return {obj.restrict(j, c) for c in obj.carrier(lam)}, set(obj.carrier(lam_p)) - closed


def test_dispersive_image_is_complement_of_incompatible_surjections():
    lam_p = Cograph.from_edges(3, [(1, 2)])
    lam = Cograph.from_edges(3, [(0, 2), (1, 2)])
    obj = PointIsolation([1, 2])
    opened, complement = _open_part(obj, lam_p, lam, list(_surjections(lam_p)))
    assert opened == complement


def test_accretive_surjections_alone_fall_short_on_a_source_with_edges():
    lam_p = Cograph.from_edges(3, [(1, 2)])
    lam = Cograph.from_edges(3, [(0, 2), (1, 2)])
    obj = PointIsolation([1, 2])
    accretive = [
        m
        for m in _surjections(lam_p)
        if all(lam_p.related(a, b) == m.tgt.related(m.f[a], m.f[b]) for a in range(3) for b in range(3))
    ]
    opened, complement = _open_part(obj, lam_p, lam, accretive)
    # vertices 1 and 3 have different neighbours, so no accretive map merges them
    assert opened < complement


def test_accretive_surjections_suffice_from_an_edgeless_source():
    lam_p = trivial(3)
    obj = PointIsolation([1, 2])
    accretive = [m for m in _surjections(lam_p) if not m.tgt.edges()]
    for lam in supersets(lam_p):
        opened, complement = _open_part(obj, lam_p, lam, accretive)
        assert opened == complement
