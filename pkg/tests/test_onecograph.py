from math import factorial

import pytest
from hypothesis import given

import oracles
from isola.cograph import CographError, clique, complete, csum, dsum, paw, trivial
from isola.cotree import enumerate_cographs
from isola.morphism import GraphMap, hom_enumerate
from isola.onecograph import (
    OneCograph,
    accretive_lifts,
    count_one_structures,
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
from strategies import cographs


@pytest.mark.parametrize("n", range(6))
def test_loop_free_counts_are_transitive_orientations(n):
    # comparability graphs of series-parallel orders are exactly the cographs
    for lam in enumerate_cographs(n, "irr"):
        expected = oracles.transitive_orientations(n, lam.edges())
        assert count_one_structures(lam) == expected
        assert len(one_structures(lam)) == expected


@pytest.mark.parametrize("n", range(5))
def test_complete_graph_has_factorial_many(n):
    assert len(one_structures_brute(clique(n))) == factorial(n)


def test_frozen_counts():
    assert [count_one_structures(c) for c in (trivial(3), paw(3), paw(4), clique(3))] == [1, 2, 4, 6]


@given(cographs(max_n=4))
def test_constructed_equals_brute(lam):
    assert one_structures(lam) == one_structures_brute(lam)
    for g in one_structures(lam):
        assert is_onecograph(g) and symmetrize(g) == lam


def test_lifts_along_a_loop_free_collapse_are_unique():
    # a loop-free collapse onto one unlooped point only exists from unrelated points
    m = GraphMap(trivial(2), trivial(1), (0, 0))
    (delta,) = one_structures(trivial(1))
    assert len(accretive_lifts(m, delta)) == 1


def test_lifts_fail_to_be_unique_with_loops():
    # collapsing two looped, related points: both orientations of the edge lie over the loop
    m = GraphMap(complete(2), complete(1), (0, 0))
    (delta,) = one_structures(complete(1))
    lifts = accretive_lifts(m, delta)
    assert len(lifts) == 2
    assert {tuple(g.dedges()) for g in lifts} == {((0, 1),), ((1, 0),)}


def test_lifts_need_an_accretive_map():
    m = GraphMap(trivial(2), clique(2), (0, 1))
    (delta, _) = one_structures(clique(2))
    with pytest.raises(CographError):
        accretive_lifts(m, delta)


def test_unique_lifts_over_all_small_accretive_maps():
    reps = [c for n in range(4) for c in enumerate_cographs(n, "irr")]
    for lam in reps:
        for mu in reps:
            for m in hom_enumerate(lam, mu):
                if not all(lam.related(a, b) == mu.related(m.f[a], m.f[b]) for a in range(lam.n) for b in range(lam.n)):
                    continue
                for delta in one_structures(mu):
                    assert len(accretive_lifts(m, delta)) == 1


def test_nonfunctorial_witness():
    gamma, sub, restricted = nonfunctorial_witness()
    assert is_onecograph(gamma)
    o = OneCograph.from_edges(3, restricted, check=False)
    assert symmetrize(o) == sub
    assert not is_onecograph(o)


def test_not_transitive_is_rejected():
    with pytest.raises(CographError):
        OneCograph.from_edges(3, [(0, 1), (1, 2)])


@given(cographs(max_n=4))
def test_opposite_is_an_involution(lam):
    for g in one_structures(lam):
        assert opposite(opposite(g)) == g
        assert symmetrize(opposite(g)) == lam


@given(cographs(max_n=3), cographs(max_n=3))
def test_sums_lie_over_sums(a, b):
    x, y = one_structures(a)[0], one_structures(b)[0]
    assert symmetrize(osum(x, y)) == csum(a, b)
    assert symmetrize(odsum(x, y)) == dsum(a, b)


def test_ordered_sum_points_one_way():
    p = directed_paw(1)
    assert osum(p, p).dedges() == [(0, 1)]
    assert odsum(p, p).dedges() == []


@pytest.mark.parametrize("k", range(1, 7))
def test_directed_paws(k):
    assert is_onecograph(directed_paw(k))
    assert symmetrize(directed_paw(k)) == paw(k)
