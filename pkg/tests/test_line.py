from itertools import product

import pytest

import oracles
from isola.cograph import Cograph, CographError, clique, complete, paw, trivial
from isola.cotree import enumerate_cographs
from isola.isolability import PointIsolation, supersets
from isola.line import (
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
from isola.poset import FinitePoset, PosetError, WeakOrder, coarse, weak_orders
from isola.plotting import hasse_png


def test_line_on_three_unrelated_points_has_13_strata():
    assert len(line_poset(trivial(3))) == 13


@pytest.mark.parametrize("n", range(5))
def test_line_sizes_match_oracle(n):
    for lam in enumerate_cographs(n, "irr"):
        assert len(line_poset(lam)) == oracles.line_size(n, lam.edges())


def test_line_on_a_clique_is_discrete():
    p = line_poset(clique(3))
    assert len(p) == 6
    assert p.covers() == []


def test_coarse_order_is_the_unique_minimum_when_nothing_is_related():
    p = line_poset(trivial(3))
    bottom = p.index(coarse(3))
    assert all(p.leq[bottom][j] for j in range(len(p)))


def _tuples(n, lam):
    ws = weak_orders(lam.n)
    return sum(1 for t in product(ws, repeat=n) if all(any(w.separates(a, b) for w in t) for a, b in lam.edges()))


@pytest.mark.parametrize("lam", [trivial(2), clique(2), paw(3)])
def test_tensor_square_size(lam):
    assert len(tensor_line(2, lam)) == _tuples(2, lam)


def test_tensor_square_of_an_edge():
    # pairs of weak orders of two points separating them: 9 minus the one coarse pair
    assert len(tensor_line(2, clique(2))) == 8


def test_oracle_agrees_on_small_cases():
    for lam in (trivial(2), clique(2), paw(3)):
        assert line_poset(lam).same_as(face_poset_oracle(lam, 1))
    assert tensor_line(2, clique(2)).same_as(face_poset_oracle(clique(2), 2))


def test_oracle_limits():
    with pytest.raises(CographError):
        face_poset_oracle(trivial(5))
    with pytest.raises(CographError):
        tensor_line(0, trivial(1))


def test_line_needs_loop_free_graph():
    with pytest.raises(CographError):
        line_poset(complete(1))


def test_padding_embeds():
    lam = clique(2)
    small, big = tensor_line(1, lam), tensor_line(2, lam)
    assert small.is_order_embedding(big, lambda t: pad_coarse(t, 2))
    assert pad_coarse(WeakOrder(((0,), (1,))), 2) == (WeakOrder(((0,), (1,))), coarse(2))


def test_k_poset_is_supersets_by_inclusion():
    for lam in (trivial(3), paw(3)):
        k = K_poset(lam)
        assert len(k) == len(supersets(lam))
        assert k.elements[0] == lam


def test_envelopes():
    env = envelope(OrientedApartnessFamily(), trivial(2))
    assert sorted(str(weak_order_of(x)) for _, x in env.elements) == ["1<2", "2<1", "{1,2}"]
    assert len(envelope(TrivialFamily(), trivial(3))) == len(K_poset(trivial(3)))


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("n", range(5))
def test_monotone_count_matches_listing(m, n):
    assert monotone_count(n, m) == oracles.monotone_maps(m, n)
    if n:
        assert monotone_count(n, m) == oracles.stars_and_bars(n, m)


def test_ran_category_of_the_line_counts_monotone_maps():
    cat = ran_unital(LineFamily(), 3)
    counts = cat.hom_counts()
    for i, (n, _) in enumerate(cat.objects):
        for j, (m, _) in enumerate(cat.objects):
            assert counts[i][j] == monotone_count(n, m)
    assert [n for n, _ in cat.objects] == [0, 1, 2, 2, 3, 3, 3, 3, 3, 3]


def test_ran_category_of_points_is_a_category():
    cat = ran_unital(DiscreteFamily(PointIsolation([1, 2])), 2)
    assert cat.check_closed() is None
    assert cat.check_unital() is None
    assert cat.check_associative() is None


def test_ran_size_limit():
    with pytest.raises(CographError):
        ran_unital(LineFamily(), 10)


def test_weak_order_basics():
    w = WeakOrder.from_ranks([2, 0, 2])
    assert str(w) == "2<{1,3}"
    assert w.before(1, 0) and not w.separates(0, 2)
    assert w.pullback((1, 0)) == WeakOrder(((0,), (1,)))
    assert coarse(3).refines_to(w)
    with pytest.raises(PosetError):
        WeakOrder(((0,), (0,)))


def test_poset_validation():
    with pytest.raises(PosetError):
        FinitePoset(("a", "b"), ((True, True), (True, True)))
    with pytest.raises(PosetError):
        FinitePoset(("a",), ((False,),))
    chain = FinitePoset.generated("abc", [(0, 1), (1, 2)])
    assert chain.le("a", "c")
    assert chain.covers() == [(0, 1), (1, 2)]


def test_poset_isomorphism():
    chain = FinitePoset.generated("abc", [(0, 1), (1, 2)])
    other = FinitePoset.generated("xyz", [(2, 1), (1, 0)])
    assert chain.isomorphism(other) == {0: 2, 1: 1, 2: 0}
    assert not chain.is_isomorphic(FinitePoset.generated("xyz", [(0, 1)]))


def test_hasse_png(tmp_path):
    out = hasse_png(line_poset(trivial(2)), tmp_path / "l.png", str, "L")
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
