import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from isola.cograph import (
    Cograph,
    CographError,
    classify,
    clique,
    cocomponents,
    codepth,
    complete,
    components,
    copaw,
    csum,
    depth,
    dsum,
    indexed_sum,
    is_cograph,
    is_cograph_p4,
    neg,
    paw,
    sum_cographs,
    trivial,
    vertex_depth,
)
from strategies import cographs


def _from_rel(g):
    n, pairs = g
    return Cograph.from_edges(n, [(a, b) for a, b in pairs if a != b], [a for a, b in pairs if a == b], check=False)


P4 = [(0, 1), (1, 2), (2, 3)]


def test_path_on_four_vertices_is_rejected():
    g = Cograph.from_edges(4, P4, check=False)
    assert not is_cograph(g)
    assert not is_cograph_p4(g)
    with pytest.raises(CographError, match="induced path"):
        Cograph.from_edges(4, P4)


def test_loops_do_not_rescue_a_path():
    g = Cograph.from_edges(4, P4, loops=[0, 1, 2, 3], check=False)
    assert not is_cograph(g)


@pytest.mark.parametrize("n", range(5))
def test_recognisers_agree_with_brute_force(n):
    for rel in oracles.all_relations(n):
        g = _from_rel(rel)
        expected = oracles.is_cograph(rel)
        assert is_cograph(g) == expected
        assert is_cograph_p4(g) == expected


def test_matrix_input_must_be_symmetric():
    with pytest.raises(CographError):
        Cograph.from_matrix([[0, 1], [0, 0]])


def test_from_edges_range_checked():
    with pytest.raises(CographError):
        Cograph.from_edges(2, [(0, 2)])
    with pytest.raises(CographError):
        Cograph.from_edges(2, loops=[5])


def test_small_families():
    assert trivial(3).edges() == [] and trivial(3).loops() == []
    assert clique(3).edges() == [(0, 1), (0, 2), (1, 2)] and clique(3).loops() == []
    assert complete(2).loops() == [0, 1]
    assert neg(trivial(2)) == complete(2)


@given(cographs())
def test_negation_is_an_involution(c):
    assert neg(neg(c)) == c
    assert is_cograph(neg(c))


@given(cographs(max_n=4), cographs(max_n=4))
def test_negation_swaps_the_sums(a, b):
    assert neg(csum(a, b)) == dsum(neg(a), neg(b))
    assert neg(dsum(a, b)) == csum(neg(a), neg(b))


@given(cographs(max_n=3), cographs(max_n=3), cographs(max_n=3))
def test_sums_are_associative(a, b, c):
    for op in (csum, dsum):
        assert op(op(a, b), c) == op(a, op(b, c))


def test_sum_cographs_folds():
    parts = [trivial(1)] * 3
    assert sum_cographs("csum", parts) == clique(3)
    assert sum_cographs("dsum", parts) == trivial(3)
    assert sum_cographs("dsum", []) == Cograph(0, ())
    with pytest.raises(CographError):
        sum_cographs("tensor", parts)


def test_indexed_sum_over_two_related_points():
    lam = complete(2)
    out = indexed_sum(lam, [trivial(2), trivial(1)])
    # the two parts are fully joined to each other and unrelated inside
    assert out.edges() == [(0, 2), (1, 2)]
    assert out.loops() == []
    with pytest.raises(CographError):
        indexed_sum(trivial(2), [trivial(1), trivial(1)])


@given(cographs(min_n=1))
def test_connected_or_coconnected(c):
    assert len(components(c)) == 1 or len(cocomponents(c)) == 1


@pytest.mark.parametrize("k", range(1, 7))
def test_paw_depths(k):
    assert depth(paw(k)) == k
    assert vertex_depth(paw(k), 0) == k


@pytest.mark.parametrize("k", range(2, 7))
def test_copaw_depths(k):
    assert depth(copaw(k)) == k - 1


def test_single_vertex_copaw_has_depth_one():
    # one vertex already embeds the first paw, so the k-1 pattern stops at k = 2
    assert copaw(1) == trivial(1)
    assert depth(copaw(1)) == 1


def test_paw3_shape():
    assert paw(3).edges() == [(0, 1)]


def test_empty_graph_depth():
    assert depth(Cograph(0, ())) == 0


@given(cographs())
def test_codepth_is_depth_of_negation(c):
    assert codepth(c) == depth(neg(c))


def test_classify_apartness_and_equivalence():
    k = classify(clique(3))
    assert k.irreflexive and k.apartness and not k.equivalence and k.connected
    e = classify(complete(3))
    assert e.reflexive and e.equivalence and not e.apartness
    # two disjoint edges: not an apartness, its complement is not transitive
    two_edges = Cograph.from_edges(4, [(0, 1), (2, 3)])
    assert not classify(two_edges).apartness
    assert classify(two_edges).depth == 3


@settings(max_examples=50)
@given(cographs(max_n=5), st.data())
def test_depth_invariant_under_relabelling(c, data):
    perm = data.draw(st.permutations(range(c.n)))
    assert depth(c.relabel(perm)) == depth(c)
    assert classify(c.relabel(perm)) == classify(c)
