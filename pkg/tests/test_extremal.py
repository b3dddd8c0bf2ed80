import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from facetray import (CycleSubgraph, Graph, GramRep, PreconditionError,
                      all_cut_vectors, certify_frip_k5free, chordless_cycles,
                      complete_bipartite, complete_graph, cycle_graph,
                      delta_gram, delta_matrix, delta_max_gram, edge_matrix,
                      embed, extremal_rank_set_series_parallel,
                      frame_space_rank, gram, is_extremal, is_psd,
                      path_graph, polar_point, rank, respects_pattern,
                      sparsity_order_bounds, symmat)

from _data import (PARACHUTE_GRAPH, SEVEN_RANK3_GRAM, SEVEN_RANK3_GRAPH,
                   SEVEN_RANK3_INEQ, SEVEN_RANK3_MATRIX)


def test_edge_matrix_printed_forms():
    c4 = cycle_graph(4)
    plus = edge_matrix(c4, (1, 2), 1)
    assert plus.matrix == symmat([[1, 1, 0, 0], [1, 1, 0, 0],
                                  [0, 0, 0, 0], [0, 0, 0, 0]])
    minus = edge_matrix(c4, (1, 2), -1)
    assert minus.matrix == symmat([[1, -1, 0, 0], [-1, 1, 0, 0],
                                   [0, 0, 0, 0], [0, 0, 0, 0]])
    for cert in (plus, minus):
        assert cert.rank == 1 and cert.frame_rank == 0 == cert.target
        assert cert.extremal and cert.sign == 1
        assert cert.facet.b == 1
    with pytest.raises(PreconditionError):
        edge_matrix(c4, (1, 3), 1)
    with pytest.raises(PreconditionError):
        edge_matrix(c4, (1, 2), 2)


def test_delta_max_gram_small_cases():
    rep = delta_max_gram(4, 1)
    assert rep.vectors == ((0, 1), (1, -1), (1, 0), (1, 1))

    rep3 = delta_max_gram(3, 1)
    assert rep3.vectors == ((1,), (1,), (1,))
    assert gram(rep3.vectors) == symmat([[1, 1, 1], [1, 1, 1], [1, 1, 1]])

    rep5 = delta_max_gram(5, 1)
    m5 = gram(rep5.vectors)
    assert rank(m5.entries) == 3
    for i, j in cycle_graph(5).nonedges:
        assert m5.entry(i, j) == 0

    with pytest.raises(PreconditionError):
        delta_max_gram(5, 2)  # odd p is anchored at 1
    with pytest.raises(PreconditionError):
        delta_max_gram(2, 1)
    # even p admits any anchor; the negative edge follows it
    for i in range(1, 5):
        m = gram(delta_max_gram(4, i).vectors)
        s, t = i, i % 4 + 1
        assert m.entry(s, t) == -1


def test_delta_gram_relations():
    assert delta_gram(4, {2, 3, 4}) == delta_max_gram(4, 1)
    u = delta_max_gram(4, 1).vectors
    w = delta_gram(4, {2}).vectors
    assert w == (u[0], u[1], u[2], tuple(-x for x in u[3]))
    for p in (3, 5, 7):
        assert delta_gram(p, set(range(1, p + 1))) == delta_max_gram(p, 1)
    with pytest.raises(PreconditionError):
        delta_gram(4, {2, 3})
    with pytest.raises(PreconditionError):
        delta_gram(4, {5})


def test_delta_matrix_golden():
    assert delta_matrix(4, {2, 3, 4}) == symmat([
        [1, -1, 0, 1], [-1, 2, 1, 0], [0, 1, 1, 1], [1, 0, 1, 2]])
    assert delta_matrix(4, {2}) == symmat([
        [1, -1, 0, -1], [-1, 2, 1, 0], [0, 1, 1, -1], [-1, 0, -1, 2]])
    for size in (1, 3):
        for f in itertools.combinations(range(1, 5), size):
            assert delta_matrix(4, f).trace() == 6


def test_embed_identity_and_pendant():
    c4 = cycle_graph(4)
    cyc = CycleSubgraph((1, 2, 3, 4))
    rep = delta_gram(4, {2})
    assert embed(c4, cyc, rep).vectors == rep.vectors

    pendant = Graph(5, c4.edges + ((4, 5),))
    padded = embed(pendant, cyc, rep)
    assert padded.vectors[4] == (0, 0)
    m = gram(padded.vectors)
    assert m.p == 5 and rank(m.entries) == 2
    assert all(m.entry(5, t) == 0 for t in range(1, 5))


def test_embed_into_k33_gives_extremal_rank2():
    k33 = complete_bipartite(3, 3)
    cyc = chordless_cycles(k33)[0]
    rep = embed(k33, cyc, delta_gram(4, {1, 2, 3}))
    m = gram(rep.vectors)
    assert is_psd(m) and rank(m.entries) == 2
    assert respects_pattern(m, k33)
    assert is_extremal(k33, m)


def test_embed_rejects_cycles_with_chords():
    k4 = complete_graph(4)
    with pytest.raises(PreconditionError, match="chordless"):
        embed(k4, CycleSubgraph((1, 2, 3, 4)), delta_gram(4, {2}))


def test_frame_space_rank_examples():
    c4 = cycle_graph(4)
    rep = GramRep(c4, ((1,), (1,), (0,), (0,)))
    assert frame_space_rank(rep) == 0
    for f in ({2}, {1, 2, 3}, {4}):
        assert frame_space_rank(delta_gram(4, f)) == 2
    assert frame_space_rank(GramRep(SEVEN_RANK3_GRAPH, SEVEN_RANK3_GRAM)) == 5


def test_gramrep_validation():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError, match="nonedge"):
        GramRep(c4, ((1,), (1,), (1,), (1,)))
    with pytest.raises(ValueError, match="span"):
        GramRep(c4, ((1, 0), (1, 0), (0, 0), (0, 0)))


def test_is_extremal_examples():
    c4 = cycle_graph(4)
    assert is_extremal(c4, delta_matrix(4, {2}))
    x12 = edge_matrix(c4, (1, 2), 1).matrix
    x23 = edge_matrix(c4, (2, 3), 1).matrix
    assert not is_extremal(c4, x12 + x23)
    assert is_extremal(SEVEN_RANK3_GRAPH, SEVEN_RANK3_MATRIX)
    with pytest.raises(PreconditionError):
        is_extremal(c4, symmat([[1, 0, 0, 0], [0, 0, 0, 0],
                                [0, 0, 0, 0], [0, 0, 0, -1]]))
    with pytest.raises(PreconditionError):  # pattern violation on nonedge {1,3}
        is_extremal(c4, symmat([[1, 0, 1, 0], [0, 1, 0, 0],
                                [1, 0, 1, 0], [0, 0, 0, 1]]))


def test_seven_vertex_matrix_matches_its_facet():
    for a, (i, j) in zip(SEVEN_RANK3_INEQ.alpha, SEVEN_RANK3_GRAPH.edges):
        assert SEVEN_RANK3_MATRIX.entry(i, j) == -a
    assert rank(SEVEN_RANK3_MATRIX.entries) == 3


def test_matrix_and_gram_route_agree():
    rng = random.Random(17)
    for _ in range(15):
        p = rng.choice((4, 5, 6))
        f = _random_odd_subset(rng, p)
        rep = delta_gram(p, f)
        host = rep.host
        m = gram(rep.vectors)
        k = rep.k
        fr = frame_space_rank(rep)
        assert fr <= min(len(host.nonedges), k * (k + 1) // 2)
        assert (fr == k * (k + 1) // 2 - 1) == is_extremal(host, m)


def _random_odd_subset(rng, p):
    while True:
        f = {v for v in range(1, p + 1) if rng.random() < 0.5}
        if len(f) % 2 == 1:
            return f


def test_certify_c4():
    certs = certify_frip_k5free(cycle_graph(4))
    assert len(certs) == 16
    assert Counter(c.rank for c in certs) == {1: 8, 2: 8}
    assert all(c.extremal for c in certs)


def test_certify_tree_has_only_rank_one():
    tree = Graph(5, ((1, 2), (2, 3), (2, 4), (4, 5)))
    certs = certify_frip_k5free(tree)
    assert len(certs) == 2 * len(tree.edges)
    assert all(c.rank == 1 and c.extremal for c in certs)


def test_certify_k33():
    certs = certify_frip_k5free(complete_bipartite(3, 3))
    assert Counter(c.rank for c in certs) == {1: 18, 2: 72}


def test_certificate_rank_matches_facet_constant():
    for g in (cycle_graph(5), complete_graph(4), complete_bipartite(3, 3)):
        for cert in certify_frip_k5free(g):
            assert Fraction(cert.rank) == cert.facet.b
            assert cert.target == cert.rank * (cert.rank + 1) // 2 - 1


def test_extremal_rank_set_series_parallel():
    assert extremal_rank_set_series_parallel(cycle_graph(5)).ranks == {1, 3}
    assert extremal_rank_set_series_parallel(cycle_graph(5)).order == 3
    assert extremal_rank_set_series_parallel(path_graph(6)) == (frozenset({1}), 1)
    assert extremal_rank_set_series_parallel(cycle_graph(4)).ranks == {1, 2}
    with pytest.raises(PreconditionError, match="K_4"):
        extremal_rank_set_series_parallel(complete_graph(4))


def test_sparsity_order_bounds():
    assert sparsity_order_bounds(cycle_graph(7)) == (5, 5)
    assert sparsity_order_bounds(path_graph(5)) == (1, 1)
    assert sparsity_order_bounds(complete_graph(4)) == (1, 1)
    assert sparsity_order_bounds(complete_graph(2)) == (1, 1)
    lower, upper = sparsity_order_bounds(PARACHUTE_GRAPH)
    assert upper == 3  # 9 frame matrices would be needed for rank 4, only 7 exist
    assert lower <= upper


def test_polar_point_values_on_c4():
    # On C_4 the polar is symmetric under negating all edges (that flip is
    # itself a switching), so these are the classical sixteen points up to
    # that symmetry: the box facets give unit vectors, the cycle facets
    # give (1/3) * (+-1, ..., +-1) with an odd number of minus signs.
    c4 = cycle_graph(4)
    x12_minus = edge_matrix(c4, (1, 2), -1).matrix
    point = dict(zip(c4.edges, polar_point(x12_minus, c4)))
    assert point == {(1, 2): 1, (1, 4): 0, (2, 3): 0, (3, 4): 0}
    x12_plus = edge_matrix(c4, (1, 2), 1).matrix
    point = dict(zip(c4.edges, polar_point(x12_plus, c4)))
    assert point == {(1, 2): -1, (1, 4): 0, (2, 3): 0, (3, 4): 0}

    # edge entries of the cycle construction are -v^F, so its polar point
    # lies on the ray of the facet normal v^F, at two thirds of v^F/(m-2)
    third = Fraction(1, 3)
    y = dict(zip(c4.edges, polar_point(delta_matrix(4, {2}), c4)))
    assert y == {(1, 2): third, (2, 3): -third, (3, 4): third, (1, 4): third}

    y = dict(zip(c4.edges, polar_point(delta_matrix(4, {2, 3, 4}), c4)))
    assert y == {(1, 2): third, (2, 3): -third, (3, 4): -third, (1, 4): -third}

    zero = symmat([[0] * 4 for _ in range(4)])
    with pytest.raises(PreconditionError, match="trace"):
        polar_point(zero, c4)


def test_polar_points_pair_to_at_most_one_with_cut_vectors():
    g = cycle_graph(5)
    for cert in certify_frip_k5free(g):
        y = polar_point(cert.matrix, g)
        for cv in all_cut_vectors(g):
            assert sum(a * x for a, x in zip(y, cv.coords)) <= 1
