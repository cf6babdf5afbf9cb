import pytest

from multilie.core import BoundExceeded, weak_compositions
from multilie.poset import (
    TOP, Block, WeightedPartition, build_interval, build_poset, check_uniformity, lower_interval_map,
    merged_pair, mobius_interval, upper_ideal_map, whitney_direct, wp_covers, wp_leq,
)
from multilie.symfunc.identities import whitney_formula
from multilie.symfunc.poly import Poly
from multilie.trees import enumerate_lyn


def wp(*blocks):
    return WeightedPartition(Block(labels, weight) for labels, weight in blocks)


BOTTOM3 = wp(((1,), ()), ((2,), ()), ((3,), ()))


def test_leq_examples():
    assert wp_leq(BOTTOM3, wp(((1, 2, 3), (1, 1))))
    assert not wp_leq(wp(((1, 2), (0, 1)), ((3,), ())), wp(((1, 2, 3), (2,))))
    assert wp_leq(wp(((1, 2), (1,)), ((3,), ())), wp(((1, 2, 3), (1, 1))))
    assert wp_leq(BOTTOM3, TOP) and not wp_leq(TOP, BOTTOM3)


def test_cover_examples():
    assert len(wp_covers(BOTTOM3, 3)) == 9
    covers = wp_covers(wp(((1, 2), (1,)), ((3,), ())), 2)
    assert set(covers) == {wp(((1, 2, 3), (2,))), wp(((1, 2, 3), (1, 1)))}
    assert wp_covers(wp(((1, 2, 3), (2,))), 3) == []


def test_block_rejects_overweight_and_formats():
    with pytest.raises(ValueError):
        Block((1, 2), (1, 1))
    assert str(wp(((1, 3), (1, 0)), ((2,), ()))) == "13:(1)|2:()"
    assert str(Block((2, 11), (0, 1))) == "2,11:(0,1)"


def test_merged_pair():
    A, B, r = merged_pair(BOTTOM3, wp(((1, 3), (0, 1)), ((2,), ())))
    assert (A.labels, B.labels, r) == ((1,), (3,), 2)
    with pytest.raises(ValueError):
        merged_pair(BOTTOM3, wp(((1, 2, 3), (1, 1))))


@pytest.mark.parametrize("n,mu,size", [(3, (1, 1), 8), (3, (2,), 5), (2, (1,), 2)])
def test_interval_sizes(n, mu, size):
    assert len(build_interval(n, mu)) == size


def test_interval_rejects_bad_weight():
    with pytest.raises(ValueError):
        build_interval(3, (1,))


@pytest.mark.parametrize("n,mu,value", [(3, (1, 1), 5), (2, (1,), -1), (3, (2,), 2), (4, (3,), -6)])
def test_mobius_examples(n, mu, value):
    assert mobius_interval(build_interval(n, mu)) == value


def test_whole_poset_figure_size():
    P = build_poset(3, 3)
    assert len(P) == 16
    assert len(P.maximal) == len(weak_compositions(2, 3)) == 6
    assert len(P.covers[P.bottom]) == 9


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_mobius_counts_lyndon_trees(n, k):
    for mu in weak_compositions(n - 1, k):
        assert mobius_interval(build_interval(n, mu)) == (-1) ** (n - 1) * len(enumerate_lyn(mu))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_mobius_recursion_identity(n, k):
    """delta_{n,1} = sum_mu x^mu sum_{alpha <= [n]^mu} mobius(alpha, [n]^mu), as polynomials."""
    P = build_poset(n, k)
    total = Poly.zero(k)
    for top in P.maximal:
        values = P.mobius_to(top)
        s = sum(values[a] for a in range(len(P)) if P.leq(a, top))
        total = total + Poly.monomial(k, P.elements[top].weight().padded(k), s)
    assert total == (1 if n == 1 else 0)


def _transitive_reduction(P, leq):
    ids = range(len(P))
    return {(a, b) for a in ids for b in ids
            if a != b and leq(a, b) and not any(c not in (a, b) and leq(a, c) and leq(c, b) for c in ids)}


@pytest.mark.parametrize("n,mu", [(3, (1, 1)), (4, (2, 1)), (4, (0, 1, 2))])
def test_leq_is_partial_order_with_covers_as_reduction(n, mu):
    P = build_interval(n, mu)
    E = P.elements
    leq = lambda a, b: wp_leq(E[a], E[b])
    ids = range(len(P))
    for a in ids:
        assert leq(a, a)
        for b in ids:
            if a != b and leq(a, b):
                assert not leq(b, a)
                assert P.leq(a, b)
                for c in ids:
                    if leq(b, c):
                        assert leq(a, c)
    assert _transitive_reduction(P, leq) == set(P.hasse_edges())


def test_hasse_diagram_is_acyclic_and_ranked():
    P = build_poset(4, 2, top=True)
    for a, b in P.hasse_edges():
        assert P.rank[b] == P.rank[a] + 1
    assert P.elements[-1] is TOP


def test_arbitrary_ground_set():
    P = build_interval(3, (1, 1), ground=(4, 7, 9))
    Q = build_interval(3, (1, 1))
    assert len(P) == len(Q) and mobius_interval(P) == mobius_interval(Q)
    assert P.elements[0] == wp(((4,), ()), ((7,), ()), ((9,), ()))


def test_interval_maps_examples():
    alpha = wp(((1, 3), (1,)), ((2,), ()), ((4,), ()))
    beta = wp(((1, 2, 3), (1, 1)), ((4,), ()))
    assert upper_ideal_map(alpha, beta) == wp(((1, 2), (0, 1)), ((3,), ()))
    parts = lower_interval_map(alpha, WeightedPartition.bottom((1, 2, 3, 4)))
    assert [str(p) for p in parts] == ["1:()|2:()", "1:()", "1:()"]


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3)])
def test_uniformity(n, k):
    assert check_uniformity(n, k)


def test_bounds_enforced():
    with pytest.raises(BoundExceeded):
        whitney_direct(7, 1)
    with pytest.raises(BoundExceeded):
        check_uniformity(6, 1)


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_whitney_direct_matches_formula(n, k):
    w, W = whitney_direct(n, k)
    for r in range(n):
        assert (w[r], W[r]) == whitney_formula(n, r, k)


def test_whitney_examples():
    w, W = whitney_direct(3, 2)
    x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    assert w[2] == 2 * x1 ** 2 + 5 * x1 * x2 + 2 * x2 ** 2
    assert W[1] == 3 * (x1 + x2)
    assert w[0] == W[0] == 1
