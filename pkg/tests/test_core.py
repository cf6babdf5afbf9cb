from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from multilie.core import (
    BoundExceeded, IntegerPartition, Permutation, SetPartition, WeakComposition, composition_add,
    composition_leq, count_compositions, descent_product_coefficients, double_factorial, partitions,
    rooted_trees_by_descents, set_partitions, weak_compositions, z_lambda,
)

from conftest import weak_composition_lists


def test_weak_compositions_examples():
    assert weak_compositions(2, 2) == [(2,), (1, 1), (0, 2)]
    assert len(weak_compositions(2, 3)) == 6
    assert weak_compositions(0, 5) == [()]


def test_composition_arithmetic_examples():
    assert composition_add((1, 0, 2), (0, 1)) == (1, 1, 2)
    assert not composition_leq((1, 1), (1, 0, 2))
    for mu in weak_compositions(3, 3):
        assert composition_leq((), mu)


def test_trailing_zeros_stripped_and_negatives_rejected():
    assert WeakComposition((1, 0, 0)) == WeakComposition((1,))
    assert hash(WeakComposition((0, 2, 0))) == hash(WeakComposition((0, 2)))
    assert repr(WeakComposition((1, 1))) == "(1,1)"
    with pytest.raises(ValueError):
        WeakComposition((1, -1))
    with pytest.raises(ValueError):
        WeakComposition.unit(0)


@pytest.mark.parametrize("total,k", [(t, k) for t in range(5) for k in range(1, 5)])
def test_weak_compositions_distinct_with_right_size(total, k):
    comps = weak_compositions(total, k)
    assert len(set(comps)) == len(comps) == count_compositions(total, k)
    assert all(c.size() == total and len(c) <= k for c in comps)


@given(weak_composition_lists(), weak_composition_lists(), weak_composition_lists())
def test_add_commutative_associative(a, b, c):
    assert composition_add(a, b) == composition_add(b, a)
    assert composition_add(composition_add(a, b), c) == composition_add(a, composition_add(b, c))


@given(weak_composition_lists(), weak_composition_lists(), weak_composition_lists())
def test_leq_partial_order(a, b, c):
    assert composition_leq(a, a)
    if composition_leq(a, b) and composition_leq(b, a):
        assert WeakComposition(a) == WeakComposition(b)
    if composition_leq(a, b) and composition_leq(b, c):
        assert composition_leq(a, c)
    assert composition_leq(a, composition_add(a, b))


def _bell(n):
    # Bell triangle
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


@pytest.mark.parametrize("n,expected", [(2, 2), (3, 5), (5, 52)])
def test_set_partition_counts(n, expected):
    parts = set_partitions(range(1, n + 1))
    assert len(parts) == len(set(parts)) == expected == _bell(n)


def test_set_partition_refinement():
    fine = SetPartition([[1], [2], [3]])
    coarse = SetPartition([[1, 3], [2]])
    assert fine.refines(coarse) and not coarse.refines(fine)
    with pytest.raises(ValueError):
        SetPartition([[1, 2], [2]])


def test_partitions_and_centralizers():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    lam = IntegerPartition((2, 1, 1))
    assert lam.length == 3 and lam.multiplicities() == {2: 1, 1: 2} and lam.mult_factorial() == 2
    # sum of n!/z_lambda over lambda |- n is n!
    for n in range(1, 8):
        assert sum(1 / z_lambda(l) for l in partitions(n)) == pytest.approx(1.0)


def test_permutation_sign():
    assert Permutation((2, 1, 3)).sign() == -1
    assert Permutation((3, 1, 2)).sign() == 1
    with pytest.raises(ValueError):
        Permutation((1, 1))


def _descents_brute(n):
    """Rooted trees as parent maps, counted by edges whose parent exceeds the child."""
    counts = {}
    for root in range(1, n + 1):
        others = [v for v in range(1, n + 1) if v != root]
        for parents in product(range(1, n + 1), repeat=n - 1):
            parent = dict(zip(others, parents))
            ok = True
            for v in others:
                seen, w = set(), v
                while w != root and ok:
                    if w in seen:
                        ok = False
                    seen.add(w)
                    w = parent[w]
            if ok:
                d = sum(parent[v] > v for v in others)
                counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))


@pytest.mark.parametrize("n", range(1, 6))
def test_rooted_trees_against_parent_maps(n):
    assert rooted_trees_by_descents(n) == _descents_brute(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_rooted_trees_match_product(n):
    counts = rooted_trees_by_descents(n)
    coeffs = descent_product_coefficients(n)
    assert [counts.get(i, 0) for i in range(len(coeffs))] == coeffs
    assert sum(coeffs) == n ** (n - 1)


def test_rooted_tree_examples():
    assert rooted_trees_by_descents(3) == {0: 2, 1: 5, 2: 2}
    assert rooted_trees_by_descents(2) == {0: 1, 1: 1}
    assert sum(rooted_trees_by_descents(4).values()) == 64
    with pytest.raises(BoundExceeded):
        rooted_trees_by_descents(8)


@given(st.integers(1, 12))
def test_double_factorial_closed_form(m):
    assert double_factorial(2 * m - 1) * 2 ** m * factorial(m) == factorial(2 * m)
