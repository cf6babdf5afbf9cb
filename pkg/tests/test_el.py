import pytest

from multilie.core import weak_compositions
from multilie.el import (
    EdgeLabel, MaximalChain, _el_verdict, ascent_free_chains, chain_from_tree, decreasing_extension,
    edge_label, is_ascent_free, is_increasing, is_linear_extension, label_key, label_leq, label_lt,
    precedes, verify_el,
)
from multilie.poset import TOP, Block, WeightedPartition, build_interval, build_poset, mobius_interval
from multilie.trees import Leaf, enumerate_lyn, node

from test_trees import FIGURE_TREE

L = EdgeLabel


def wp(*blocks):
    return WeightedPartition(Block(labels, weight) for labels, weight in blocks)


def test_label_order_examples():
    assert label_leq(L(1, 2, 2), L(2, 3, 1))
    assert not label_leq(L(1, 2, 2), L(1, 3, 1)) and not label_leq(L(1, 3, 1), L(1, 2, 2))
    assert label_leq(L(1, 2, 1), L(1, 2, 1)) and not label_lt(L(1, 2, 1), L(1, 2, 1))
    assert str(L(1, 3, 2)) == "(1,3)^2"


def test_edge_label_examples():
    bottom = WeightedPartition.bottom((1, 2, 3))
    assert edge_label(bottom, wp(((1, 3), (0, 1)), ((2,), ()))) == L(1, 3, 2)
    assert edge_label(wp(((1, 2), (1,)), ((3,), ())), wp(((1, 2, 3), (1, 1)))) == L(1, 3, 2)
    assert edge_label(wp(((1, 2, 3), (1, 1))), TOP) == L(1, 4, 1)


def test_maximal_chain_validates_labels():
    bottom = WeightedPartition.bottom((1, 2))
    top = wp(((1, 2), (1,)))
    assert MaximalChain((bottom, top)).labels == (L(1, 2, 1),)
    with pytest.raises(ValueError):
        MaximalChain((bottom, top), (L(1, 2, 2),))


def test_increasing_and_ascent_free():
    assert is_increasing([L(1, 2, 1), L(1, 3, 1), L(2, 3, 1)])
    # incomparable consecutive labels are neither ascents nor increases
    assert is_ascent_free([L(1, 2, 2), L(1, 3, 1)]) and not is_increasing([L(1, 2, 2), L(1, 3, 1)])


def test_precedence_requires_strict_first_difference():
    u = [L(1, 2, 2), L(1, 3, 1)]
    w = [L(1, 3, 1), L(1, 2, 2)]
    assert not precedes(u, w) and not precedes(w, u)
    assert precedes([L(1, 2, 1), L(2, 3, 5)], [L(1, 3, 1), L(1, 2, 1)])


def test_el_verdict_rejects_two_increasing_chains():
    words = [(L(1, 2, 1), L(1, 3, 1)), (L(1, 2, 1), L(1, 3, 2))]
    ok, why = _el_verdict(words, label_lt)
    assert not ok and "2 increasing" in why


def test_whole_poset_three_three_is_el():
    report = verify_el(build_poset(3, 3, top=True))
    assert report and report.intervals_checked > 0


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_whole_poset_el(n, k):
    assert verify_el(build_poset(n, k, top=True)).ok


@pytest.mark.parametrize("mu", [(2, 1), (1, 1, 1), (3,)])
def test_interval_el(mu):
    assert verify_el(build_interval(4, mu))


def test_length_one_interval():
    report = verify_el(build_interval(2, (1,)))
    assert report.ok and report.intervals_checked == 1


def test_linear_extension_would_change_verdict():
    """Under the linear order (a, b, color) the interval [0, 123:(1,1)] has several increasing chains."""
    P = build_interval(3, (1, 1))
    report = verify_el(P)
    assert report.ok
    assert (P.bottom, P.top) in report.linearization_disagreements
    words = [c.labels for c in ascent_free_chains(P)]
    assert len(words) == 5
    linear = lambda p, q: label_key(p) < label_key(q)
    assert not _el_verdict(_all_words(P), linear)[0]


def _all_words(P):
    out = []

    def walk(i, word):
        if i == P.top:
            out.append(tuple(word))
        for c in P.covers[i]:
            walk(c, word + [edge_label(P.elements[i], P.elements[c])])

    walk(P.bottom, [])
    return out


@pytest.mark.parametrize("n,mu,count", [(3, (1, 1), 5), (2, (1,), 1), (3, (2,), 2)])
def test_ascent_free_counts(n, mu, count):
    assert len(ascent_free_chains(build_interval(n, mu))) == count


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("k", [1, 2])
def test_ascent_free_chains_are_lyndon_chains(n, k):
    for mu in weak_compositions(n - 1, k):
        P = build_interval(n, mu)
        found = {c.elements for c in ascent_free_chains(P)}
        expected = {chain_from_tree(T, decreasing_extension(T)).elements for T in enumerate_lyn(mu)}
        assert found == expected
        assert len(found) == abs(mobius_interval(P))


def test_chain_from_tree_examples():
    T = node(node(1, 2, 1), 3, 2)
    chain = chain_from_tree(T)
    assert [str(e) for e in chain.elements] == ["1:()|2:()|3:()", "12:(1)|3:()", "123:(1,1)"]
    T = node(node(1, 2, 1), node(3, 4, 2), 1)
    chain = chain_from_tree(T, (2, 1, 3))
    assert str(chain.elements[1]) == "1:()|2:()|34:(0,1)"
    assert str(chain.elements[2]) == "12:(1)|34:(0,1)"
    with_top = chain_from_tree(T, with_top=True)
    assert with_top.elements[-1] is TOP and with_top.labels[-1] == L(1, 5, 1)


def test_chain_of_eight_leaf_tree():
    chain = chain_from_tree(FIGURE_TREE)
    merged = [str(e).split("|")[0] if t in (4, 8) else None for t, e in enumerate(chain.elements)]
    assert merged[4] == "13456:(2,1,1)"
    assert merged[8] == "123456789:(3,3,2)"
    assert str(chain.elements[7]) == "13456:(2,1,1)|2789:(1,1,1)"


def test_linear_extension_checks():
    T = node(node(1, 2, 1), node(3, 4, 2), 1)
    assert is_linear_extension(T, (1, 2, 3)) and is_linear_extension(T, (2, 1, 3))
    assert not is_linear_extension(T, (3, 1, 2))
    with pytest.raises(ValueError):
        chain_from_tree(T, (1, 3, 2))


def test_decreasing_extension_examples():
    assert tuple(decreasing_extension(node(node(1, 2), 3))) == (1, 2)
    assert tuple(decreasing_extension(node(1, node(2, 3)))) == (1, 2)
    assert tuple(decreasing_extension(node(1, 2))) == (1,)
    assert decreasing_extension(Leaf(1)) == ()


def test_distinct_extensions_give_distinct_chains():
    T = node(node(1, 2, 1), node(3, 4, 2), 1)
    assert chain_from_tree(T, (1, 2, 3)) != chain_from_tree(T, (2, 1, 3))
