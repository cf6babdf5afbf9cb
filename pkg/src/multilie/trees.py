"""Planar binary trees with labeled leaves and colored internal nodes.

Text form: a leaf is its label, a node is ``[left,right]_color``.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import IntegerPartition, WeakComposition


@dataclass(frozen=True)
class Leaf:
    label: int

    def __str__(self):
        return str(self.label)


@dataclass(frozen=True)
class Node:
    color: int
    left: "Leaf | Node"
    right: "Leaf | Node"

    def __str__(self):
        return f"[{self.left},{self.right}]_{self.color}"


def node(left, right, color=1):
    """Build a node, promoting plain integers to leaves."""
    left = Leaf(left) if isinstance(left, int) else left
    right = Leaf(right) if isinstance(right, int) else right
    return Node(color, left, right)


def leaves(T):
    """Leaf labels from left to right."""
    if isinstance(T, Leaf):
        return [T.label]
    return leaves(T.left) + leaves(T.right)


def valency(T):
    """Smallest leaf label of the subtree."""
    return min(leaves(T))


def postorder_internal(T):
    """Internal nodes listed left subtree, right subtree, root."""
    if isinstance(T, Leaf):
        return []
    return postorder_internal(T.left) + postorder_internal(T.right) + [T]


def internal_count(T):
    return 0 if isinstance(T, Leaf) else 1 + internal_count(T.left) + internal_count(T.right)


def content(T):
    """Color multiplicities of the internal nodes."""
    counts = {}
    for x in postorder_internal(T):
        counts[x.color] = counts.get(x.color, 0) + 1
    top = max(counts, default=0)
    return WeakComposition(counts.get(r, 0) for r in range(1, top + 1))


def colors(T):
    """Colors of the internal nodes in postorder."""
    return tuple(x.color for x in postorder_internal(T))


def recolor(T, cols):
    """Copy of T whose internal nodes (in postorder) receive the given colors."""
    it = iter(cols)

    def rec(S):
        if isinstance(S, Leaf):
            return S
        left = rec(S.left)
        right = rec(S.right)
        return Node(next(it), left, right)

    out = rec(T)
    if next(it, None) is not None:
        raise ValueError("too many colors")
    return out


def relabel(T, mapping):
    if isinstance(T, Leaf):
        return Leaf(mapping[T.label])
    return Node(T.color, relabel(T.left, mapping), relabel(T.right, mapping))


def is_normalized(T):
    if isinstance(T, Leaf):
        return True
    return valency(T.left) < valency(T.right) and is_normalized(T.left) and is_normalized(T.right)


def normalize(T):
    """Swap children wherever the right subtree carries the smaller label."""
    if isinstance(T, Leaf):
        return T
    left, right = normalize(T.left), normalize(T.right)
    if valency(right) < valency(left):
        left, right = right, left
    return Node(T.color, left, right)


def _require_normalized(T):
    if not is_normalized(T):
        raise ValueError(f"tree {T} is not normalized")


def is_lyndon_node(x):
    """A node is Lyndon when its left child is a leaf or v(R(L(x))) > v(R(x))."""
    return isinstance(x.left, Leaf) or valency(x.left.right) > valency(x.right)


def is_colored_lyndon(T):
    _require_normalized(T)
    return all(is_lyndon_node(x) or x.left.color > x.color for x in postorder_internal(T))


def is_colored_comb(T):
    _require_normalized(T)
    return all(isinstance(x.right, Leaf) or x.color > x.right.color for x in postorder_internal(T))


@dataclass(frozen=True)
class TreeTypeReport:
    lyn_type: IntegerPartition
    comb_type: IntegerPartition
    lyn_blocks: tuple
    comb_blocks: tuple


def _blocks(T, joined_child):
    """Blocks of postorder indices, where each node is joined to the child picked
    by `joined_child` (returns 'left', 'right' or None). Each block is listed
    from the top node downward."""
    nodes = postorder_internal(T)
    pos = {id(x): i for i, x in enumerate(nodes)}
    parent_in_block = {}
    for x in nodes:
        side = joined_child(x)
        if side is not None:
            parent_in_block[pos[id(getattr(x, side))]] = pos[id(x)]
    heads = [i for i in range(len(nodes)) if i not in parent_in_block]
    child_of = {p: c for c, p in parent_in_block.items()}
    blocks = []
    for h in heads:
        chain = [h]
        while chain[-1] in child_of:
            chain.append(child_of[chain[-1]])
        blocks.append(tuple(chain))
    return tuple(sorted(blocks))


def lyndon_blocks(T):
    return _blocks(T, lambda x: None if is_lyndon_node(x) else "left")


def comb_blocks(T):
    return _blocks(T, lambda x: "right" if isinstance(x.right, Node) else None)


def tree_types(T):
    _require_normalized(T)
    lb, cb = lyndon_blocks(T), comb_blocks(T)
    return TreeTypeReport(
        lyn_type=IntegerPartition(len(b) for b in lb),
        comb_type=IntegerPartition(len(b) for b in cb),
        lyn_blocks=lb,
        comb_blocks=cb,
    )


def enumerate_nor(A):
    """All normalized trees with leaf set A."""
    A = tuple(sorted(A))
    if not A:
        raise ValueError("empty label set")
    return list(_nor(A))


def _nor(A):
    if len(A) == 1:
        yield Leaf(A[0])
        return
    first, rest = A[0], A[1:]
    for size in range(0, len(rest)):
        for extra in combinations(rest, size):
            left = (first,) + extra
            right = tuple(x for x in rest if x not in extra)
            for L in _nor(left):
                for R in _nor(right):
                    yield Node(1, L, R)


def _block_colorings(blocks, mu, increasing_down):
    """Assign to each block a set of distinct colors; within a block the colors
    are placed monotonically along the block (listed top first). The total
    color content must equal mu."""
    k = len(mu)
    remaining = list(mu)

    def rec(b):
        if b == len(blocks):
            if not any(remaining):
                yield {}
            return
        size = len(blocks[b])
        avail = [r for r in range(1, k + 1) if remaining[r - 1]]
        for chosen in combinations(avail, size):
            order = chosen if increasing_down else tuple(reversed(chosen))
            for r in chosen:
                remaining[r - 1] -= 1
            for rest in rec(b + 1):
                out = dict(rest)
                out.update(zip(blocks[b], order))
                yield out
            for r in chosen:
                remaining[r - 1] += 1

    yield from rec(0)


def _colored_family(mu, blocks_of, increasing_down, ground=None):
    mu = WeakComposition(mu)
    n = mu.size() + 1
    A = tuple(range(1, n + 1)) if ground is None else tuple(sorted(ground))
    out = []
    for T in enumerate_nor(A):
        blocks = blocks_of(T)
        for assignment in _block_colorings(blocks, mu, increasing_down):
            out.append(recolor(T, [assignment[i] for i in range(n - 1)]))
    return out


def enumerate_lyn(mu, ground=None):
    """Colored Lyndon trees with content mu.

    Colors increase down each Lyndon block, so color(L(x)) > color(x)
    at every non-Lyndon node.
    """
    return _colored_family(mu, lyndon_blocks, True, ground)


def enumerate_comb(mu, ground=None):
    """Colored combs with content mu: colors decrease down each right chain."""
    return _colored_family(mu, comb_blocks, False, ground)


def enumerate_bt(mu, ground=None):
    """All colored planar trees with leaf set `ground` (any order) and content mu."""
    from itertools import permutations

    mu = WeakComposition(mu)
    n = mu.size() + 1
    A = tuple(range(1, n + 1)) if ground is None else tuple(sorted(ground))
    out = []
    for shape in _shapes(n):
        for perm in permutations(A):
            T = _fill(shape, iter(perm))
            for cols in _color_words(mu):
                out.append(recolor(T, cols))
    return out


def _shapes(n):
    if n == 1:
        return [None]
    out = []
    for i in range(1, n):
        for L in _shapes(i):
            for R in _shapes(n - i):
                out.append((L, R))
    return out


def _fill(shape, it):
    if shape is None:
        return Leaf(next(it))
    return Node(1, _fill(shape[0], it), _fill(shape[1], it))


def _color_words(mu):
    """Distinct words with letter r appearing mu(r) times."""
    total = mu.size()
    remaining = list(mu)

    def rec(i):
        if i == total:
            yield ()
            return
        for r in range(1, len(remaining) + 1):
            if remaining[r - 1]:
                remaining[r - 1] -= 1
                for rest in rec(i + 1):
                    yield (r,) + rest
                remaining[r - 1] += 1

    return list(rec(0))


def tree_sign(T):
    if isinstance(T, Leaf):
        return 1
    s = tree_sign(T.left) * tree_sign(T.right)
    return -s if internal_count(T.right) % 2 else s


def valency_inversions(T):
    """Pairs (x, y) of internal nodes with x inside L(y) and v(R(x)) < v(R(y))."""
    count = 0
    for y in postorder_internal(T):
        vy = valency(y.right)
        count += sum(1 for x in postorder_internal(y.left) if valency(x.right) < vy)
    return count


def coloring_inversions(T):
    """Pairs (x, y) with equal valency, x inside L(y), color(x) < color(y)."""
    count = 0
    for y in postorder_internal(T):
        vy = valency(y)
        count += sum(1 for x in postorder_internal(y.left) if valency(x) == vy and x.color < y.color)
    return count
