"""Edge labels of the weighted partition poset with a top adjoined, EL
verification, ascent-free chains, and chains built from colored trees."""

from dataclasses import dataclass, field
from typing import NamedTuple

from .core import Permutation, WeakComposition
from .poset import TOP, Block, WeightedPartition, merged_pair
from .trees import Leaf, leaves, postorder_internal, valency


class EdgeLabel(NamedTuple):
    a: int
    b: int
    color: int

    def __str__(self):
        return f"({self.a},{self.b})^{self.color}"


def label_leq(p, q):
    """Order of the label poset: an ordinal sum over a of product orders on (b, color)."""
    if p.a != q.a:
        return p.a < q.a
    return p.b <= q.b and p.color <= q.color


def label_lt(p, q):
    return p != q and label_leq(p, q)


def label_key(p):
    """A linear extension of the label order (used only for comparison reports)."""
    return (p.a, p.b, p.color)


def edge_label(x, y):
    """Label of the cover x < y; y may be the adjoined top."""
    if y is TOP:
        if x is TOP or len(x) != 1:
            raise ValueError("only a one-block partition is covered by the top")
        ground = x.ground()
        return EdgeLabel(ground[0], ground[-1] + 1, 1)
    A, B, r = merged_pair(x, y)
    return EdgeLabel(A.labels[0], B.labels[0], r)


@dataclass(frozen=True)
class MaximalChain:
    elements: tuple
    labels: tuple = field(default=None)

    def __post_init__(self):
        computed = tuple(edge_label(x, y) for x, y in zip(self.elements, self.elements[1:]))
        if self.labels is None:
            object.__setattr__(self, "labels", computed)
        elif tuple(self.labels) != computed:
            raise ValueError("stored labels differ from recomputed labels")

    def __str__(self):
        return " ⋖ ".join(map(str, self.elements))

    def word(self):
        return " ".join(map(str, self.labels))


def is_increasing(word):
    return all(label_lt(p, q) for p, q in zip(word, word[1:]))


def is_ascent_free(word):
    return not any(label_lt(p, q) for p, q in zip(word, word[1:]))


def precedes(u, w, lt=label_lt):
    """u precedes w when, at the first differing position, u's label is strictly below."""
    for p, q in zip(u, w):
        if p != q:
            return lt(p, q)
    return False


@dataclass
class ELReport:
    ok: bool
    intervals_checked: int = 0
    counterexample: object = None
    reason: str = ""
    linearization_disagreements: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _labels_table(P):
    return [{c: edge_label(P.elements[i], P.elements[c]) for c in P.covers[i]} for i in range(len(P))]


def verify_el(P, pairs=None):
    """Check the EL property on every closed interval [x, y] of P.

    For each y the label words of all maximal chains from every x <= y are
    built bottom-up with memoization.  Lexicographic precedence uses the
    partial order on labels.  Intervals where a linear extension of the label
    order would give a different verdict are collected but do not affect
    the result.
    """
    labels = _labels_table(P)
    report = ELReport(ok=True)
    tops = range(len(P)) if pairs is None else sorted({y for _, y in pairs})
    for y in tops:
        words = {y: [()]}
        below = [x for x in range(len(P)) if P.leq(x, y)]
        for x in sorted(below, key=lambda t: -P.rank[t]):
            if x == y:
                continue
            ws = []
            for c in P.covers[x]:
                if c in words:
                    lab = labels[x][c]
                    ws.extend((lab,) + w for w in words[c])
            words[x] = ws
        for x in below:
            if x == y or (pairs is not None and (x, y) not in pairs):
                continue
            report.intervals_checked += 1
            verdict, why = _el_verdict(words[x], label_lt)
            linear, _ = _el_verdict(words[x], lambda p, q: label_key(p) < label_key(q))
            if verdict != linear:
                report.linearization_disagreements.append((x, y))
            if not verdict and report.ok:
                report.ok = False
                report.counterexample = (P.elements[x], P.elements[y])
                report.reason = why
    return report


def _el_verdict(words, lt):
    inc = [w for w in words if all(lt(p, q) for p, q in zip(w, w[1:]))]
    if len(inc) != 1:
        return False, f"{len(inc)} increasing chains"
    u = inc[0]
    for w in words:
        if w != u and not precedes(u, w, lt):
            return False, "increasing chain does not precede " + " ".join(map(str, w))
    return True, ""


def ascent_free_chains(P, x=None, y=None):
    """All maximal chains of [x, y] (default: the whole bounded poset) with no ascent."""
    x = P.bottom if x is None else x
    y = P.top if y is None else y
    labels = _labels_table(P)
    out = []

    def dfs(path, word):
        cur = path[-1]
        if cur == y:
            out.append(MaximalChain(tuple(P.elements[i] for i in path), tuple(word)))
            return
        for c in P.covers[cur]:
            if not P.leq(c, y):
                continue
            lab = labels[cur][c]
            if word and label_lt(word[-1], lab):
                continue
            dfs(path + [c], word + [lab])

    dfs([x], [])
    return out


def is_linear_extension(T, tau):
    """tau lists postorder indices (1-based); each node must come before its parent."""
    nodes = postorder_internal(T)
    m = len(nodes)
    if sorted(tau) != list(range(1, m + 1)):
        return False
    when = {tau[t] - 1: t for t in range(m)}
    pos = {id(x): i for i, x in enumerate(nodes)}
    for i, x in enumerate(nodes):
        for child in (x.left, x.right):
            if not isinstance(child, Leaf) and when[pos[id(child)]] > when[i]:
                return False
    return True


def chain_from_tree(T, tau=None, with_top=False):
    """The chain merging, at step t, the two subtrees of postorder node tau(t)."""
    nodes = postorder_internal(T)
    tau = tuple(range(1, len(nodes) + 1)) if tau is None else tuple(tau)
    if not is_linear_extension(T, tau):
        raise ValueError(f"{tau} is not a linear extension of the internal nodes")
    ground = sorted(leaves(T))
    blocks = {x: Block((x,)) for x in ground}
    current = WeightedPartition(blocks.values())
    chain = [current]
    owner = {x: x for x in ground}
    for t in tau:
        v = nodes[t - 1]
        a, b = owner[leaves(v.left)[0]], owner[leaves(v.right)[0]]
        A, B = blocks.pop(a), blocks.pop(b)
        merged = Block(A.labels + B.labels, A.weight.plus(B.weight).plus(WeakComposition.unit(v.color)))
        key = merged.labels[0]
        blocks[key] = merged
        for lab in merged.labels:
            owner[lab] = key
        current = WeightedPartition(blocks.values())
        chain.append(current)
    if with_top:
        chain.append(TOP)
    return MaximalChain(tuple(chain))


def decreasing_extension(T):
    """The linear extension along which node valencies weakly decrease.

    Equal valencies sit on one left spine; deeper nodes go first.
    """
    nodes = postorder_internal(T)
    depth = {}

    def walk(S, d):
        if isinstance(S, Leaf):
            return
        depth[id(S)] = d
        walk(S.left, d + 1)
        walk(S.right, d + 1)

    walk(T, 0)
    order = sorted(range(len(nodes)), key=lambda i: (-valency(nodes[i]), -depth[id(nodes[i])]))
    return Permutation(i + 1 for i in order)
