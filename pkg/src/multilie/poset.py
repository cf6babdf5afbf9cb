"""The poset of weighted partitions with k colors, its intervals, Möbius
values and weighted Whitney numbers."""

from itertools import combinations

from .core import BoundExceeded, WeakComposition


class Block(tuple):
    """A block of a weighted partition: (sorted labels, weight)."""

    __slots__ = ()

    def __new__(cls, labels, weight=()):
        labels = tuple(sorted(labels))
        weight = WeakComposition(weight)
        if not labels:
            raise ValueError("empty block")
        if weight.size() > len(labels) - 1:
            raise ValueError(f"weight {weight} too large for block {labels}")
        return super().__new__(cls, (labels, weight))

    @property
    def labels(self):
        return self[0]

    @property
    def weight(self):
        return self[1]

    def __str__(self):
        return _format_labels(self.labels) + ":" + repr(self.weight)

    def display(self, k):
        """Weight padded to k colors; singletons keep the empty weight."""
        weight = "()" if len(self.labels) == 1 else "(" + ",".join(map(str, self.weight.padded(k))) + ")"
        return _format_labels(self.labels) + ":" + weight


def _format_labels(labels):
    if all(x < 10 for x in labels):
        return "".join(map(str, labels))
    return ",".join(map(str, labels))


class WeightedPartition(tuple):
    """Tuple of Blocks sorted by minimum label."""

    __slots__ = ()

    def __new__(cls, blocks):
        blocks = sorted((b if isinstance(b, Block) else Block(*b) for b in blocks),
                        key=lambda b: b.labels[0])
        seen = set()
        for b in blocks:
            if seen.intersection(b.labels):
                raise ValueError("blocks overlap")
            seen.update(b.labels)
        return super().__new__(cls, blocks)

    @classmethod
    def bottom(cls, ground):
        return cls(Block((x,)) for x in ground)

    @classmethod
    def single(cls, ground, weight):
        return cls([Block(ground, weight)])

    def ground(self):
        return tuple(sorted(x for b in self for x in b.labels))

    def weight(self):
        """Total weight μ(α), the sum of the block weights."""
        out = WeakComposition()
        for b in self:
            out = out.plus(b.weight)
        return out

    def rank(self):
        return sum(len(b.labels) for b in self) - len(self)

    def __str__(self):
        return "|".join(map(str, self))

    def display(self, k):
        return "|".join(b.display(k) for b in self)


class _Top:
    """Artificial maximum adjoined to the poset."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"

    __str__ = __repr__

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()


def wp_leq(a, b):
    if a is TOP or b is TOP:
        return b is TOP
    if a.ground() != b.ground():
        raise ValueError("weighted partitions on different ground sets")
    owner = {}
    for j, blk in enumerate(b):
        for x in blk.labels:
            owner[x] = j
    merged = [[] for _ in b]
    for blk in a:
        targets = {owner[x] for x in blk.labels}
        if len(targets) != 1:
            return False
        merged[targets.pop()].append(blk.weight)
    for blk, parts in zip(b, merged):
        total = WeakComposition()
        for w in parts:
            total = total.plus(w)
        if not total.leq(blk.weight):
            return False
        if blk.weight.size() - total.size() != len(parts) - 1:
            return False
    return True


def wp_covers(a, k):
    """All weighted partitions covering `a` in the poset with k colors."""
    out = []
    blocks = list(a)
    for i, j in combinations(range(len(blocks)), 2):
        rest = blocks[:i] + blocks[i + 1:j] + blocks[j + 1:]
        labels = blocks[i].labels + blocks[j].labels
        base = blocks[i].weight.plus(blocks[j].weight)
        for r in range(1, k + 1):
            out.append(WeightedPartition(rest + [Block(labels, base.plus(WeakComposition.unit(r)))]))
    return out


def merged_pair(a, b):
    """For a cover a < b, return (A, B, r): the merged blocks and the added color."""
    if b is TOP:
        raise ValueError("merged_pair is undefined for the artificial top")
    old = [blk for blk in a if blk not in b]
    new = [blk for blk in b if blk not in a]
    if len(old) != 2 or len(new) != 1 or len(a) != len(b) + 1:
        raise ValueError(f"{a} is not covered by {b}")
    A, B = sorted(old, key=lambda blk: blk.labels[0])
    C = new[0]
    if set(C.labels) != set(A.labels) | set(B.labels):
        raise ValueError(f"{a} is not covered by {b}")
    diff = C.weight.minus(A.weight.plus(B.weight)) if A.weight.plus(B.weight).leq(C.weight) else None
    if diff is None or diff.size() != 1:
        raise ValueError(f"{a} is not covered by {b}")
    return A, B, len(diff)


class PosetInterval:
    """A finite graded poset with a least element, stored with integer ids.

    Elements are sorted by (rank, string form), so ids give a stable order.
    """

    def __init__(self, elements, k, ground, with_top=False):
        self.k = k
        self.with_top = with_top
        self.ground = tuple(ground)
        key = lambda e: (self.rank_of(e), str(e))
        self.elements = sorted(elements, key=key)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.rank = [self.rank_of(e) for e in self.elements]
        self.covers = [[] for _ in self.elements]
        for i, e in enumerate(self.elements):
            for c in self._raw_covers(e):
                j = self.index.get(c)
                if j is not None:
                    self.covers[i].append(j)
            self.covers[i].sort()
        self.cocovers = [[] for _ in self.elements]
        for i, cs in enumerate(self.covers):
            for j in cs:
                self.cocovers[j].append(i)
        self._below = None
        self._above = None

    def rank_of(self, e):
        if e is TOP:
            return len(self.ground)
        return len(self.ground) - len(e)

    def _raw_covers(self, e):
        if e is TOP:
            return []
        out = wp_covers(e, self.k)
        if self.with_top and len(e) == 1:
            out.append(TOP)
        return out

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        maximal = [i for i, cs in enumerate(self.covers) if not cs]
        if len(maximal) != 1:
            raise ValueError("poset has no unique maximum")
        return maximal[0]

    @property
    def maximal(self):
        return [i for i, cs in enumerate(self.covers) if not cs]

    def _closure(self, nbrs, order):
        sets = [0] * len(self.elements)
        for i in order:
            s = 1 << i
            for j in nbrs[i]:
                s |= sets[j]
            sets[i] = s
        return sets

    @property
    def below(self):
        """below[i]: bitmask of all j <= i."""
        if self._below is None:
            order = sorted(range(len(self)), key=lambda i: self.rank[i])
            self._below = self._closure(self.cocovers, order)
        return self._below

    @property
    def above(self):
        """above[i]: bitmask of all j >= i."""
        if self._above is None:
            order = sorted(range(len(self)), key=lambda i: -self.rank[i])
            self._above = self._closure(self.covers, order)
        return self._above

    def leq(self, i, j):
        return bool(self.below[j] >> i & 1)

    def between(self, i, j):
        """Ids x with i <= x <= j, sorted."""
        mask = self.below[j] & self.above[i]
        return [x for x in range(len(self)) if mask >> x & 1]

    def mobius_from(self, i):
        """Map j -> Möbius value mu(i, j) for all j >= i."""
        mu = {i: 1}
        for j in sorted(_bits(self.above[i]), key=lambda x: self.rank[x]):
            if j == i:
                continue
            mask = self.below[j] & self.above[i] & ~(1 << j)
            mu[j] = -sum(mu[x] for x in _bits(mask))
        return mu

    def mobius_to(self, j):
        """Map i -> Möbius value mu(i, j) for all i <= j."""
        mu = {j: 1}
        for i in sorted(_bits(self.below[j]), key=lambda x: -self.rank[x]):
            if i == j:
                continue
            mask = self.above[i] & self.below[j] & ~(1 << i)
            mu[i] = -sum(mu[x] for x in _bits(mask))
        return mu

    def hasse_edges(self):
        return [(i, j) for i, cs in enumerate(self.covers) for j in cs]


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _closed_upward(start, k, keep):
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for e in frontier:
            for c in wp_covers(e, k):
                if c not in seen and keep(c):
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def build_interval(n, mu, ground=None):
    """The maximal interval [0, ground^mu] where |mu| = n - 1."""
    mu = WeakComposition(mu)
    ground = tuple(range(1, n + 1)) if ground is None else tuple(sorted(ground))
    if len(ground) != n:
        raise ValueError("ground set size differs from n")
    if mu.size() != n - 1:
        raise ValueError(f"weight {mu} must have size n-1 = {n - 1}")
    k = max(len(mu), 1)
    top = WeightedPartition.single(ground, mu)
    elements = _closed_upward(WeightedPartition.bottom(ground), k, lambda e: wp_leq(e, top))
    return PosetInterval(elements, k, ground)


def build_poset(n, k, top=False, ground=None):
    """The whole poset on ground [n] with k colors, optionally with an adjoined maximum."""
    ground = tuple(range(1, n + 1)) if ground is None else tuple(sorted(ground))
    elements = _closed_upward(WeightedPartition.bottom(ground), k, lambda e: True)
    if top:
        elements.add(TOP)
    return PosetInterval(elements, k, ground, with_top=top)


def mobius_interval(I):
    """Möbius value between the least and greatest elements."""
    return I.mobius_from(I.bottom)[I.top]


def whitney_direct(n, k, bound=6):
    """Weighted Whitney numbers of both kinds, by direct summation.

    Returns (w, W), lists indexed by rank of Poly objects in x_1..x_k, where
    each element contributes x^(its total weight).
    """
    from .symfunc.poly import Poly

    if n > bound:
        raise BoundExceeded(f"whole-poset enumeration limited to n <= {bound}")
    P = build_poset(n, k)
    mu = P.mobius_from(P.bottom)
    w = [Poly.zero(k) for _ in range(n)]
    W = [Poly.zero(k) for _ in range(n)]
    for i, e in enumerate(P.elements):
        mono = Poly.monomial(k, e.weight().padded(k))
        r = P.rank[i]
        W[r] = W[r] + mono
        w[r] = w[r] + mono * mu[i]
    return w, W


def _relabel(labels, ground):
    pos = {x: t + 1 for t, x in enumerate(sorted(ground))}
    return tuple(pos[x] for x in labels)


def upper_ideal_map(alpha, beta):
    """Collapse beta >= alpha to a weighted partition of [|alpha|].

    Block j of alpha becomes label j+1; the weight of a merged block is
    its weight minus the sum of the merged alpha-weights.
    """
    owner = {}
    for t, blk in enumerate(alpha):
        for x in blk.labels:
            owner[x] = t + 1
    blocks = []
    for blk in beta:
        idx = sorted({owner[x] for x in blk.labels})
        base = WeakComposition()
        for t in idx:
            base = base.plus(alpha[t - 1].weight)
        blocks.append(Block(idx, blk.weight.minus(base)))
    return WeightedPartition(blocks)


def lower_interval_map(alpha, gamma):
    """Split gamma <= alpha into its restrictions to each block of alpha,
    relabeled to [|block|]."""
    parts = []
    for blk in alpha:
        inside = [b for b in gamma if set(b.labels) <= set(blk.labels)]
        parts.append(WeightedPartition(Block(_relabel(b.labels, blk.labels), b.weight) for b in inside))
    return tuple(parts)


def check_uniformity(n, k, bound=5):
    """Check the upper ideals and lower intervals of the poset on [n] by explicit isomorphisms."""
    if n > bound:
        raise BoundExceeded(f"uniformity check limited to n <= {bound}")
    P = build_poset(n, k)
    smaller = {}
    maximal = {}

    def whole(s):
        if s not in smaller:
            smaller[s] = build_poset(s, k)
        return smaller[s]

    def max_interval(s, w):
        if (s, w) not in maximal:
            maximal[(s, w)] = build_interval(s, w)
        return maximal[(s, w)]

    for a, alpha in enumerate(P.elements):
        # upper ideal
        Q = whole(len(alpha))
        up = list(_bits(P.above[a]))
        image = {x: upper_ideal_map(alpha, P.elements[x]) for x in up}
        if len(set(image.values())) != len(up) or set(image.values()) != set(Q.elements):
            return False
        for x in up:
            mapped = {Q.index[image[c]] for c in P.covers[x]}
            if mapped != set(Q.covers[Q.index[image[x]]]):
                return False
        # lower interval as a product of maximal intervals
        factors = [max_interval(len(b.labels), b.weight) for b in alpha]
        down = list(_bits(P.below[a]))
        image = {x: lower_interval_map(alpha, P.elements[x]) for x in down}
        expected = 1
        for F in factors:
            expected *= len(F)
        if len(set(image.values())) != len(down) or len(down) != expected:
            return False
        for x in down:
            tup = image[x]
            if any(part not in F.index for part, F in zip(tup, factors)):
                return False
            got = {image[c] for c in P.covers[x] if P.leq(c, a)}
            want = set()
            for t, (part, F) in enumerate(zip(tup, factors)):
                for c in F.covers[F.index[part]]:
                    want.add(tup[:t] + (F.elements[c],) + tup[t + 1:])
            if got != want:
                return False
    return True
