"""Foundational combinatorial types: weak compositions, partitions, set
partitions, permutations, and a few enumerators used throughout."""

from itertools import combinations
from math import comb, factorial, prod


class BoundExceeded(ValueError):
    """Raised when a brute-force enumeration is asked for a size above its bound."""


class WeakComposition(tuple):
    """Finitely supported vector of nonnegative integers, trailing zeros stripped.

    Index 0 holds the multiplicity of color 1.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative entry in weak composition {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @classmethod
    def unit(cls, r):
        """The vector e_r (colors are 1-based)."""
        if r < 1:
            raise ValueError("colors start at 1")
        return cls([0] * (r - 1) + [1])

    def size(self):
        return sum(self)

    def support(self):
        return frozenset(i + 1 for i, p in enumerate(self) if p)

    def get(self, r):
        """Multiplicity of color r."""
        return self[r - 1] if 0 < r <= len(self) else 0

    def plus(self, other):
        return composition_add(self, other)

    def minus(self, other):
        n = max(len(self), len(other))
        return WeakComposition(self.get(i) - other.get(i) for i in range(1, n + 1))

    def leq(self, other):
        return composition_leq(self, other)

    def padded(self, k):
        if len(self) > k:
            raise ValueError(f"{self} has support outside [{k}]")
        return tuple(self) + (0,) * (k - len(self))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def composition_add(a, b):
    n = max(len(a), len(b))
    a, b = WeakComposition(a), WeakComposition(b)
    return WeakComposition(a.get(i) + b.get(i) for i in range(1, n + 1))


def composition_leq(a, b):
    a, b = WeakComposition(a), WeakComposition(b)
    return len(a) <= len(b) and all(x <= y for x, y in zip(a, b))


def weak_compositions(total, k):
    """All weak compositions of `total` with support in [k].

    Ordered lexicographically decreasing on the padded vectors, so (2,2) gives
    (2), (1,1), (0,2).
    """
    if k < 1:
        raise ValueError("k must be positive")

    def rec(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    return [WeakComposition(v) for v in rec(total, k)]


class IntegerPartition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 0:
            raise ValueError("negative part")
        return super().__new__(cls, [p for p in parts if p])

    @property
    def length(self):
        return len(self)

    def size(self):
        return sum(self)

    def multiplicities(self):
        m = {}
        for p in self:
            m[p] = m.get(p, 0) + 1
        return m

    def mult_factorial(self):
        """m(λ)! = product of factorials of the part multiplicities."""
        return prod(factorial(c) for c in self.multiplicities().values())

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n, max_part=None):
    """Partitions of n as descending tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def z_lambda(lam):
    """Order of the centralizer of a permutation of cycle type lam."""
    out = 1
    for part, mult in IntegerPartition(lam).multiplicities().items():
        out *= part ** mult * factorial(mult)
    return out


def multinomial(n, parts):
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


class SetPartition(tuple):
    """Tuple of sorted blocks, ordered by block minimum."""

    __slots__ = ()

    def __new__(cls, blocks):
        blocks = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen.intersection(b):
                raise ValueError("blocks overlap")
            seen.update(b)
        return super().__new__(cls, blocks)

    def ground(self):
        return tuple(sorted(x for b in self for x in b))

    def refines(self, other):
        owner = {x: i for i, b in enumerate(other) for x in b}
        return all(len({owner[x] for x in b}) == 1 for b in self)


def set_partitions(ground):
    """All set partitions of `ground`, in restricted-growth-string order."""
    ground = sorted(ground)
    if not ground:
        raise ValueError("ground set must be nonempty")
    out = []

    def rec(i, blocks):
        if i == len(ground):
            out.append(SetPartition(blocks))
            return
        x = ground[i]
        for b in blocks:
            b.append(x)
            rec(i + 1, blocks)
            b.pop()
        blocks.append([x])
        rec(i + 1, blocks)
        blocks.pop()

    rec(0, [])
    return out


class Permutation(tuple):
    """Word of distinct labels."""

    __slots__ = ()

    def __new__(cls, word):
        word = tuple(word)
        if len(set(word)) != len(word):
            raise ValueError(f"repeated entry in {word}")
        return super().__new__(cls, word)

    def inversions(self):
        return sum(1 for i, j in combinations(range(len(self)), 2) if self[i] > self[j])

    def sign(self):
        return -1 if self.inversions() % 2 else 1


def rooted_trees_by_descents(n, bound=7):
    """Count rooted labeled trees on [n] by number of descending edges.

    An edge is descending when the parent label exceeds the child label.
    Trees are enumerated through Prüfer codes and a choice of root.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceeded(f"rooted tree enumeration limited to n <= {bound}")
    counts = {}
    if n == 1:
        return {0: 1}
    for code in _product_range(n, n - 2):
        adj = _prufer_decode(code, n)
        for root in range(1, n + 1):
            d = 0
            stack = [(root, 0)]
            while stack:
                v, parent = stack.pop()
                for w in adj[v]:
                    if w != parent:
                        d += v > w
                        stack.append((w, v))
            counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))


def _product_range(n, length):
    if length == 0:
        yield ()
        return
    for head in range(1, n + 1):
        for tail in _product_range(n, length - 1):
            yield (head,) + tail


def _prufer_decode(code, n):
    degree = [1] * (n + 1)
    for x in code:
        degree[x] += 1
    adj = {v: [] for v in range(1, n + 1)}
    for x in code:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(1, n + 1) if degree[v] == 1)
    adj[u].append(w)
    adj[w].append(u)
    return adj


def descent_product_coefficients(n):
    """Coefficients of prod_{j=1}^{n-1} ((n-j) + j t), lowest degree first."""
    coeffs = [1]
    for j in range(1, n):
        a, b = n - j, j
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += a * c
            nxt[i + 1] += b * c
        coeffs = nxt
    return coeffs


def double_factorial(m):
    return prod(range(m, 0, -2)) if m > 0 else 1


def count_compositions(total, k):
    return comb(k + total - 1, total)
