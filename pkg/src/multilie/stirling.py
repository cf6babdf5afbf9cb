"""Stirling permutations, their ascending-adjacent (AA) and terminally nested
(TN) structure, and the bijections xi and gamma with normalized trees."""

from .core import IntegerPartition, Permutation
from .trees import Leaf, Node, postorder_internal, valency


def parse_word(text):
    """Parse a word: space/comma separated integers, or compact digits when every label is < 10."""
    text = text.strip()
    if any(c in text for c in " ,"):
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(c) for c in text)


def format_word(word):
    return " ".join(map(str, word))


def compact(word):
    """Digit string form, for labels below 10."""
    if any(x > 9 for x in word):
        raise ValueError("compact form needs single-digit labels")
    return "".join(map(str, word))


def _positions(word):
    pos = {}
    for i, a in enumerate(word):
        pos.setdefault(a, []).append(i)
    return pos


def is_stirling(word):
    pos = _positions(word)
    if any(len(p) != 2 for p in pos.values()):
        return False
    return all(all(word[t] > a for t in range(i + 1, j)) for a, (i, j) in pos.items())


def _check(word):
    word = tuple(word)
    if not is_stirling(word):
        raise ValueError(f"{format_word(word)} is not a Stirling permutation")
    return word


def enumerate_stirling(A):
    """All Stirling permutations of the doubled multiset of A.

    Built by inserting the pair mm of the current largest letter into every
    gap of a word on the smaller letters.
    """
    A = sorted(A)
    words = [()]
    for a in A:
        words = [w[:i] + (a, a) + w[i:] for w in words for i in range(len(w) + 1)]
    return sorted(words)


def block_factorization(word):
    """Split into top-level blocks B(a) = a ... a."""
    blocks = []
    i = 0
    while i < len(word):
        j = word.index(word[i], i + 1)
        blocks.append(word[i:j + 1])
        i = j + 1
    return blocks


def aa_pairs(word):
    """Pairs (a, b), a < b, where the second a immediately precedes the first b."""
    word = _check(word)
    pos = _positions(word)
    out = set()
    for a, (_, j) in pos.items():
        if j + 1 < len(word):
            b = word[j + 1]
            if b > a and pos[b][0] == j + 1:
                out.add((a, b))
    return out


def tn_pairs(word):
    """Pairs (a, b), a < b, where the second a immediately follows the second b."""
    word = _check(word)
    pos = _positions(word)
    out = set()
    for a, (_, j) in pos.items():
        if j > 0:
            b = word[j - 1]
            if b > a and pos[b][1] == j - 1:
                out.add((a, b))
    return out


def aa_pairs_by_blocks(word):
    """AA pairs from block structure: B(a), B(b) adjacent inside a common block, a < b."""
    word = _check(word)
    out = set()

    def scan(seq):
        blocks = block_factorization(seq)
        for x, y in zip(blocks, blocks[1:]):
            if x[0] < y[0]:
                out.add((x[0], y[0]))
        for blk in blocks:
            scan(blk[1:-1])

    scan(word)
    return out


def tn_pairs_by_blocks(word):
    """TN pairs from block structure: B(b) is the last block inside B(a)."""
    word = _check(word)
    out = set()

    def scan(seq):
        for blk in block_factorization(seq):
            inner = blk[1:-1]
            if inner:
                out.add((blk[0], block_factorization(inner)[-1][0]))
            scan(inner)

    scan(word)
    return out


def _chain_type(letters, pairs):
    nxt = dict(pairs)
    has_prev = {b for _, b in pairs}
    sizes = []
    for a in letters:
        if a in has_prev:
            continue
        length = 1
        while a in nxt:
            a = nxt[a]
            length += 1
        sizes.append(length)
    return IntegerPartition(sizes)


def aa_type(word):
    return _chain_type(set(word), aa_pairs(word))


def tn_type(word):
    return _chain_type(set(word), tn_pairs(word))


def kappa(word, a):
    """Last letter of the maximal TN sequence starting at a."""
    nxt = dict(tn_pairs(word))
    while a in nxt:
        a = nxt[a]
    return a


def aa_factorization(word):
    """Complete AA factorization: cut between top-level blocks B(a), B(b) whenever a > b."""
    word = tuple(word)
    factors, current = [], []
    for blk in block_factorization(word):
        if current and current[-1][0] > blk[0]:
            factors.append(sum(current, ()))
            current = []
        current.append(blk)
    if current:
        factors.append(sum(current, ()))
    return factors


def tn_factorization(word):
    """Complete TN factorization: a factor starting with B(a) extends until the
    next block letter is smaller than kappa(a)."""
    word = tuple(word)
    blocks = block_factorization(word)
    factors = []
    i = 0
    while i < len(blocks):
        head = blocks[i]
        top = kappa(head, head[0])
        j = i + 1
        while j < len(blocks) and blocks[j][0] > top:
            j += 1
        factors.append(sum(blocks[i:j], ()))
        i = j
    return factors


def xi(word):
    word = _check(word)
    return _xi(word)


def _xi(word):
    if not word:
        return ()
    factors = aa_factorization(word)
    if len(factors) > 1:
        return sum((_xi(f) for f in factors), ())
    blocks = block_factorization(word)
    letters = [b[0] for b in blocks]
    inner = [_xi(b[1:-1]) for b in blocks]
    out = ()
    for a, t in zip(letters[:-1], inner[:-1]):
        out += (a,) + t
    out += (letters[-1],) + tuple(reversed(letters)) + inner[-1]
    return out


def xi_inv(word):
    word = _check(word)
    return _xi_inv(word)


def _xi_inv(word):
    if not word:
        return ()
    factors = tn_factorization(word)
    if len(factors) > 1:
        return sum((_xi_inv(f) for f in factors), ())
    blocks = block_factorization(word)
    head, tail = blocks[0], sum(blocks[1:], ())
    # head = a1 t1 a2 t2 ... ak ak ... a1 along the maximal TN chain
    letters, inner = [], []
    cur = head
    while True:
        a = cur[0]
        body = cur[1:-1]
        letters.append(a)
        if not body:
            inner.append(())
            break
        sub = block_factorization(body)
        inner.append(sum(sub[:-1], ()))
        cur = sub[-1]
    inner[-1] = tail
    out = ()
    for a, t in zip(letters, inner):
        out += (a,) + _xi_inv(t) + (a,)
    return out


def red_map(word):
    """Drop the enclosing occurrences of the minimum and decrement every letter."""
    word = tuple(word)
    m = min(word)
    if not word or word[0] != m or word[-1] != m:
        raise ValueError("word must start and end with its minimum")
    return tuple(a - 1 for a in word[1:-1])


def unred(word):
    """Inverse of red_map on [n-1]: increment letters and wrap in 1 ... 1."""
    return (1,) + tuple(a + 1 for a in word) + (1,)


def init_perm(word):
    """Subword of first occurrences."""
    seen = set()
    out = []
    for a in word:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return Permutation(out)


def gamma_tilde(T):
    """Recursive word: m gamma(T_1) ... gamma(T_j) m along the left spine of T."""
    spine = []
    cur = T
    while isinstance(cur, Node):
        spine.append(cur.right)
        cur = cur.left
    m = cur.label
    out = (m,)
    for S in reversed(spine):
        out += gamma_tilde(S)
    return out + (m,)


def gamma_tilde_postorder(T):
    """Postorder form: each node contributes its theta-label, then theta of the leftmost leaf."""
    out = []

    def rec(S):
        if isinstance(S, Leaf):
            out.append(S.label)
            return
        rec(S.left)
        rec(S.right)
        out.append(valency(S.right))

    rec(T)
    first = T
    while isinstance(first, Node):
        first = first.left
    return tuple(out) + (first.label,)


def gamma(T):
    """The Stirling permutation in Q_{n-1} attached to a normalized tree on [n]."""
    return red_map(gamma_tilde(T))


def gamma_inv(word):
    """Inverse of gamma_tilde: a word of the form m ... m with m minimal."""
    word = _check(word)
    m = min(word)
    if word[0] != m or word[-1] != m:
        raise ValueError("word must start and end with its minimum")
    T = Leaf(m)
    for blk in block_factorization(word[1:-1]):
        T = Node(1, T, gamma_inv(blk))
    return T


def gamma_from_reduced(word):
    """Inverse of gamma: Q_{n-1} to normalized trees on [n]."""
    return gamma_inv(unred(_check(word)))


def letter_of_node(x):
    """The letter of gamma(T) attached to internal node x."""
    return valency(x.right) - 1


def node_coloring(T):
    """Coloring of letters of gamma(T) read off from the internal node colors."""
    return {letter_of_node(x): x.color for x in postorder_internal(T)}


def apply_letter_coloring(T, coloring):
    def rec(S):
        if isinstance(S, Leaf):
            return S
        return Node(coloring[letter_of_node(S)], rec(S.left), rec(S.right))

    return rec(T)


def colored_aa(word, coloring):
    """Whether coloring c has c(a) > c(b) on every AA pair (a, b)."""
    return all(coloring[a] > coloring[b] for a, b in aa_pairs(word))


def colored_tn(word, coloring):
    return all(coloring[a] > coloring[b] for a, b in tn_pairs(word))


def enumerate_colored(n_letters, mu, pairs_of):
    """All (word, coloring) in Q_{n_letters} with content mu satisfying c(a) > c(b) on pairs."""
    from .trees import _color_words
    from .core import WeakComposition

    mu = WeakComposition(mu)
    if mu.size() != n_letters:
        raise ValueError("content size differs from number of letters")
    out = []
    words = _color_words(mu)
    for w in enumerate_stirling(range(1, n_letters + 1)):
        pairs = pairs_of(w)
        for cols in words:
            c = dict(zip(range(1, n_letters + 1), cols))
            if all(c[a] > c[b] for a, b in pairs):
                out.append((w, tuple(sorted(c.items()))))
    return out
