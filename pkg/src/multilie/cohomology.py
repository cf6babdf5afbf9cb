"""Top cohomology of open intervals of the weighted partition poset, and of
the poset with its minimum removed, presented as the span of maximal chains
modulo coboundaries of codimension-one chains.

A chain vector is a dict {maximal chain index: Fraction}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .core import Permutation, weak_compositions
from .el import chain_from_tree
from .linalg import RowSpace, solve
from .poset import build_interval, build_poset
from .trees import (
    Leaf, Node, content, coloring_inversions, enumerate_comb, enumerate_lyn, is_colored_lyndon,
    is_lyndon_node, is_normalized, leaves, normalize, postorder_internal, tree_sign,
    valency_inversions,
)


class CohomologyPresentation:
    """Maximal chains of the order complex and the coboundary relations among them.

    With drop_top=False the chains run from an atom to any maximal element,
    which presents the poset with only its minimum removed.
    """

    def __init__(self, P, x=None, y=None, drop_bottom=True, drop_top=True):
        self.poset = P
        self.x = P.bottom if x is None else x
        self.y = (P.top if drop_top else None) if y is None else y
        self.drop_bottom = drop_bottom
        self.drop_top = drop_top
        self.max_chains = self._maximal_chains()
        self.index = {c: i for i, c in enumerate(self.max_chains)}
        self.relations = self._relations()
        self.space = RowSpace()
        for row in self.relations:
            self.space.add(row)

    def _maximal_chains(self):
        P, out = self.P, []
        target = self.y

        def dfs(path):
            cur = path[-1]
            nxt = [c for c in P.covers[cur] if target is None or P.leq(c, target)]
            if cur == target or not nxt:
                out.append(self._strip(tuple(path)))
                return
            for c in nxt:
                dfs(path + [c])

        dfs([self.x])
        return sorted(set(out))

    @property
    def P(self):
        return self.poset

    def _strip(self, ids):
        if self.drop_bottom:
            ids = ids[1:]
        if self.drop_top:
            ids = ids[:-1]
        return ids

    def _relations(self):
        groups = {}
        for idx, chain in enumerate(self.max_chains):
            for pos in range(len(chain)):
                face = chain[:pos] + chain[pos + 1:]
                groups.setdefault(face, {})[idx] = -1 if pos % 2 else 1
        return [groups[f] for f in sorted(groups)]

    @property
    def computed_rank(self):
        return self.space.rank

    @property
    def dimension(self):
        return len(self.max_chains) - self.space.rank

    def chain_vector(self, chain, coeff=1):
        """Vector of a chain given as a MaximalChain or a tuple of poset elements."""
        elements = chain.elements if hasattr(chain, "elements") else chain
        ids = self._strip(tuple(self.poset.index[e] for e in elements))
        if ids not in self.index:
            raise ValueError("not a maximal chain of this presentation")
        return {self.index[ids]: Fraction(coeff)}

    def normal_form(self, vec):
        return self.space.normal_form(vec)

    def in_image(self, vec):
        return not self.normal_form(vec)

    def to_triplets(self):
        """Relation matrix as 'row col value' lines."""
        lines = [f"# {len(self.relations)} x {len(self.max_chains)}"]
        for r, row in enumerate(self.relations):
            lines.extend(f"{r} {c} {v}" for c, v in sorted(row.items()))
        return "\n".join(lines) + "\n"


def add(u, v, scale=1):
    out = dict(u)
    for c, x in v.items():
        y = out.get(c, 0) + scale * x
        if y:
            out[c] = y
        else:
            out.pop(c, None)
    return out


@lru_cache(maxsize=None)
def interval_presentation(ground, mu):
    """Presentation of the open interval below ground^mu."""
    P = build_interval(len(ground), mu, ground)
    return CohomologyPresentation(P)


def presentation_for(T):
    return interval_presentation(tuple(sorted(leaves(T))), content(T))


def top_cohomology_dim(P, open=True):
    """dim of top reduced cohomology: of the open interval (bottom, top) when
    open is True, otherwise of P with only its minimum removed."""
    return CohomologyPresentation(P, drop_top=open).dimension


def chain_class(T, tau=None, pres=None):
    pres = presentation_for(T) if pres is None else pres
    return pres.chain_vector(chain_from_tree(T, tau))


def lemma_sign_check(T, tau):
    """The chain built along the extension tau equals sgn(tau) times the postorder chain."""
    pres = presentation_for(T)
    sign = Permutation(tau).sign()
    diff = add(chain_class(T, tau, pres), chain_class(T, None, pres), -sign)
    return pres.in_image(diff)


def linear_extensions(T):
    """All linear extensions, as 1-based postorder index words."""
    nodes = postorder_internal(T)
    pos = {id(x): i for i, x in enumerate(nodes)}
    children = [[pos[id(c)] for c in (x.left, x.right) if isinstance(c, Node)] for x in nodes]
    out = []

    def rec(done, word):
        if len(word) == len(nodes):
            out.append(tuple(i + 1 for i in word))
            return
        for i in range(len(nodes)):
            if i not in done and all(c in done for c in children[i]):
                rec(done | {i}, word + [i])

    rec(frozenset(), [])
    return out


def verify_basis(vectors, pres):
    """Independent modulo coboundaries and as many as the dimension."""
    vectors = list(vectors)
    if len(vectors) != pres.dimension:
        return False
    return _rank_mod(vectors, pres) == len(vectors)


def _rank_mod(vectors, pres):
    space = RowSpace()
    for v in vectors:
        space.add(pres.normal_form(v))
    return space.rank


def phi_map(T, pres=None):
    """sgn(leaf word) * sgn(T) * class of the postorder chain."""
    s = Permutation(leaves(T)).sign() * tree_sign(T)
    return {c: s * v for c, v in chain_class(T, None, pres).items()}


def replace_subtree(T, old, new):
    if T == old:
        return new
    if isinstance(T, Leaf):
        return T
    return Node(T.color, replace_subtree(T.left, old, new), replace_subtree(T.right, old, new))


def generator_relations(T):
    """Relations of the Lie generators that involve T, as lists of (coefficient, tree).

    Antisymmetry at every node; at every node whose right child is internal,
    the Jacobi relation (equal colors) or the mixed Jacobi relation.
    """
    out = []
    for x in postorder_internal(T):
        swapped = Node(x.color, x.right, x.left)
        out.append([(1, T), (1, replace_subtree(T, x, swapped))])
        if isinstance(x.right, Node):
            a, b, c = x.left, x.right.left, x.right.right
            j, i = x.color, x.right.color
            if i == j:
                terms = [(1, Node(j, a, Node(j, b, c))),
                         (-1, Node(j, Node(j, a, b), c)),
                         (-1, Node(j, b, Node(j, a, c)))]
            else:
                terms = [(1, Node(j, a, Node(i, b, c))),
                         (1, Node(i, a, Node(j, b, c))),
                         (-1, Node(i, Node(j, a, b), c)),
                         (-1, Node(j, Node(i, a, b), c)),
                         (-1, Node(j, b, Node(i, a, c))),
                         (-1, Node(i, b, Node(j, a, c)))]
            out.append([(s, replace_subtree(T, x, S)) for s, S in terms])
    return out


def relation_image_in_span(relation):
    pres = presentation_for(relation[0][1])
    total = {}
    for coeff, S in relation:
        total = add(total, phi_map(S, pres), coeff)
    return pres.in_image(total)


def inversion_pair(T):
    return (valency_inversions(T), coloring_inversions(T))


def _signs_from_coboundary(pres, T, terms):
    """Signs s with class(T) = sum s_t class(terms[t]), found among all sign patterns."""
    target = pres.normal_form(chain_class(T, None, pres))
    forms = [pres.normal_form(chain_class(S, None, pres)) for S in terms]
    for signs in product((1, -1), repeat=len(terms)):
        total = {}
        for s, f in zip(signs, forms):
            total = add(total, f, s)
        if total == target:
            return signs
    raise ArithmeticError(f"no signed relation expresses {T} through {[str(S) for S in terms]}")


def straightening_step(T):
    """One rewrite: (sign, tree) terms whose classes sum to the class of T.

    Returns None when T is already a colored Lyndon tree.
    """
    pres = presentation_for(T)
    if not is_normalized(T):
        S = normalize(T)
        return list(zip(_signs_from_coboundary(pres, T, [S]), [S]))
    if is_colored_lyndon(T):
        return None
    x = next(x for x in postorder_internal(T) if not is_lyndon_node(x) and x.left.color <= x.color)
    a, b, c = x.left.left, x.left.right, x.right
    i, j = x.left.color, x.color
    if i == j:
        new = [Node(j, a, Node(j, b, c)), Node(j, Node(j, a, c), b)]
    else:
        new = [Node(j, a, Node(i, b, c)),
               Node(i, a, Node(j, b, c)),
               Node(i, Node(j, a, b), c),
               Node(j, Node(i, a, c), b),
               Node(i, Node(j, a, c), b)]
    terms = [replace_subtree(T, x, S) for S in new]
    return list(zip(_signs_from_coboundary(pres, T, terms), terms))


_STRAIGHTENED = {}


def straighten_to_lyndon(T):
    """Coefficients of the class of T in the colored Lyndon basis."""
    memo = _STRAIGHTENED

    def rec(S):
        if S in memo:
            return memo[S]
        step = straightening_step(S)
        if step is None:
            out = {S: Fraction(1)}
        else:
            out = {}
            for sign, R in step:
                for L, c in rec(R).items():
                    out[L] = out.get(L, 0) + sign * c
            out = {L: c for L, c in out.items() if c}
        memo[S] = out
        return out

    return dict(rec(T))


@lru_cache(maxsize=None)
def _lyndon_columns(ground, mu):
    pres = interval_presentation(ground, mu)
    basis = enumerate_lyn(mu, ground)
    return basis, [pres.normal_form(chain_class(L, None, pres)) for L in basis]


def lyndon_coordinates(T):
    """The same coefficients by exact linear solve against the Lyndon basis."""
    pres = presentation_for(T)
    basis, cols = _lyndon_columns(tuple(sorted(leaves(T))), content(T))
    coeffs = solve(cols, pres.normal_form(chain_class(T, None, pres)))
    if coeffs is None:
        raise ArithmeticError("class outside the span of the Lyndon classes")
    return {L: c for L, c in zip(basis, coeffs) if c}


@dataclass
class FullCohomologyReport:
    n: int
    k: int
    dimension: int
    lyndon_root_basis_ok: bool
    comb_spans: bool
    comb_independent: bool
    root_sum_relations_ok: bool = True
    sizes: dict = field(default_factory=dict)


def full_poset_cohomology(n, k):
    """Top cohomology of the whole poset with its minimum removed."""
    P = build_poset(n, k)
    pres = CohomologyPresentation(P, drop_top=False)
    lyn, combs = [], []
    for mu in weak_compositions(n - 1, k):
        lyn += [T for T in enumerate_lyn(mu) if T.color != 1]
        combs += [T for T in enumerate_comb(mu) if T.color != k]
    vec = lambda T: pres.chain_vector(chain_from_tree(T))
    lyn_ok = verify_basis([vec(T) for T in lyn], pres)
    comb_rank = _rank_mod([vec(T) for T in combs], pres)
    root_ok = True
    for mu in weak_compositions(n - 1, k):
        for T in enumerate_lyn(mu):
            if T.color != 1:
                continue
            total = {}
            for r in range(1, k + 1):
                total = add(total, vec(Node(r, T.left, T.right)))
            root_ok &= pres.in_image(total)
    return FullCohomologyReport(
        n=n, k=k, dimension=pres.dimension, lyndon_root_basis_ok=lyn_ok,
        comb_spans=comb_rank == pres.dimension, comb_independent=comb_rank == len(combs),
        root_sum_relations_ok=root_ok, sizes={"lyndon": len(lyn), "comb": len(combs)},
    )


def reduced_cohomology_dims(P, x, y):
    """All reduced cohomology dimensions of the open interval (x, y), degrees -1 upward."""
    inside = [z for z in P.between(x, y) if z not in (x, y)]
    faces = {0: [()]}
    current = [()]
    size = 0
    while current:
        nxt = []
        for f in current:
            last = f[-1] if f else None
            for z in inside:
                if last is None or (z != last and P.leq(last, z)):
                    nxt.append(f + (z,))
        size += 1
        if nxt:
            faces[size] = nxt
        current = nxt
    ranks = {}
    for s in faces:
        if s + 1 not in faces:
            ranks[s] = 0
            continue
        index = {F: i for i, F in enumerate(faces[s + 1])}
        space = RowSpace()
        for f in faces[s]:
            row = {}
            fs = set(f)
            for F, i in index.items():
                if fs <= set(F):
                    pos = next(t for t, z in enumerate(F) if z not in fs)
                    row[i] = -1 if pos % 2 else 1
            space.add(row)
        ranks[s] = space.rank
    dims = {}
    for s in faces:
        dims[s - 1] = len(faces[s]) - ranks[s] - ranks.get(s - 1, 0)
    return dims


def cohen_macaulay_check(P):
    """Every open interval has vanishing reduced cohomology below its top degree."""
    for x in range(len(P)):
        for y in range(len(P)):
            if x == y or not P.leq(x, y):
                continue
            length = P.rank[y] - P.rank[x]
            dims = reduced_cohomology_dims(P, x, y)
            if any(d for i, d in dims.items() if i < length - 2):
                return False, (P.elements[x], P.elements[y], dims)
    return True, None
