"""Generating-function identities for the multicolored free Lie algebra:
the four tree/word e-expansions, weighted Whitney numbers, exterior power
dimensions and the Frobenius characteristics from plethystic inversion."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..core import IntegerPartition, multinomial, partitions, weak_compositions
from .bases import SymFunc, h
from .plethysm import lie_input_series, plethystic_inverse
from .poly import Poly
from .series import EgfX, compose_ordinary, egf_comp_inverse


def lie_egf_input(N, k=None):
    """sum_{n>=1} (-1)^(n-1) h_{n-1}(x) y^n / n!.

    k=None keeps x symbolic (e basis); an integer k gives polynomials in x_1..x_k.
    """
    coeffs = []
    for n in range(1, N + 1):
        c = h(n - 1).to("e") * (-1) ** (n - 1)
        coeffs.append(c if k is None else c.specialize(k))
    zero = SymFunc.zero("e") if k is None else Poly.zero(k)
    return EgfX(coeffs, zero)


@lru_cache(maxsize=None)
def lie_generating_function(N):
    """Symbolic L_0, ..., L_{N-1} (e basis), as coefficients of the compositional inverse."""
    G = egf_comp_inverse(lie_egf_input(N), N)
    return tuple(G.coeffs)


def lie_polynomial(m):
    """L_m(x) in the e basis."""
    return lie_generating_function(m + 1)[m]


def _e_sum(types):
    out = {}
    for lam in types:
        out[tuple(lam)] = out.get(tuple(lam), 0) + 1
    return SymFunc("e", out)


@dataclass
class FourWays:
    n: int
    lyndon: SymFunc
    ascending_adjacent: SymFunc
    terminally_nested: SymFunc
    comb: SymFunc
    inverse: SymFunc
    specialized: Poly = None

    @property
    def agree(self):
        vals = [self.lyndon, self.ascending_adjacent, self.terminally_nested, self.comb]
        return all(v.coeffs == self.inverse.coeffs for v in vals)

    @property
    def e_positive(self):
        return all(c >= 0 and c.denominator == 1 for c in self.inverse.coeffs.values())


def l_n_fourways(n, k=None):
    """L_{n-1}(x) computed from tree types, Stirling word types and the compositional inverse."""
    from ..stirling import aa_type, enumerate_stirling, tn_type
    from ..trees import enumerate_nor, tree_types

    if n < 2:
        raise ValueError("need n >= 2")
    reports = [tree_types(T) for T in enumerate_nor(range(1, n + 1))]
    words = enumerate_stirling(range(1, n))
    out = FourWays(
        n=n,
        lyndon=_e_sum(r.lyn_type for r in reports),
        ascending_adjacent=_e_sum(aa_type(w) for w in words),
        terminally_nested=_e_sum(tn_type(w) for w in words),
        comb=_e_sum(r.comb_type for r in reports),
        inverse=lie_polynomial(n - 1),
    )
    if k is not None:
        out.specialized = out.inverse.specialize(k)
    return out


def gamma_coefficients(coeffs):
    """Write a palindromic polynomial of degree d (coefficient list) as
    sum_i g_i t^i (1+t)^(d-2i); returns the list g."""
    d = len(coeffs) - 1
    rest = [Fraction(c) for c in coeffs]
    g = []
    for i in range(d // 2 + 1):
        gi = rest[i]
        g.append(gi)
        for j in range(d - 2 * i + 1):
            rest[i + j] -= gi * comb(d - 2 * i, j)
    if any(rest):
        raise ValueError("polynomial is not palindromic of the given degree")
    return g


def two_color_polynomial(n):
    """L_{n-1}(t, 1): coefficient list in t."""
    P = lie_polynomial(n - 1).specialize(2)
    return P.substitute_univariate([[0, 1], [1]])


def whitney_formula(n, r, k=None):
    """(w_r, W_r) from the closed formulas; symbolic SymFuncs, or Polys in k variables."""
    w = SymFunc.zero("e")
    W = SymFunc.zero("e")
    for lam in partitions(n):
        if len(lam) != n - r:
            continue
        lam = IntegerPartition(lam)
        weight = Fraction(multinomial(n, lam), lam.mult_factorial())
        Lprod = SymFunc.one("e")
        Hprod = SymFunc.one("e")
        for part in lam:
            Lprod = Lprod * lie_polynomial(part - 1)
            Hprod = Hprod * h(part - 1).to("e")
        w = w + Lprod * weight
        W = W + Hprod * weight
    w = w * (-1) ** r
    if k is None:
        return w, W
    return w.specialize(k), W.specialize(k)


def whitney_matrices(n, k=None):
    """Matrices A, B indexed 0..n-1, with entries
    A[i][j] = (-1)^(i-j) sum_{lam |- i, l(lam) = j} (i choose lam)/m(lam)! L_{lam - 1}
    and B the same with h in place of L."""
    A = [[None] * n for _ in range(n)]
    B = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            a = SymFunc.zero("e")
            b = SymFunc.zero("e")
            if i == 0 and j == 0:
                a = b = SymFunc.one("e")
            elif i > 0:
                for lam in partitions(i):
                    if len(lam) != j:
                        continue
                    lam = IntegerPartition(lam)
                    weight = Fraction(multinomial(i, lam), lam.mult_factorial())
                    La, Hb = SymFunc.one("e"), SymFunc.one("e")
                    for part in lam:
                        La = La * lie_polynomial(part - 1)
                        Hb = Hb * h(part - 1).to("e")
                    a = a + La * weight
                    b = b + Hb * weight
                a = a * (-1) ** (i - j)
            if k is not None:
                a, b = a.specialize(k), b.specialize(k)
            A[i][j], B[i][j] = a, b
    return A, B


def _matmul(A, B, zero):
    n = len(A)
    return [[sum((A[i][t] * B[t][j] for t in range(n)), zero) for j in range(n)] for i in range(n)]


def whitney_matrix_check(n, k=None):
    """A*B = B*A = I, symbolically (k=None) or in k variables."""
    A, B = whitney_matrices(n, k)
    zero = SymFunc.zero("e") if k is None else Poly.zero(k)
    one = SymFunc.one("e") if k is None else Poly.constant(k, 1)
    for M in (_matmul(A, B, zero), _matmul(B, A, zero)):
        for i in range(n):
            for j in range(n):
                if M[i][j] != (one if i == j else zero):
                    return False
    return True


def evaluate_matrix(M, values):
    return [[entry.evaluate(values) for entry in row] for row in M]


def exterior_dims(n, k):
    """{r: dim of the r-th exterior power of the n-multilinear part of the free Lie algebra on k brackets}."""
    out = {}
    for r in range(1, n + 1):
        total = Fraction(0)
        for lam in partitions(n):
            if len(lam) != r:
                continue
            lam = IntegerPartition(lam)
            term = Fraction(multinomial(n, lam), lam.mult_factorial())
            for part in lam:
                term *= lie_polynomial(part - 1).evaluate_ones(k)
            total += term
        out[r] = total
    return out


def exterior_total_expformula(n, k):
    """n! [y^n] exp(sum_i L_{i-1}(1^k) y^i / i!)."""
    a = [lie_polynomial(i - 1).evaluate_ones(k) / factorial(i) for i in range(1, n + 1)]
    # exp(A) - 1 = sum_m A^m / m!
    expo = [Fraction(1, factorial(m)) for m in range(1, n + 1)]
    series = compose_ordinary(expo, a)
    return series[n - 1] * factorial(n)


@dataclass
class FrobeniusTable:
    n: int
    characters: dict
    dimensions: dict
    c_lambda: dict = field(default_factory=dict)
    schur_expansions: dict = field(default_factory=dict)
    schur_positive: dict = field(default_factory=dict)


@lru_cache(maxsize=None)
def lie_plethystic_series(N):
    """Sum over n <= N of sum_mu ch Lie(mu) x^mu, as minus the plethystic inverse."""
    return -plethystic_inverse(lie_input_series(N), N)


def frobenius_table(n, k, N=None):
    """Characters ch Lie(mu) for |mu| = n-1 with support in [k], dimensions via E,
    and the e(x)-coefficients C_lambda(y) with their Schur expansions."""
    N = n if N is None else N
    if N < n:
        raise ValueError(f"truncation {N} shorter than degree {n}")
    series = lie_plethystic_series(N).degree(n)
    m_coeffs = {}
    e_coeffs = {}
    for yl in series.y_partitions():
        xf = series.x_coefficient(yl)
        for lam, c in xf.to("m").coeffs.items():
            m_coeffs.setdefault(lam, {})[yl] = c
        for lam, c in xf.to("e").coeffs.items():
            e_coeffs.setdefault(lam, {})[yl] = c
    characters, dims = {}, {}
    for mu in weak_compositions(n - 1, k):
        lam = tuple(sorted((t for t in mu if t), reverse=True))
        ch = SymFunc("p", m_coeffs.get(lam, {}))
        characters[mu] = ch
        dims[mu] = ch.coefficient((1,) * n) * factorial(n)
    table = FrobeniusTable(n=n, characters=characters, dimensions=dims)
    for lam, coeffs in sorted(e_coeffs.items()):
        C = SymFunc("p", coeffs)
        table.c_lambda[lam] = C
        s = C.to("s")
        table.schur_expansions[lam] = s
        table.schur_positive[lam] = s.is_nonnegative()
    return table
