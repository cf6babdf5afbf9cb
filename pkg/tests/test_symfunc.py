from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from multilie.core import WeakComposition, partitions, weak_compositions, z_lambda
from multilie.symfunc.bases import SymFunc, e, h, omega, p
from multilie.symfunc.identities import (
    evaluate_matrix, exterior_dims, exterior_total_expformula, frobenius_table, gamma_coefficients,
    l_n_fourways, lie_egf_input, lie_plethystic_series, lie_polynomial, two_color_polynomial,
    whitney_formula, whitney_matrices, whitney_matrix_check,
)
from multilie.symfunc.plethysm import LambdaY, lie_input_series, plethysm, plethystic_inverse
from multilie.symfunc.poly import Poly
from multilie.symfunc.series import EgfX, compose_ordinary, egf_comp_inverse
from multilie.trees import enumerate_lyn

from free_lie_oracle import FreeLieComponent, cycle_type_representative


# ---------- independent oracles ----------

def monomial_oracle(lam, k):
    """m_lam(x_1..x_k) by summing over distinct rearrangements of the padded exponent vector."""
    if len(lam) > k:
        return Poly.zero(k)
    exps = tuple(lam) + (0,) * (k - len(lam))
    total = Poly.zero(k)
    for v in set(permutations(exps)):
        total = total + Poly.monomial(k, v)
    return total


def schur_oracle(lam, k):
    """s_lam(x_1..x_k) as a sum over semistandard tableaux."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    total = Poly.zero(k)
    for filling in product(range(k), repeat=len(cells)):
        T = dict(zip(cells, filling))
        if all(T[(r, c)] <= T[(r, c + 1)] for r, c in cells if (r, c + 1) in T) and \
                all(T[(r, c)] < T[(r + 1, c)] for r, c in cells if (r + 1, c) in T):
            exps = [0] * k
            for v in filling:
                exps[v] += 1
            total = total + Poly.monomial(k, exps)
    return total


def power_oracle(lam, k):
    out = Poly.constant(k, 1)
    for part in lam:
        out = out * sum((Poly.variable(k, i) ** part for i in range(k)), Poly.zero(k))
    return out


def number_mobius(n):
    out, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    return -out if m > 1 else out


def lie_character_oracle(n):
    """(1/n) sum_{d | n} mobius(d) p_d^(n/d)."""
    return SymFunc("p", {(d,) * (n // d): Fraction(number_mobius(d), n) for d in range(1, n + 1) if n % d == 0})


def stirling_first_signed(n):
    s = [[0] * (n + 1) for _ in range(n + 1)]
    s[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            s[i][j] = s[i - 1][j - 1] - (i - 1) * s[i - 1][j]
    return s


def stirling_second(n):
    S = [[0] * (n + 1) for _ in range(n + 1)]
    S[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            S[i][j] = S[i - 1][j - 1] + j * S[i - 1][j]
    return S


# ---------- bases ----------

def test_conversion_examples():
    assert h(2).to("m") == SymFunc("m", {(2,): 1, (1, 1): 1})
    assert e(2).to("p").coeffs == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    assert SymFunc.gen("s", 2, 1).to("h").coeffs == {(2, 1): 1, (3,): -1}


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trips(n):
    for lam in partitions(n):
        for basis in "mehps":
            f = SymFunc.gen(basis, *lam)
            for other in "mehps":
                assert f.to(other).to(basis).coeffs == f.coeffs


@pytest.mark.parametrize("n", range(1, 5))
def test_specializations_match_oracles(n):
    k = 3
    for lam in partitions(n):
        assert SymFunc.gen("m", *lam).specialize(k) == monomial_oracle(lam, k)
        assert SymFunc.gen("s", *lam).specialize(k) == schur_oracle(lam, k)
        assert SymFunc.gen("p", *lam).specialize(k) == power_oracle(lam, k)
        assert SymFunc.gen("h", *lam).evaluate_ones(k) == SymFunc.gen("h", *lam).specialize(k).evaluate([1] * k)


def test_omega_on_power_sums():
    for i in range(1, 7):
        assert omega(p(i)) == p(i) * (-1) ** (i - 1)
    assert omega(h(3)) == e(3)


sym_elements = st.builds(
    lambda basis, lam, c: SymFunc(basis, {lam: c}),
    st.sampled_from("mehps"),
    st.integers(1, 5).flatmap(lambda n: st.sampled_from(list(partitions(n)))),
    st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool),
)


@given(sym_elements, sym_elements)
def test_product_commutes_and_converts(f, g):
    assert f * g == g * f
    assert (f * g).to("p") == f.to("p") * g.to("p")


@given(sym_elements)
def test_omega_is_involution(f):
    assert omega(omega(f)) == f


# ---------- series and the compositional inverse ----------

def test_egf_inverse_ladders():
    N = 7
    for k, expected in ((1, lambda n: factorial(n - 1)), (2, lambda n: n ** (n - 1))):
        G = egf_comp_inverse(lie_egf_input(N, k), N)
        assert [G.coefficient(n).evaluate([1] * k) for n in range(1, N + 1)] == [expected(n) for n in range(1, N + 1)]


def test_egf_inverse_symbolic_degree_three():
    G = egf_comp_inverse(lie_egf_input(4, 2), 4)
    x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    assert G.coefficient(3) == 2 * x1 ** 2 + 5 * x1 * x2 + 2 * x2 ** 2


@pytest.mark.parametrize("k", [None, 1, 2, 3])
def test_egf_inverse_composes_to_identity(k):
    N = 6
    F = lie_egf_input(N, k)
    G = egf_comp_inverse(F, N)
    FG = F.compose(G)
    one = SymFunc.one("e") if k is None else Poly.constant(k, 1)
    assert FG.coefficient(1) == one
    assert all(not FG.coefficient(n) for n in range(2, N + 1))


def test_rational_series_inverse():
    # y/(1-y) has inverse y/(1+y)
    F = EgfX.from_ordinary([Fraction(1)] * 6)
    G = egf_comp_inverse(F)
    assert G.ordinary() == [Fraction((-1) ** n) for n in range(6)]
    assert compose_ordinary(F.ordinary(), G.ordinary()) == [1, 0, 0, 0, 0, 0]


def test_lie_polynomial_small():
    assert lie_polynomial(1) == e(1)
    assert lie_polynomial(2) == e(2) + 2 * SymFunc.gen("e", 1, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_four_ways(n):
    rep = l_n_fourways(n, 2)
    assert rep.agree and rep.e_positive
    assert rep.specialized.evaluate([1, 1]) == n ** (n - 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_gamma_positivity(n):
    coeffs = two_color_polynomial(n)
    assert coeffs == coeffs[::-1]
    g = gamma_coefficients(coeffs)
    assert all(c >= 0 for c in g)
    d = len(coeffs) - 1
    rebuilt = [sum(g[i] * comb(d - 2 * i, j - i) for i in range(len(g)) if 0 <= j - i <= d - 2 * i)
               for j in range(d + 1)]
    assert rebuilt == coeffs


def test_gamma_rejects_non_palindromic():
    with pytest.raises(ValueError):
        gamma_coefficients([1, 2])


# ---------- Whitney numbers and exterior powers ----------

def test_whitney_formula_examples():
    x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    w2, _ = whitney_formula(3, 2, 2)
    _, W1 = whitney_formula(3, 1, 2)
    assert w2 == 2 * x1 ** 2 + 5 * x1 * x2 + 2 * x2 ** 2
    assert W1 == 3 * (x1 + x2)
    assert whitney_formula(4, 0, 3) == (1, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_whitney_matrices_inverse(n):
    assert whitney_matrix_check(n)
    assert whitney_matrix_check(n, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_whitney_matrices_specialize(n):
    A, B = whitney_matrices(n, 2)
    s, S = stirling_first_signed(n), stirling_second(n)
    assert evaluate_matrix(A, [1, 0]) == [[s[i][j] for j in range(n)] for i in range(n)]
    assert evaluate_matrix(B, [1, 0]) == [[S[i][j] for j in range(n)] for i in range(n)]
    A2, B2 = evaluate_matrix(A, [1, 1]), evaluate_matrix(B, [1, 1])
    for i in range(1, n):
        for j in range(1, n):
            assert A2[i][j] == (-1) ** (i - j) * comb(i - 1, j - 1) * i ** (i - j) if j <= i else A2[i][j] == 0
            assert B2[i][j] == (comb(i, j) * j ** (i - j) if j <= i else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_exterior_totals(n):
    assert sum(exterior_dims(n, 1).values()) == factorial(n) == exterior_total_expformula(n, 1)
    assert sum(exterior_dims(n, 2).values()) == (n + 1) ** (n - 1) == exterior_total_expformula(n, 2)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3)])
def test_exterior_matches_whitney(n, k):
    dims = exterior_dims(n, k)
    assert dims[1] == lie_polynomial(n - 1).evaluate_ones(k)
    for r in range(1, n + 1):
        w, _ = whitney_formula(n, n - r, k)
        assert abs(w.evaluate([1] * k)) == dims[r]


# ---------- plethysm ----------

def Y(f, N=6):
    return LambdaY.from_y(f, N)


def test_plethysm_examples():
    assert plethysm(Y(p(2)), Y(p(3))) == Y(p(6))
    assert plethysm(Y(h(2)), -Y(p(1))) == Y(e(2))
    for lam in partitions(4):
        f = Y(SymFunc.gen("s", *lam))
        assert plethysm(f, LambdaY.p1(6)) == f


lambda_y = st.builds(
    lambda terms: LambdaY(4, {((), lam): c for lam, c in terms}),
    st.lists(st.tuples(st.integers(1, 3).flatmap(lambda n: st.sampled_from(list(partitions(n)))),
                       st.integers(-2, 2)), min_size=1, max_size=3),
)


@given(lambda_y, lambda_y, lambda_y)
def test_plethysm_associative(f, g, k):
    assert plethysm(plethysm(f, g), k) == plethysm(f, plethysm(g, k))


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(partitions(n)))), lambda_y)
def test_negation_rule(lam, g):
    f = Y(SymFunc.gen("h", *lam), 4)
    n = sum(lam)
    assert plethysm(f, -g) == plethysm(f.omega_y(), g) * (-1) ** n


def test_plethysm_with_coefficients_associative():
    F = lie_input_series(4)
    g = LambdaY(4, {((1,), (1,)): 1, ((), (2,)): 1})
    k = LambdaY(4, {((2,), (1,)): 1})
    assert plethysm(plethysm(F, g), k) == plethysm(F, plethysm(g, k))


def test_x_free_inverse_matches_classical_lie_character():
    N = 6
    G = plethystic_inverse(lie_input_series(N, with_x=False), N)
    for n in range(1, N + 1):
        assert (-G).degree(n).y_part() == lie_character_oracle(n)
    assert (-G).degree(2).y_part() == e(2)


@pytest.mark.parametrize("with_x", [False, True])
def test_plethystic_inverse_two_sided(with_x):
    N = 6
    F = lie_input_series(N, with_x)
    G = plethystic_inverse(F, N)
    assert plethysm(F, G) == LambdaY.p1(N)
    assert plethysm(G, F) == LambdaY.p1(N)


def test_plethystic_inverse_rejects_bad_input():
    with pytest.raises(ValueError):
        plethystic_inverse(LambdaY(3, {((), (2,)): 1}), 3)
    with pytest.raises(ValueError):
        plethysm(Y(p(1)), LambdaY(3, {((), ()): 1}))


def _e_series(F, N):
    spec = F.e_specialization()
    return [spec.get(d, SymFunc.zero("p")) for d in range(1, N + 1)]


def test_e_specialization_commutes():
    N = 6
    F = lie_input_series(N)
    G = plethystic_inverse(F, N)
    lhs = _e_series(plethysm(F, G), N)
    rhs = compose_ordinary(_e_series(F, N), _e_series(G, N), SymFunc.zero("p"))
    assert lhs == rhs


def test_e_specialization_reproduces_egf_inverse():
    N = 6
    spec = lie_plethystic_series(N).e_specialization()
    for n in range(1, N + 1):
        assert spec[n] * factorial(n) == lie_polynomial(n - 1)


def test_frobenius_examples():
    t2 = frobenius_table(2, 1)
    assert t2.characters[(1,)] == e(2)
    t3 = frobenius_table(3, 2)
    assert t3.characters[(2,)] == SymFunc.gen("s", 2, 1)
    assert t3.characters[(2,)] == lie_character_oracle(3)
    with pytest.raises(ValueError):
        frobenius_table(4, 2, 3)


@pytest.mark.parametrize("n", range(2, 6))
def test_frobenius_dimensions_count_lyndon_trees(n):
    table = frobenius_table(n, 3)
    for mu in weak_compositions(n - 1, 3):
        assert table.dimensions[mu] == len(enumerate_lyn(mu))


def test_one_color_character_is_classical():
    for n in range(2, 6):
        assert frobenius_table(n, 1).characters[(n - 1,)] == lie_character_oracle(n)


# ---------- characters from the defining relations ----------

def _oracle_character(n, lam):
    colors = tuple(c for c, m in enumerate(lam, start=1) for _ in range(m))
    F = FreeLieComponent(n, colors)
    return SymFunc("p", {rho: Fraction(F.trace(cycle_type_representative(rho)), z_lambda(rho))
                         for rho in partitions(n)})


def zero_one_count(rows, cols):
    """[x^cols] e_rows, as the number of 0/1 matrices with these row and column sums."""
    choices = [[c for c in product((0, 1), repeat=len(cols)) if sum(c) == r] for r in rows]
    return sum(all(sum(col) == cols[j] for j, col in enumerate(zip(*mat))) for mat in product(*choices))


@pytest.mark.parametrize("n", range(2, 6))
def test_characters_match_free_lie_relations(n):
    table = frobenius_table(n, n - 1)
    for lam in partitions(n - 1):
        assert table.characters[WeakComposition(lam)] == _oracle_character(n, lam), lam


def test_e_coefficients_from_free_lie_relations():
    n = 5
    lams = list(partitions(n - 1))
    ch = {lam: _oracle_character(n, lam) for lam in lams}
    M = {(lam, mu): zero_one_count(lam, mu) for lam in lams for mu in lams}
    solved, unknown, equations = {}, list(lams), list(lams)
    while unknown:
        mu, lam = next((mu, [lam for lam in unknown if M[(lam, mu)]][0]) for mu in equations
                       if sum(1 for lam in unknown if M[(lam, mu)]) == 1)
        rest = sum((c * M[(other, mu)] for other, c in solved.items()), SymFunc.zero("p"))
        solved[lam] = (ch[mu] - rest) * Fraction(1, M[(lam, mu)])
        unknown.remove(lam)
        equations.remove(mu)
    table = frobenius_table(n, n - 1)
    assert solved == table.c_lambda
    # the e-coefficient at (2,2) has a negative Schur coefficient
    assert solved[(2, 2)].to("s").coeffs[(3, 1, 1)] == -1
    assert not table.schur_positive[(2, 2)]
