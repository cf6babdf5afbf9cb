"""Named verification suites driven by the command line.  Each check returns
a CheckResult; failures carry a short counterexample description."""

from dataclasses import dataclass
from math import factorial

from .config import Bounds
from .core import WeakComposition, double_factorial, weak_compositions


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        tail = f"  ({self.detail})" if self.detail and not self.ok else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


def _first_failure(cases):
    """cases yields (label, ok); returns (all ok, first failing label)."""
    for label, ok in cases:
        if not ok:
            return False, str(label)
    return True, ""


def _check(name, cases):
    ok, detail = _first_failure(cases)
    return CheckResult(name, ok, detail)


def _shapes(max_n, max_k):
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            yield n, k


def suite_poset(bounds):
    from .poset import build_interval, build_poset, check_uniformity, mobius_interval, whitney_direct
    from .symfunc.identities import whitney_formula
    from .trees import enumerate_lyn

    n_max = min(bounds.cohomology, 5)
    out = [_check(
        f"mobius = (-1)^(n-1) |Lyn| (n<={n_max}, k<={bounds.colors})",
        ((f"n={n} mu={mu}",
          mobius_interval(build_interval(n, mu)) == (-1) ** (n - 1) * len(enumerate_lyn(mu)))
         for n, k in _shapes(n_max, bounds.colors) for mu in weak_compositions(n - 1, k) if n > 1),
    )]
    u_max = min(bounds.uniformity, 4)
    out.append(_check(
        f"uniformity (n<={u_max}, k<={bounds.colors})",
        ((f"n={n} k={k}", check_uniformity(n, k, bounds.uniformity))
         for n, k in _shapes(u_max, bounds.colors)),
    ))
    w_max = min(bounds.whole_poset, 4)

    def whitney_cases():
        for n, k in _shapes(w_max, bounds.colors):
            if n < 2:
                continue
            w, W = whitney_direct(n, k, bounds.whole_poset)
            for r in range(n):
                fw, fW = whitney_formula(n, r, k)
                yield f"n={n} k={k} r={r}", fw == w[r] and fW == W[r]

    out.append(_check(f"whitney direct = formula (n<={w_max}, k<={bounds.colors})", whitney_cases()))
    out.append(_check("hasse of whole poset n=3, k=3 has 16 elements",
                      [("size", len(build_poset(3, 3)) == 16)]))
    return out


def suite_el(bounds):
    from .el import ascent_free_chains, chain_from_tree, decreasing_extension, verify_el
    from .poset import build_interval, build_poset
    from .trees import enumerate_lyn

    def whole():
        for n, k in _shapes(bounds.el_whole, bounds.colors):
            report = verify_el(build_poset(n, k, top=True))
            yield f"n={n} k={k}: {report.counterexample} {report.reason}", report.ok

    def intervals():
        n = bounds.el_interval
        for mu in weak_compositions(n - 1, 2):
            report = verify_el(build_interval(n, mu))
            yield f"mu={mu}: {report.counterexample} {report.reason}", report.ok

    def ascent_free():
        for n, k in _shapes(min(bounds.el_interval, 5), 2):
            if n < 2:
                continue
            for mu in weak_compositions(n - 1, k):
                P = build_interval(n, mu)
                found = {c.elements for c in ascent_free_chains(P)}
                expected = {chain_from_tree(T, decreasing_extension(T)).elements for T in enumerate_lyn(mu)}
                yield f"mu={mu}", found == expected

    return [
        _check(f"EL on whole bounded poset (n<={bounds.el_whole}, k<={bounds.colors})", whole()),
        _check(f"EL on maximal intervals n={bounds.el_interval}, k=2", intervals()),
        _check("ascent-free chains = chains of Lyndon trees (k<=2)", ascent_free()),
    ]


def suite_trees(bounds):
    from .trees import enumerate_comb, enumerate_lyn, enumerate_nor, is_colored_comb, is_colored_lyndon

    def nor_counts():
        for n in range(1, bounds.trees + 1):
            yield f"n={n}", len(enumerate_nor(range(1, n + 1))) == double_factorial(2 * n - 3)

    def families():
        for n, k in _shapes(min(bounds.cohomology, 5), bounds.colors):
            if n < 2:
                continue
            for mu in weak_compositions(n - 1, k):
                lyn, combs = enumerate_lyn(mu), enumerate_comb(mu)
                ok = (len(lyn) == len(combs) == len(set(lyn))
                      and all(map(is_colored_lyndon, lyn)) and all(map(is_colored_comb, combs)))
                yield f"mu={mu}", ok

    def dimension_totals():
        for n in range(2, min(bounds.trees, 6) + 1):
            total = sum(len(enumerate_lyn(mu)) for mu in weak_compositions(n - 1, 2))
            yield f"n={n}", total == n ** (n - 1)

    def one_color():
        for n in range(2, min(bounds.trees, 6) + 1):
            yield f"n={n}", len(enumerate_lyn((n - 1,))) == factorial(n - 1)

    return [
        _check(f"|Nor_n| = (2n-3)!! (n<={bounds.trees})", nor_counts()),
        _check("|Lyn_mu| = |Comb_mu|, predicates hold", families()),
        _check("sum over mu of |Lyn_mu| with two colors = n^(n-1)", dimension_totals()),
        _check("one color gives (n-1)!", one_color()),
    ]


def suite_stirling(bounds):
    from .stirling import (aa_pairs, aa_pairs_by_blocks, aa_type, enumerate_stirling, gamma,
                           gamma_from_reduced, gamma_tilde, gamma_tilde_postorder, init_perm, tn_pairs,
                           tn_pairs_by_blocks, tn_type, xi, xi_inv)
    from .trees import enumerate_bt, enumerate_nor, leaves, tree_types

    m = bounds.stirling

    def counts():
        for n in range(1, m + 1):
            yield f"n={n}", len(enumerate_stirling(range(1, n + 1))) == double_factorial(2 * n - 1)

    def xi_cases():
        for n in range(1, m):
            words = enumerate_stirling(range(1, n + 1))
            images = [xi(w) for w in words]
            yield f"n={n} bijective", sorted(images) == words
            for w, v in zip(words, images):
                yield f"{w}", xi_inv(v) == w and tn_type(v) == aa_type(w) and init_perm(v) == init_perm(w)

    def init_of_planar():
        for n in range(2, min(m, 5) + 1):
            for T in enumerate_bt(WeakComposition((n - 1,))):
                yield f"{T}", tuple(init_perm(gamma_tilde(T))) == tuple(leaves(T))

    def pair_definitions():
        for n in range(1, m):
            for w in enumerate_stirling(range(1, n + 1)):
                yield f"{w}", aa_pairs(w) == aa_pairs_by_blocks(w) and tn_pairs(w) == tn_pairs_by_blocks(w)

    def gamma_cases():
        for n in range(2, m + 1):
            trees = enumerate_nor(range(1, n + 1))
            images = [gamma(T) for T in trees]
            yield f"n={n} bijective", len(set(images)) == len(trees) == double_factorial(2 * n - 3)
            for T, w in zip(trees, images):
                rep = tree_types(T)
                yield f"{T}", (aa_type(w) == rep.lyn_type and tn_type(w) == rep.comb_type
                               and gamma_tilde(T) == gamma_tilde_postorder(T)
                               and gamma_from_reduced(w) == T)

    return [
        _check(f"|Q_n| = (2n-1)!! (n<={m})", counts()),
        _check("AA/TN pairs: adjacency = block definition", pair_definitions()),
        _check("xi bijective, inverse, TN(xi) = AA, init preserved", xi_cases()),
        _check("init of the recursive word is the leaf word", init_of_planar()),
        _check("gamma bijective, AA = Lyn type, TN = Comb type", gamma_cases()),
    ]


def suite_cohomology(bounds):
    from .cohomology import (full_poset_cohomology, lemma_sign_check, linear_extensions,
                             presentation_for, top_cohomology_dim, verify_basis, chain_class)
    from .el import decreasing_extension
    from .poset import build_interval
    from .trees import enumerate_bt, enumerate_comb, enumerate_lyn

    def bases():
        for n, k in _shapes(min(bounds.cohomology, 5), min(bounds.colors, 3)):
            if n < 2 or (k == 3 and n > 4) or k == 1 and n > 4:
                continue
            for mu in weak_compositions(n - 1, k):
                lyn, combs = enumerate_lyn(mu), enumerate_comb(mu)
                pres = presentation_for(lyn[0])
                dim = top_cohomology_dim(build_interval(n, mu))
                ok = (dim == len(lyn) == len(combs)
                      and verify_basis([chain_class(T, decreasing_extension(T), pres) for T in lyn], pres)
                      and verify_basis([chain_class(T, None, pres) for T in combs], pres))
                yield f"mu={mu}", ok

    def lemma():
        n = min(bounds.cohomology, 4)
        for mu in weak_compositions(n - 1, 2):
            for T in enumerate_bt(mu):
                for tau in linear_extensions(T):
                    yield f"{T} {tau}", lemma_sign_check(T, tau)

    def full():
        for n, k in _shapes(min(bounds.full_cohomology, 3), 3):
            if n < 2 or k < 2:
                continue
            rep = full_poset_cohomology(n, k)
            yield f"n={n} k={k}", rep.lyndon_root_basis_ok and rep.comb_spans and rep.root_sum_relations_ok

    return [
        _check("Lyndon and comb chains are bases of top cohomology", bases()),
        _check("sign change under linear extensions (n<=4, k=2)", lemma()),
        _check("whole-poset cohomology: Lyndon basis, comb span, root-sum relations", full()),
    ]


def suite_symfunc(bounds):
    from .core import partitions
    from .symfunc.bases import SymFunc
    from .symfunc.identities import (frobenius_table, gamma_coefficients, l_n_fourways, lie_egf_input,
                                     two_color_polynomial, whitney_matrix_check)
    from .symfunc.plethysm import LambdaY, lie_input_series, plethysm, plethystic_inverse
    from .symfunc.series import egf_comp_inverse
    from .trees import enumerate_lyn

    d = bounds.symfunc_degree

    def conversions():
        for n in range(1, min(d, 6) + 1):
            for lam in partitions(n):
                for basis in ("e", "h", "p", "s"):
                    f = SymFunc.gen(basis, *lam)
                    yield f"{basis}{lam}", all(f.to(b).to(basis).coeffs == f.coeffs for b in "mehps")

    def fourways():
        for n in range(2, d + 1):
            rep = l_n_fourways(n)
            yield f"n={n}", rep.agree and rep.e_positive

    def ladders():
        for k, expected in ((1, lambda n: factorial(n - 1)), (2, lambda n: n ** (n - 1))):
            G = egf_comp_inverse(lie_egf_input(d, k), d)
            for n in range(1, d + 1):
                yield f"k={k} n={n}", G.coefficient(n).evaluate([1] * k) == expected(n)

    def gammas():
        for n in range(2, d + 1):
            yield f"n={n}", all(g >= 0 for g in gamma_coefficients(two_color_polynomial(n)))

    def whitney():
        for n in range(1, min(d, 6) + 1):
            yield f"n={n}", whitney_matrix_check(n)

    def plethystic():
        N = bounds.plethysm_degree
        F = lie_input_series(N)
        G = plethystic_inverse(F, N)
        p1 = LambdaY.p1(N)
        yield "F[G] = p1", plethysm(F, G) == p1
        yield "G[F] = p1", plethysm(G, F) == p1
        for n in range(2, min(N, 5) + 1):
            table = frobenius_table(n, 3, N)
            for mu, dim in table.dimensions.items():
                yield f"mu={mu}", dim == len(enumerate_lyn(mu))

    return [
        _check("basis round trips (degree <= 6)", conversions()),
        _check(f"four e-expansions agree and are e-positive (n<={d})", fourways()),
        _check("compositional inverse: (n-1)! and n^(n-1)", ladders()),
        _check("two-color specialization is gamma-positive", gammas()),
        _check("Whitney matrices are inverse", whitney()),
        _check("plethystic inverse and E-dimensions", plethystic()),
    ]


SUITES = {
    "poset": suite_poset,
    "el": suite_el,
    "trees": suite_trees,
    "stirling": suite_stirling,
    "cohomology": suite_cohomology,
    "symfunc": suite_symfunc,
}


def run_suite(name, bounds=None):
    bounds = bounds or Bounds()
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](bounds)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return SUITES[name](bounds)
