"""Command-line front end.

    multilie dims --n 4 --k 2
    multilie verify --suite el
    multilie hasse --n 3 --k 3 --format dot
    multilie symfun egf-inverse --k 2 --degree 6
    multilie tree "[[2,5]_2,3]_1"
    multilie word 1221
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .config import load_bounds
from .core import BoundExceeded, WeakComposition, weak_compositions
from .trees import Leaf, Node, leaves

JSON_SCHEMA_VERSION = 1


class BracketSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokens(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(1) if m.group(1) else m.start(2)
        out.append((m.group(1) or m.group(2), start))
        pos = m.end()
    out.append(("", len(text)))
    return out


def parse_bracket_expression(text):
    """expr := label | "[" expr "," expr "]" "_" color, whitespace ignored."""
    toks = _tokens(text)
    i = 0

    def expect(tok):
        nonlocal i
        got, pos = toks[i]
        if got != tok:
            raise BracketSyntaxError(f"expected {tok!r}, found {got or 'end of input'!r}", pos)
        i += 1

    def number(what):
        nonlocal i
        got, pos = toks[i]
        if not got.isdigit():
            raise BracketSyntaxError(f"expected {what}, found {got or 'end of input'!r}", pos)
        i += 1
        return int(got), pos

    def expr():
        nonlocal i
        if toks[i][0] == "[":
            i += 1
            left = expr()
            expect(",")
            right = expr()
            expect("]")
            expect("_")
            color, pos = number("color")
            if color < 1:
                raise BracketSyntaxError("color must be at least 1", pos)
            return Node(color, left, right)
        label, _ = number("leaf label")
        return Leaf(label)

    T = expr()
    if toks[i][0]:
        raise BracketSyntaxError(f"unexpected {toks[i][0]!r}", toks[i][1])
    labels = leaves(T)
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise ValueError(f"duplicate leaf label(s): {', '.join(map(str, dup))}")
    return T


def parse_mu(text):
    return WeakComposition(int(t) for t in text.replace(" ", "").split(",") if t != "")


def partition_key(parts):
    return ",".join(map(str, parts))


def _number(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else str(c)


def _symfunc_json(f):
    return {"basis": f.basis,
            "coefficients": {partition_key(lam): _number(c) for lam, c in sorted(f.coeffs.items())}}


def _poly_json(P):
    return {partition_key(e): _number(c) for e, c in sorted(P.terms.items())}


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps({"schema": JSON_SCHEMA_VERSION, **payload}, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _table(headers, rows):
    cells = [list(map(str, headers))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return lines


def cmd_dims(args, bounds):
    from .el import ascent_free_chains
    from .poset import build_interval, mobius_interval
    from .symfunc.identities import lie_polynomial
    from .trees import enumerate_comb, enumerate_lyn

    n, k = args.n, args.k
    if args.mu is not None:
        mus = [parse_mu(args.mu)]
        n = mus[0].size() + 1
        k = max(len(args.mu.split(",")), 1)
    elif n is None or k is None:
        raise ValueError("dims needs --n and --k, or --mu")
    else:
        mus = weak_compositions(n - 1, k)
    bounds.check("trees", n)
    with_interval = n <= bounds.el_interval
    inverse = lie_polynomial(n - 1).specialize(k)
    rows, records, ok_all = [], [], True
    for mu in mus:
        lyn = len(enumerate_lyn(mu))
        rec = {"mu": partition_key(mu.padded(k)), "lyn": lyn, "comb": len(enumerate_comb(mu)),
               "inverse_coefficient": _number(inverse.coefficient(mu.padded(k)))}
        if with_interval:
            P = build_interval(n, mu)
            rec["ascent_free"] = len(ascent_free_chains(P))
            rec["mobius_abs"] = abs(mobius_interval(P))
        checks = [v for key, v in rec.items() if key not in ("mu", "lyn")]
        rec["ok"] = all(v == lyn for v in checks)
        ok_all &= rec["ok"]
        records.append(rec)
        rows.append([rec["mu"], lyn, rec["comb"], rec.get("ascent_free", "-"), rec.get("mobius_abs", "-"),
                     rec["inverse_coefficient"], "PASS" if rec["ok"] else "FAIL"])
    total = sum(r["lyn"] for r in records)
    lines = _table(["mu", "Lyn", "Comb", "ascent-free", "|mobius|", "inverse", "check"], rows)
    lines.append(f"total {total}")
    if not with_interval:
        lines.append(f"(interval columns skipped: n = {n} exceeds el_interval = {bounds.el_interval})")
    _emit(args, lines, {"n": n, "k": k, "rows": records, "total": total, "ok": ok_all})
    return 0 if ok_all else 1


def cmd_verify(args, bounds):
    from .suites import run_suite

    results = run_suite(args.suite, bounds)
    ok = all(r.ok for r in results)
    payload = {"suite": args.suite, "ok": ok,
               "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}
    _emit(args, [r.line() for r in results] + [f"{'PASS' if ok else 'FAIL'} suite {args.suite}"], payload)
    return 0 if ok else 1


def element_label(e, k):
    return e.display(k) if hasattr(e, "display") else str(e)


def hasse_dot(P, name="hasse", colors=None):
    """DOT text; node ids follow the interval's (rank, string) order."""
    from .el import edge_label

    colors = colors or P.k
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for i, e in enumerate(P.elements):
        lines.append(f'  n{i} [label="{element_label(e, colors)}", rank={P.rank[i]}];')
    for i, j in sorted(P.hasse_edges()):
        lines.append(f'  n{i} -> n{j} [label="{edge_label(P.elements[i], P.elements[j])}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_hasse(args, bounds):
    from .el import edge_label
    from .poset import build_interval, build_poset

    if args.mu is not None:
        mu = parse_mu(args.mu)
        n = mu.size() + 1
        bounds.check("whole_poset", n)
        P = build_interval(n, mu)
        colors = max(P.k, len(args.mu.split(",")))
    else:
        if args.n is None or args.k is None:
            raise ValueError("hasse needs --n and --k, or --mu")
        bounds.check("whole_poset", args.n)
        P = build_poset(args.n, args.k, top=args.top)
        colors = args.k
    if args.format == "json":
        payload = {"nodes": [{"id": i, "label": element_label(e, colors), "rank": P.rank[i]} for i, e in enumerate(P.elements)],
                   "edges": [{"source": i, "target": j, "label": str(edge_label(P.elements[i], P.elements[j]))}
                             for i, j in sorted(P.hasse_edges())]}
        _emit(args, [], payload)
    elif args.format == "dot":
        print(hasse_dot(P, colors=colors))
    else:
        for r in range(max(P.rank) + 1):
            row = [element_label(e, colors) for i, e in enumerate(P.elements) if P.rank[i] == r]
            print(f"rank {r} ({len(row)}): " + "  ".join(row))
    return 0


def _symfun_egf_inverse(args):
    from .symfunc.identities import lie_egf_input, lie_generating_function
    from .symfunc.series import egf_comp_inverse

    N = args.degree
    if args.k is None:
        coeffs = lie_generating_function(N)
        lines = [f"L_{m} = {c}" for m, c in enumerate(coeffs)]
        return lines, {"op": "egf-inverse", "degree": N,
                       "coefficients": {str(m): _symfunc_json(c) for m, c in enumerate(coeffs)}}
    G = egf_comp_inverse(lie_egf_input(N, args.k), N)
    values = [G.coefficient(n).evaluate([1] * args.k) for n in range(1, N + 1)]
    return ([", ".join(str(_number(v)) for v in values)],
            {"op": "egf-inverse", "degree": N, "k": args.k, "coefficients": [_number(v) for v in values]})


def _symfun_whitney(args):
    from .symfunc.identities import whitney_formula

    n, k = args.n, args.k
    lines, out = [], {}
    for r in range(n):
        w, W = whitney_formula(n, r, k)
        lines.append(f"r={r}: w = {w}   W = {W}")
        out[str(r)] = {"w": _poly_json(w), "W": _poly_json(W)}
    return lines, {"op": "whitney", "n": n, "k": k, "ranks": out}


def _symfun_exterior(args):
    from .symfunc.identities import exterior_dims

    dims = exterior_dims(args.n, args.k)
    total = sum(dims.values())
    lines = [f"r={r}: {_number(d)}" for r, d in dims.items()] + [f"total {_number(total)}"]
    return lines, {"op": "exterior", "n": args.n, "k": args.k,
                   "dimensions": {str(r): _number(d) for r, d in dims.items()}, "total": _number(total)}


def _symfun_frobenius(args):
    from .symfunc.identities import frobenius_table

    table = frobenius_table(args.n, args.k, max(args.degree, args.n))
    lines = []
    for mu, ch in table.characters.items():
        lines.append(f"mu={partition_key(mu.padded(args.k))}: dim {table.dimensions[mu]}  ch = {ch.to('s')}")
    for lam, s in table.schur_expansions.items():
        flag = "schur-positive" if table.schur_positive[lam] else "NOT schur-positive"
        lines.append(f"C[{partition_key(lam)}] = {s}  ({flag})")
    payload = {
        "op": "frobenius", "n": args.n, "k": args.k,
        "characters": {partition_key(mu.padded(args.k)): _symfunc_json(ch.to("s"))
                       for mu, ch in table.characters.items()},
        "dimensions": {partition_key(mu.padded(args.k)): _number(d) for mu, d in table.dimensions.items()},
        "c_lambda": {partition_key(lam): {**_symfunc_json(s), "schur_positive": table.schur_positive[lam]}
                     for lam, s in table.schur_expansions.items()},
    }
    return lines, payload


def _symfun_plethystic(args):
    from .symfunc.identities import lie_plethystic_series
    from .symfunc.plethysm import lie_input_series, plethystic_inverse

    N = args.degree
    series = lie_plethystic_series(N) if not args.x_free else -plethystic_inverse(lie_input_series(N, False), N)
    lines, out = [], {}
    for d in range(1, N + 1):
        part = series.degree(d)
        terms = {f"{partition_key(x)}|{partition_key(y)}": _number(c) for (x, y), c in sorted(part.terms.items())}
        out[str(d)] = terms
        lines.append(f"degree {d}: {len(terms)} terms")
    return lines, {"op": "plethystic", "degree": N, "x_free": args.x_free, "basis": "p(x)|p(y)", "terms": out}


def _symfun_gamma(args):
    from .symfunc.identities import gamma_coefficients, two_color_polynomial

    coeffs = two_color_polynomial(args.n)
    g = gamma_coefficients(coeffs)
    return ([f"L(t,1) = {[_number(c) for c in coeffs]}", f"gamma = {[_number(c) for c in g]}"],
            {"op": "gamma", "n": args.n, "polynomial": [_number(c) for c in coeffs],
             "gamma": [_number(c) for c in g]})


SYMFUN_OPS = {
    "egf-inverse": _symfun_egf_inverse,
    "whitney": _symfun_whitney,
    "exterior": _symfun_exterior,
    "frobenius": _symfun_frobenius,
    "plethystic": _symfun_plethystic,
    "gamma": _symfun_gamma,
}


def cmd_symfun(args, bounds):
    needs_n = {"whitney", "exterior", "frobenius", "gamma"}
    if args.op in needs_n and args.n is None:
        raise ValueError(f"symfun {args.op} needs --n")
    if args.op in {"whitney", "exterior", "frobenius"} and args.k is None:
        raise ValueError(f"symfun {args.op} needs --k")
    if args.op in needs_n:
        bounds.check("symfunc_degree", args.n)
    if args.op in {"plethystic", "frobenius"}:
        bounds.check("plethysm_degree", max(args.degree, args.n or 0))
    else:
        bounds.check("symfunc_degree", args.degree)
    lines, payload = SYMFUN_OPS[args.op](args)
    _emit(args, lines, payload)
    return 0


def cmd_tree(args, bounds):
    from .trees import is_normalized, normalize, tree_sign, tree_types

    T = parse_bracket_expression(args.expression)
    info = {"tree": str(T), "leaves": leaves(T), "normalized": str(normalize(T)), "sign": tree_sign(T)}
    if is_normalized(T):
        from .trees import is_colored_comb, is_colored_lyndon
        rep = tree_types(T)
        info.update(lyndon=is_colored_lyndon(T), comb=is_colored_comb(T),
                    lyn_type=list(rep.lyn_type), comb_type=list(rep.comb_type))
    _emit(args, [f"{key}: {val}" for key, val in info.items()], info)
    return 0


def cmd_word(args, bounds):
    from .stirling import aa_type, format_word, init_perm, is_stirling, parse_word, tn_type, xi

    w = parse_word(args.word)
    if not is_stirling(w):
        raise ValueError(f"{args.word!r} is not a Stirling permutation")
    info = {"word": format_word(w), "aa_type": list(aa_type(w)), "tn_type": list(tn_type(w)),
            "xi": format_word(xi(w)), "init": list(init_perm(w))}
    _emit(args, [f"{key}: {val}" for key, val in info.items()], info)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
    common.add_argument("--dot", dest="format", action="store_const", const="dot", help="same as --format dot")
    common.add_argument("--config", help="key=value file of enumeration bounds")
    common.add_argument("--bound-override", action="append", default=[], metavar="KEY=VAL")

    parser = argparse.ArgumentParser(prog="multilie", description=__doc__.splitlines()[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter, epilog=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="dimension table with cross-checks")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mu")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=["poset", "el", "trees", "stirling", "cohomology", "symfunc", "all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of the poset or a maximal interval")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mu")
    p.add_argument("--top", action="store_true", help="adjoin a maximum")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("symfun", parents=[common], help="symmetric-function computations")
    p.add_argument("op", choices=sorted(SYMFUN_OPS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--x-free", action="store_true")
    p.set_defaults(func=cmd_symfun)

    p = sub.add_parser("tree", parents=[common], help="inspect a bracket expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("word", parents=[common], help="inspect a Stirling permutation")
    p.add_argument("word")
    p.set_defaults(func=cmd_word)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "dot" and args.command != "hasse":
        parser.error("--format dot is only available for hasse")
    for name in ("n", "k", "degree"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            parser.error(f"--{name} must be positive")
    try:
        bounds = load_bounds(args.config, args.bound_override)
        return args.func(args, bounds)
    except (ValueError, KeyError, BoundExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
