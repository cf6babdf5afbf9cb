"""Symmetric functions in y whose coefficients are symmetric functions in x,
truncated by y-degree, with plethysm and plethystic inversion.

An element is stored as {(x-partition, y-partition): rational}, meaning the
sum of c * p_xpart(x) * p_ypart(y).  In this basis p_k[.] just multiplies
every part by k (the coefficient alphabet x is raised to k-th powers too).
"""

from fractions import Fraction

from ..core import partitions, z_lambda
from .bases import SymFunc


def _union(a, b):
    return tuple(sorted(a + b, reverse=True))


class LambdaY:
    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        self.N = N
        self.terms = {}
        for (xl, yl), c in (terms or {}).items():
            xl = tuple(sorted((t for t in xl if t), reverse=True))
            yl = tuple(sorted((t for t in yl if t), reverse=True))
            if sum(yl) <= N and c:
                key = (xl, yl)
                self.terms[key] = self.terms.get(key, 0) + Fraction(c)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def from_y(cls, f, N, x_coeff=None):
        """Lift a symmetric function of y (SymFunc); optionally multiply by a SymFunc of x."""
        xf = SymFunc("p", {(): 1}) if x_coeff is None else x_coeff.to("p")
        terms = {}
        for yl, c in f.to("p").coeffs.items():
            for xl, d in xf.coeffs.items():
                terms[(xl, yl)] = terms.get((xl, yl), 0) + c * d
        return cls(N, terms)

    @classmethod
    def p1(cls, N):
        return cls(N, {((), (1,)): 1})

    def _match(self, other):
        return min(self.N, other.N)

    def __add__(self, other):
        N = self._match(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LambdaY(N, out)

    def __neg__(self):
        return LambdaY(self.N, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LambdaY):
            return LambdaY(self.N, {k: v * other for k, v in self.terms.items()})
        N = self._match(other)
        out = {}
        for (x1, y1), c1 in self.terms.items():
            d1 = sum(y1)
            for (x2, y2), c2 in other.terms.items():
                if d1 + sum(y2) > N:
                    continue
                key = (_union(x1, x2), _union(y1, y2))
                out[key] = out.get(key, 0) + c1 * c2
        return LambdaY(N, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        N = self._match(other)
        return self.truncate(N).terms == other.truncate(N).terms

    def truncate(self, N):
        return LambdaY(N, {k: v for k, v in self.terms.items() if sum(k[1]) <= N})

    def degree(self, d):
        """Homogeneous y-degree d part."""
        return LambdaY(self.N, {k: v for k, v in self.terms.items() if sum(k[1]) == d})

    def has_constant_term(self):
        return any(not yl for _, yl in self.terms)

    def adams(self, k):
        """p_k[self]: scale every part of both partitions by k."""
        return LambdaY(self.N, {(tuple(k * t for t in xl), tuple(k * t for t in yl)): v
                                for (xl, yl), v in self.terms.items()})

    def omega_y(self):
        """omega acting on the y alphabet only."""
        return LambdaY(self.N, {(xl, yl): v * (-1) ** (sum(yl) - len(yl))
                                for (xl, yl), v in self.terms.items()})

    def x_coefficient(self, yl):
        """The x-symmetric function multiplying p_yl(y), in the p basis."""
        yl = tuple(yl)
        return SymFunc("p", {xl: v for (xl, y), v in self.terms.items() if y == yl})

    def y_partitions(self):
        return sorted({yl for _, yl in self.terms})

    def e_specialization(self):
        """E: p_1(y) -> y and p_i(y) -> 0 for i > 1; returns {degree: x-SymFunc in p}."""
        out = {}
        for (xl, yl), v in self.terms.items():
            if all(t == 1 for t in yl):
                d = len(yl)
                out.setdefault(d, {})
                out[d][xl] = out[d].get(xl, 0) + v
        return {d: SymFunc("p", c) for d, c in sorted(out.items())}

    def specialize_x_ones(self, k):
        """Set x = (1^k): p_j(x) -> k."""
        out = {}
        for (xl, yl), v in self.terms.items():
            key = ((), yl)
            out[key] = out.get(key, 0) + v * k ** len(xl)
        return LambdaY(self.N, out)

    def y_part(self):
        """For an element free of x, the y-SymFunc in the p basis."""
        if any(xl for xl, _ in self.terms):
            raise ValueError("element depends on x")
        return SymFunc("p", {yl: v for (_, yl), v in self.terms.items()})

    def __repr__(self):
        return f"LambdaY(N={self.N}, {len(self.terms)} terms)"


def plethysm(f, g):
    """f[g].  The x-coefficients of f are left alone; those of g are raised
    to powers together with the y variables.  g must have no constant term."""
    if g.has_constant_term():
        raise ValueError("inner series must have zero constant term")
    N = min(f.N, g.N)
    g = g.truncate(N)
    adams = {}
    products = {(): LambdaY(N, {((), ()): 1})}

    def power(yl):
        if yl not in products:
            head, tail = yl[0], yl[1:]
            if head not in adams:
                adams[head] = g.adams(head)
            products[yl] = adams[head] * power(tail)
        return products[yl]

    out = LambdaY(N)
    for (xl, yl), c in f.terms.items():
        # every part of yl contributes y-degree at least its size
        if sum(yl) > N:
            continue
        term = power(yl)
        if not term.terms:
            continue
        out = out + LambdaY(N, {(_union(xl, x2), y2): c * v for (x2, y2), v in term.terms.items()})
    return out


def plethystic_inverse(F, N):
    """G with F[G] = p_1 through y-degree N.

    F's degree-one part must be c * p_1(y) with c a nonzero rational.
    """
    F = F.truncate(N)
    if F.has_constant_term():
        raise ValueError("F must have zero constant term")
    lin = F.degree(1)
    c = lin.terms.get(((), (1,)), 0)
    if not c or len(lin.terms) != 1:
        raise ValueError("degree-one part must be an invertible multiple of p_1")
    higher = LambdaY(N, {k: v for k, v in F.terms.items() if sum(k[1]) >= 2})
    G = LambdaY(N, {((), (1,)): 1 / c})
    for d in range(2, N + 1):
        rest = plethysm(higher, G).degree(d)
        G = G + rest * (-1 / c)
    return G


def lie_input_series(N, with_x=True):
    """-sum_{n>=1} h_{n-1}(x) h_n(y), truncated at y-degree N.

    Without x only the alphabet-free series -sum h_n(y) is returned.
    """
    terms = {}
    for n in range(1, N + 1):
        xs = _h_in_p(n - 1) if with_x else {(): Fraction(1)}
        ys = _h_in_p(n)
        for xl, a in xs.items():
            for yl, b in ys.items():
                terms[(xl, yl)] = terms.get((xl, yl), 0) - a * b
    return LambdaY(N, terms)


def _h_in_p(n):
    """h_n = sum_{lam |- n} p_lam / z_lam."""
    return {lam: Fraction(1, z_lambda(lam)) for lam in partitions(n)}
