"""Exponential generating functions in y with coefficients in any commutative
ring (Fractions, Poly, SymFunc): composition and compositional inversion."""

from fractions import Fraction
from math import factorial


class EgfX:
    """sum_{n=1}^{N} c_n y^n / n!, with c_0 = 0."""

    def __init__(self, coeffs, zero=Fraction(0)):
        self.coeffs = list(coeffs)
        self.zero = zero

    @property
    def N(self):
        return len(self.coeffs)

    def coefficient(self, n):
        return self.coeffs[n - 1]

    def ordinary(self):
        """Ordinary coefficients a_1..a_N with a_n = c_n / n!."""
        return [c * Fraction(1, factorial(n)) for n, c in enumerate(self.coeffs, 1)]

    @classmethod
    def from_ordinary(cls, a, zero=Fraction(0)):
        return cls([x * factorial(n) for n, x in enumerate(a, 1)], zero)

    def compose(self, inner):
        """self(inner(y)) through degree min(N)."""
        N = min(self.N, inner.N)
        return EgfX.from_ordinary(compose_ordinary(self.ordinary()[:N], inner.ordinary()[:N], self.zero),
                                  self.zero)

    def __repr__(self):
        return f"EgfX({self.coeffs})"


def _series_mul(a, b, N, zero):
    """Product of ordinary series indexed from degree 1 (index 0 is y^1); result indexed from y^2.

    Represented generally as dicts {degree: coefficient}."""
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= N:
                out[i + j] = out.get(i + j, zero) + x * y
    return out


def compose_ordinary(f, g, zero=Fraction(0)):
    """Ordinary coefficients (from y^1) of f(g(y)) truncated at degree N = len(f)."""
    N = min(len(f), len(g))
    gd = {i + 1: c for i, c in enumerate(g[:N])}
    power = dict(gd)
    out = {d: zero for d in range(1, N + 1)}
    for m in range(1, N + 1):
        fm = f[m - 1]
        for d, c in power.items():
            out[d] = out[d] + fm * c
        power = _series_mul(power, gd, N, zero)
    return [out[d] for d in range(1, N + 1)]


def egf_comp_inverse(F, N=None):
    """G with F(G(y)) = y through degree N, solved degree by degree.

    Requires c_1 invertible; only c_1 = 1 and rational c_1 are supported.
    """
    N = F.N if N is None else N
    f = F.ordinary()[:N]
    zero = F.zero
    c1 = f[0]
    if isinstance(c1, (int, Fraction)):
        inv = 1 / Fraction(c1)
    elif c1 == 1:
        inv = Fraction(1)
    else:
        raise ValueError("leading coefficient must be invertible")
    g = [zero + inv] + [zero] * (N - 1)
    for d in range(2, N + 1):
        g[d - 1] = zero
        got = compose_ordinary(f[:d], g[:d], zero)[d - 1]
        g[d - 1] = -(got * inv)
    return EgfX.from_ordinary(g, zero)
