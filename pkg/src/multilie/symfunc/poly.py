"""Exact multivariate polynomials in x_1..x_k with rational coefficients."""

from fractions import Fraction


class Poly:
    """Polynomial in a fixed number of variables, stored as {exponent tuple: Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                self.terms[e] = Fraction(c)

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        exps = tuple(exps) + (0,) * (nvars - len(exps))
        return cls(nvars, {exps: c})

    @classmethod
    def variable(cls, nvars, i):
        """x_i, 1-based."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return Poly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Poly(self.nvars, {e: c / scalar for e, c in self.terms.items()})

    def __pow__(self, m):
        out = Poly.constant(self.nvars, 1)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self.terms == Poly.constant(self.nvars, other).terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps):
        exps = tuple(exps) + (0,) * (self.nvars - len(exps))
        return self.terms.get(exps, Fraction(0))

    def evaluate(self, values):
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, p in zip(values, e):
                term *= Fraction(v) ** p
            total += term
        return total

    def substitute_univariate(self, values):
        """Substitute each x_i by a univariate coefficient list; returns a coefficient list."""
        out = [Fraction(0)]
        for e, c in self.terms.items():
            term = [c]
            for v, p in zip(values, e):
                for _ in range(p):
                    term = _mul_lists(term, v)
            out = _add_lists(out, term)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def _mul_lists(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _add_lists(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
