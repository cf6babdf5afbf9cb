"""Symmetric functions in one alphabet x, stored in one of the bases
m, e, h, p, s, with exact rational coefficients.

Transition matrices to the monomial basis are computed combinatorially:
e and h by counting 0/1 and nonnegative integer matrices with prescribed
margins, p by distributing parts, s through the Jacobi-Trudi determinant.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from ..core import partitions
from ..linalg import invert
from .poly import Poly

BASES = ("m", "e", "h", "p", "s")


def _union(a, b):
    return tuple(sorted(a + b, reverse=True))


class SymFunc:
    """Finite linear combination of basis elements indexed by partitions (descending tuples)."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(sorted((p for p in lam if p), reverse=True))
            if c:
                self.coeffs[lam] = self.coeffs.get(lam, 0) + Fraction(c)
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def one(cls, basis="e"):
        return cls(basis, {(): 1})

    @classmethod
    def zero(cls, basis="e"):
        return cls(basis)

    @classmethod
    def gen(cls, basis, *parts):
        return cls(basis, {tuple(parts): 1})

    def to(self, basis):
        return basis_convert(self, basis)

    def degrees(self):
        return {sum(lam) for lam in self.coeffs}

    def homogeneous(self, d):
        return SymFunc(self.basis, {lam: c for lam, c in self.coeffs.items() if sum(lam) == d})

    def _coerce(self, other):
        if isinstance(other, SymFunc):
            return other if other.basis == self.basis else other.to(self.basis)
        return SymFunc(self.basis, {(): other})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return SymFunc(self.basis, {lam: c * other for lam, c in self.coeffs.items()})
        if self.basis in ("e", "h", "p"):
            a, b, work = self, other.to(self.basis), self.basis
        else:
            a, b, work = self.to("e"), other.to("e"), "e"
        out = {}
        for l1, c1 in a.coeffs.items():
            for l2, c2 in b.coeffs.items():
                lam = _union(l1, l2)
                out[lam] = out.get(lam, 0) + c1 * c2
        return SymFunc(work, out).to(self.basis)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def __pow__(self, m):
        out = SymFunc.one(self.basis if self.basis in ("e", "h", "p") else "e")
        for _ in range(m):
            out = out * self
        return out.to(self.basis)

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            if other.basis != self.basis:
                other = other.to(self.basis)
            return self.coeffs == other.coeffs
        return self == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.to("e").coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, lam):
        return self.coeffs.get(tuple(lam), Fraction(0))

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs.values())

    def specialize(self, k):
        """Polynomial in x_1..x_k (all further variables set to zero)."""
        out = Poly.zero(k)
        for lam, c in self.to("e").coeffs.items():
            term = Poly.constant(k, c)
            for part in lam:
                term = term * elementary_poly(k, part)
            out = out + term
        return out

    def evaluate_ones(self, k):
        """Value at x = (1^k, 0, 0, ...)."""
        from math import comb

        total = Fraction(0)
        for lam, c in self.to("e").coeffs.items():
            term = c
            for part in lam:
                term *= comb(k, part)
            total += term
        return total

    def __repr__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for lam in sorted(self.coeffs, key=lambda l: (sum(l), l)):
            c = self.coeffs[lam]
            name = self.basis + ("" if not lam else "[" + ",".join(map(str, lam)) + "]")
            if not lam:
                pieces.append(str(c))
            else:
                pieces.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(pieces)


@lru_cache(maxsize=None)
def elementary_poly(k, r):
    terms = {}
    for S in combinations(range(k), r):
        e = [0] * k
        for i in S:
            e[i] = 1
        terms[tuple(e)] = 1
    return Poly(k, terms)


def _count_matrices(rows, cols, binary):
    """Number of matrices with nonnegative (or 0/1) entries and given margins."""
    cols = tuple(cols)

    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(rows):
            return 1 if not any(remaining) else 0
        total = 0
        for choice in _row_choices(rows[i], remaining, binary):
            total += rec(i + 1, tuple(r - c for r, c in zip(remaining, choice)))
        return total

    return rec(0, cols)


def _row_choices(s, caps, binary):
    def rec(j, left):
        if j == len(caps):
            if left == 0:
                yield ()
            return
        top = min(caps[j], left, 1 if binary else left)
        for v in range(top, -1, -1):
            for rest in rec(j + 1, left - v):
                yield (v,) + rest

    return rec(0, s)


def _count_power_sum(lam, mu):
    """Number of ways to distribute the parts of lam into the slots of mu, filling each exactly."""

    @lru_cache(maxsize=None)
    def rec(i, remaining):
        if i == len(lam):
            return 1 if not any(remaining) else 0
        total = 0
        for j, r in enumerate(remaining):
            if r >= lam[i]:
                total += rec(i + 1, remaining[:j] + (r - lam[i],) + remaining[j + 1:])
        return total

    return rec(0, tuple(mu))


@lru_cache(maxsize=None)
def _to_m_matrix(basis, d):
    """Row for each lam of degree d: coefficients of basis[lam] in the m basis."""
    parts = list(partitions(d))
    if basis == "m":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        out = {}
        hm = _to_m_matrix("h", d)
        for lam in parts:
            row = {}
            for hl, c in jacobi_trudi(lam).items():
                for mu, v in hm[hl].items():
                    row[mu] = row.get(mu, 0) + c * v
            out[lam] = {mu: v for mu, v in row.items() if v}
        return out
    out = {}
    for lam in parts:
        row = {}
        for mu in parts:
            if basis == "e":
                v = _count_matrices(lam, mu, True)
            elif basis == "h":
                v = _count_matrices(lam, mu, False)
            else:
                v = _count_power_sum(lam, mu)
            if v:
                row[mu] = Fraction(v)
        out[lam] = row
    return out


@lru_cache(maxsize=None)
def _from_m_matrix(basis, d):
    parts = list(partitions(d))
    fwd = _to_m_matrix(basis, d)
    M = [[fwd[lam].get(mu, Fraction(0)) for mu in parts] for lam in parts]
    inv = invert(M)
    # m_mu = sum_lam inv[mu][lam] basis_lam
    return {mu: {lam: inv[i][j] for j, lam in enumerate(parts) if inv[i][j]} for i, mu in enumerate(parts)}


def jacobi_trudi(lam):
    """s_lam = det(h_{lam_i - i + j}) expanded in the h basis: {h-partition: coefficient}."""
    lam = tuple(lam)
    n = len(lam)
    if n == 0:
        return {(): Fraction(1)}

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return {(): Fraction(1)}
        out = {}
        for idx, j in enumerate(cols):
            deg = lam[row] - row + j
            if deg >= 0:
                rest = minor(row + 1, cols[:idx] + cols[idx + 1:])
                s = 1 if idx % 2 == 0 else -1
                for key, c in rest.items():
                    nk = _union(key, (deg,) if deg else ())
                    out[nk] = out.get(nk, 0) + s * c
        return {k: v for k, v in out.items() if v}

    return minor(0, tuple(range(n)))


def basis_convert(f, target):
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return SymFunc(target, f.coeffs)
    in_m = {}
    for lam, c in f.coeffs.items():
        for mu, v in _to_m_matrix(f.basis, sum(lam))[lam].items():
            in_m[mu] = in_m.get(mu, 0) + c * v
    if target == "m":
        return SymFunc("m", in_m)
    out = {}
    for mu, c in in_m.items():
        if not c:
            continue
        for lam, v in _from_m_matrix(target, sum(mu))[mu].items():
            out[lam] = out.get(lam, 0) + c * v
    return SymFunc(target, out)


def h(n):
    return SymFunc("h", {(n,): 1}) if n >= 0 else SymFunc("h")


def e(n):
    return SymFunc("e", {(n,): 1}) if n >= 0 else SymFunc("e")


def p(*parts):
    return SymFunc("p", {tuple(parts): 1})


def omega(f):
    """The involution exchanging e and h; on p it is p_i -> (-1)^(i-1) p_i."""
    g = f.to("p")
    out = {}
    for lam, c in g.coeffs.items():
        sign = (-1) ** (sum(lam) - len(lam))
        out[lam] = sign * c
    return SymFunc("p", out).to(f.basis)
