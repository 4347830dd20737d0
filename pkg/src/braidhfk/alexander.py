"""Symmetrized Alexander polynomial from the reduced Burau representation.

Independent of the cube machinery; used as the Euler-characteristic oracle.
det(reduced Burau - Id) equals the Alexander polynomial times
1 + T + ... + T^(b-1) up to a unit, so we divide exactly, center the
exponent support, and normalize the sign so the value at T=1 is +1.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Laurent polynomial in T with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.coeffs[k] = v

    @staticmethod
    def term(k, c=1):
        return LaurentPoly({k: c})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentPoly(out)

    def shift(self, k):
        return LaurentPoly({e + k: v for e, v in self.coeffs.items()})

    def __call__(self, x):
        return sum(v * Fraction(x) ** k for k, v in self.coeffs.items())

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def divide_exact(self, other):
        """Exact division; raises if the quotient is not a Laurent polynomial."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self.coeffs)
        dmax = other.max_exp()
        dlead = other.coeffs[dmax]
        # an exact Laurent quotient cannot reach below this exponent
        lo_bound = self.min_exp() - other.min_exp()
        quot = {}
        while rem:
            nmax = max(rem)
            q = rem[nmax] / dlead
            e = nmax - dmax
            if e < lo_bound:
                raise ValueError("non-terminating Laurent division")
            quot[e] = q
            for k, v in other.coeffs.items():
                nk = k + e
                nv = rem.get(nk, 0) - q * v
                if nv:
                    rem[nk] = nv
                else:
                    rem.pop(nk, None)
            if rem and max(rem) >= nmax:
                raise ValueError("non-terminating Laurent division")
        return LaurentPoly(quot)

    def symmetrized(self):
        """Center the support; requires min+max exponent to be even."""
        lo, hi = self.min_exp(), self.max_exp()
        if (lo + hi) % 2:
            raise ValueError("support cannot be centered on integers")
        return self.shift(-(lo + hi) // 2)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                base = str(abs(c))
            else:
                tk = "T" if k == 1 else f"T^{k}"
                base = tk if abs(c) == 1 else f"{abs(c)}*{tk}"
            parts.append((c < 0, base))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, base in parts[1:]:
            out += (" - " if neg else " + ") + base
        return out

    __repr__ = __str__


def _identity(n):
    return [[LaurentPoly.term(0) if i == j else LaurentPoly()
             for j in range(n)] for i in range(n)]


def _mat_mul(a, b):
    n = len(a)
    out = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k].is_zero():
                continue
            for j in range(n):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def _det(m):
    # fraction-free expansion is overkill at these sizes; Laplace by rows
    n = len(m)
    if n == 0:
        return LaurentPoly.term(0)
    if n == 1:
        return m[0][0]
    acc = LaurentPoly()
    sign = 1
    for j in range(n):
        if not m[0][j].is_zero():
            minor = [[m[i][k] for k in range(n) if k != j]
                     for i in range(1, n)]
            term = m[0][j] * _det(minor)
            acc = acc + (term if sign > 0 else -term)
        sign = -sign
    return acc


def _reduced_burau(i, sign, b):
    """Reduced Burau matrix of generator s_i on b strands, (b-1)x(b-1)."""
    n = b - 1
    m = _identity(n)
    T = LaurentPoly.term(1)
    one = LaurentPoly.term(0)
    r = i - 1  # matrix row/col of the generator
    m[r][r] = -T
    if r > 0:
        m[r - 1][r] = T
    if r < n - 1:
        m[r + 1][r] = one
    if sign < 0:
        # invert: the inverse of the local block, still a Laurent matrix
        inv = _identity(n)
        Tinv = LaurentPoly.term(-1)
        inv[r][r] = -Tinv
        if r > 0:
            inv[r - 1][r] = one
        if r < n - 1:
            inv[r + 1][r] = Tinv
        return inv
    return m


def alexander_from_braid(word):
    """Symmetrized Alexander polynomial of the braid closure, value 1 at T=1."""
    b = word.strands
    if b == 1:
        return LaurentPoly.term(0)
    n = b - 1
    m = _identity(n)
    for i, sign in word.letters:
        m = _mat_mul(m, _reduced_burau(i, sign, b))
    for i in range(n):
        m[i][i] = m[i][i] - LaurentPoly.term(0)
    det = _det(m)
    cyclo = LaurentPoly({k: 1 for k in range(b)})
    delta = det.divide_exact(cyclo)
    delta = delta.symmetrized()
    val = delta(1)
    if abs(val) != 1:
        raise AssertionError(f"Alexander normalization failed: value {val} at T=1")
    if val == -1:
        delta = -delta
    return delta
