"""Exact arithmetic over Q(t): polynomials, rational functions, sparse matrices.

Everything here is immutable after construction and safe to share.  The
coefficient field for the whole package is Q(t); we never touch floats.
"""

from __future__ import annotations

from fractions import Fraction

BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class UniPoly:
    """Univariate polynomial in t with rational coefficients.

    Coefficients are stored low degree first with trailing zeros stripped,
    so degree == len(coeffs) - 1 and the zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs):
        # plain ints are kept as ints; Fraction creeps in only via division
        cs = [c if isinstance(c, (int, Fraction)) else Fraction(c)
              for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(c if isinstance(c, int) or c.denominator != 1
                            else c.numerator for c in cs)
        self._hash = None

    @staticmethod
    def t_power(k, c=_ONE):
        """c * t**k."""
        if c == 0:
            return P_ZERO
        return UniPoly([_ZERO] * k + [c])

    @property
    def degree(self):
        # degree of the zero polynomial reported as -1
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return P_ZERO
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    def scale(self, c):
        if c == 0:
            return P_ZERO
        return UniPoly([x * c for x in self.coeffs])

    def monic(self):
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = Fraction(1) / self.coeffs[-1]
        return self.scale(inv)

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"UniPoly({format_poly(self)})"


P_ZERO = UniPoly([])
P_ONE = UniPoly([1])
P_T = UniPoly([0, 1])


def poly_divmod(a, b):
    """Quotient and remainder of a by b over Q."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lead = b.degree, b.leading()
    if a.degree < db:
        return P_ZERO, a
    quot = [_ZERO] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        q = Fraction(c) / lead
        quot[i] = q
        for j, cb in enumerate(b.coeffs):
            rem[i + j] -= q * cb
    return UniPoly(quot), UniPoly(rem[:db])


def _poly_int_coeffs(p):
    from math import gcd
    den = 1
    for c in p.coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return [int(c * den) for c in p.coeffs]


def _int_prim(v):
    from math import gcd
    g = 0
    for c in v:
        g = gcd(g, c)
        if g == 1:
            return v
    if g > 1:
        return [c // g for c in v]
    return v


def _int_prem(a, b):
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        ca = a.pop()
        for i in range(len(a)):
            a[i] *= lb
        off = len(a) - db
        for i in range(db):
            a[off + i] -= ca * b[i]
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def _int_poly_gcd(x, y):
    """Primitive gcd of two integer coefficient lists (low degree first)."""
    x = _int_prim(list(x))
    y = _int_prim(list(y))
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_prim(_int_prem(x, y))
    return x


def _int_exact_div(a, b):
    """Exact quotient of integer coefficient lists; requires b | a over Z."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db]
        if c:
            q = c // lb
            quot[i] = q
            for j, cb in enumerate(b):
                rem[i + j] -= q * cb
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return quot


def poly_gcd(a, b):
    """Monic gcd over Q, computed by a primitive integer remainder sequence.

    gcd(0, 0) = 0.
    """
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x = _int_prim(_poly_int_coeffs(a))
    y = _int_prim(_poly_int_coeffs(b))
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_prim(_int_prem(x, y))
    return UniPoly(x).monic()


def format_poly(p, var="t"):
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            term = str(c)
        else:
            tk = var if k == 1 else f"{var}^{k}"
            if c == 1:
                term = tk
            elif c == -1:
                term = f"-{tk}"
            else:
                term = f"{c}*{tk}"
        parts.append(term)
    s = parts[0]
    for term in parts[1:]:
        s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return s


class RatFunc:
    """Element of Q(t), stored reduced with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=P_ONE, _trusted=False):
        if not isinstance(num, UniPoly):
            num = UniPoly([num]) if num else P_ZERO
        if not isinstance(den, UniPoly):
            den = UniPoly([den])
        if not _trusted:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                den = P_ONE
            elif den.degree == 0:
                c = den.coeffs[0]
                if c != 1:
                    num = num.scale(Fraction(1) / c)
                den = P_ONE
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = poly_divmod(num, g)[0]
                    den = poly_divmod(den, g)[0]
                lead = den.leading()
                if lead != 1:
                    inv = Fraction(1) / lead
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def t_power(k):
        """t**k for any integer k, negative allowed."""
        if k >= 0:
            return RatFunc(UniPoly.t_power(k), P_ONE, _trusted=True)
        return RatFunc(P_ONE, UniPoly.t_power(-k), _trusted=True)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFunc(-self.num, self.den, _trusted=True)

    def __add__(self, other):
        if self.den is P_ONE and other.den is P_ONE:
            return RatFunc(self.num + other.num, P_ONE, _trusted=True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        if self.den is P_ONE and other.den is P_ONE:
            return RatFunc(self.num - other.num, P_ONE, _trusted=True)
        if self.den == other.den:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den is P_ONE and other.den is P_ONE:
            return RatFunc(self.num * other.num, P_ONE, _trusted=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        if self.num.is_zero():
            return RF_ZERO
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        return RF_ONE / self

    def eval_limit(self, x):
        """Value at t=x, cancelling a shared zero if num and den both vanish."""
        num, den = self.num, self.den
        while not den(x):
            if not num(x):
                lin = UniPoly([-Fraction(x), 1])
                num = poly_divmod(num, lin)[0]
                den = poly_divmod(den, lin)[0]
            else:
                raise ZeroDivisionError(f"pole at t={x}")
        return Fraction(num(x)) / Fraction(den(x))

    def __repr__(self):
        if self.den == P_ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


RF_ZERO = RatFunc(P_ZERO, P_ONE, _trusted=True)
RF_ONE = RatFunc(P_ONE, P_ONE, _trusted=True)
RF_T = RatFunc(P_T, P_ONE, _trusted=True)


class DivisionByZero(ZeroDivisionError):
    pass


def ratfunc_arith(a, b, op):
    """Field operations on Q(t) by name: add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("ratfunc_arith: division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


class SparseMatrix:
    """Sparse matrix over Q(t); entries keyed (row, col), zeros never stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    def set(self, r, c, v):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r},{c}) out of bounds")
        if v.is_zero():
            self.entries.pop((r, c), None)
        else:
            self.entries[(r, c)] = v

    def get(self, r, c):
        return self.entries.get((r, c), RF_ZERO)

    def row_lists(self):
        """Rows as dicts col -> RatFunc, in row-major order."""
        rows = [dict() for _ in range(self.rows)]
        for (r, c) in sorted(self.entries):
            rows[r][c] = self.entries[(r, c)]
        return rows

    def transpose(self):
        m = SparseMatrix(self.cols, self.rows)
        for (r, c), v in self.entries.items():
            m.entries[(c, r)] = v
        return m

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = SparseMatrix(self.rows, other.cols)
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                cur = acc.get(key)
                acc[key] = v * w if cur is None else cur + v * w
        for key, v in acc.items():
            if not v.is_zero():
                out.entries[key] = v
        return out

    def is_zero(self):
        return not self.entries

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"


def _complexity(v):
    # pivot preference: small numerator+denominator degree
    return v.num.degree + v.den.degree


def rref_rows(rows, cols):
    """Row reduce a list of dict-rows in place semantics (returns new rows).

    Returns (reduced rows, pivot column list).  Pivot selection: in the
    leftmost column with a nonzero entry, pick the entry of smallest
    num-degree + den-degree, ties broken by lowest row index.
    """
    work = [dict(r) for r in rows]
    pivots = []
    pivot_rows = []
    remaining = list(range(len(work)))
    for col in range(cols):
        best = None
        best_key = None
        for idx in remaining:
            v = work[idx].get(col)
            if v is not None:
                key = _complexity(v)
                if best is None or key < best_key:
                    best, best_key = idx, key
        if best is None:
            continue
        remaining.remove(best)
        prow = work[best]
        inv = prow[col].inverse()
        prow = {c: v * inv for c, v in prow.items()}
        prow[col] = RF_ONE
        work[best] = prow
        # clear the column everywhere else (full reduction)
        for idx in range(len(work)):
            if idx == best:
                continue
            row = work[idx]
            f = row.get(col)
            if f is None:
                continue
            for c, v in prow.items():
                cur = row.get(c)
                nv = -(f * v) if cur is None else cur - f * v
                if nv.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = nv
            row.pop(col, None)
        pivots.append(col)
        pivot_rows.append(best)
        if not remaining:
            break
    ordered = [work[r] for r in pivot_rows]
    return ordered, pivots


def rref(m):
    """Reduced row echelon form.  Returns (SparseMatrix, pivot columns, rank)."""
    reduced, pivots = rref_rows(m.row_lists(), m.cols)
    out = SparseMatrix(m.rows, m.cols)
    for r, row in enumerate(reduced):
        for c, v in row.items():
            out.entries[(r, c)] = v
    return out, pivots, len(pivots)


# ---------------------------------------------------------------------------
# Fast exact elimination over Z[t, 1/t].
#
# rref_rows above is the reference reduction, but normalizing a RatFunc on
# every row operation (polynomial gcd per add) is far too slow for the inner
# loops of the algebra build.  The functions below keep each coefficient as a
# sparse integer Laurent polynomial {exponent: int} and eliminate without any
# division, stripping integer content as rows are stored.  Scaling a row by a
# nonzero polynomial never changes its span over Q(t), so ranks, pivot
# structure and normal forms agree with the reference up to normalization.

def _int_gcd(a, b):
    from math import gcd
    return gcd(a, b)


def _lau_content_strip(row):
    """Divide a {col: {exp: int}} row by its integer content, in place."""
    g = 0
    for poly in row.values():
        for v in poly.values():
            g = _int_gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        for poly in row.values():
            for e in poly:
                poly[e] //= g
    return row


def _lau_to_unipoly(coeff):
    lo = min(coeff)
    return lo, UniPoly([coeff.get(lo + i, 0)
                        for i in range(max(coeff) - lo + 1)])


def _lau_row_cleanup(row):
    """Occasional full cleanup: divide out a common polynomial factor."""
    g = None
    cols = []
    for col, coeff in row.items():
        lo = min(coeff)
        p = [coeff.get(lo + i, 0) for i in range(max(coeff) - lo + 1)]
        cols.append((col, lo, p))
        g = _int_prim(list(p)) if g is None else _int_poly_gcd(g, p)
        if len(g) <= 1:
            return row
    out = {}
    for col, lo, p in cols:
        q = _int_exact_div(p, g)
        out[col] = {lo + i: c for i, c in enumerate(q) if c}
    return _lau_content_strip(out)


def laurent_rows(rows):
    """Convert {col: RatFunc} rows to integer-Laurent rows, row-scaled."""
    out = []
    for row in rows:
        den = P_ONE
        for v in row.values():
            if v.den is P_ONE or v.den == den:
                continue
            g = poly_gcd(den, v.den)
            den = poly_divmod(den * v.den, g)[0] if g.degree > 0 \
                else den * v.den
        int_lcm = 1
        scaled = {}
        for col, v in row.items():
            if den is P_ONE:
                p = v.num
            else:
                p = v.num if v.den == den else v.num * poly_divmod(den, v.den)[0]
            for c in p.coeffs:
                if c.denominator != 1:
                    int_lcm = int_lcm * c.denominator // _int_gcd(
                        int_lcm, c.denominator)
            scaled[col] = p
        lrow = {}
        for col, p in scaled.items():
            d = {i: int(c * int_lcm) for i, c in enumerate(p.coeffs) if c}
            if d:
                lrow[col] = d
        if lrow:
            out.append(_lau_content_strip(lrow))
    return out


_CLEANUP_SPAN = 64
_BLOWUP_SPAN = 600


class EliminationBlowup(Exception):
    """Coefficient growth out of control; caller should retry fraction-free."""


def _lau_elim_step(row, piv, col, b):
    """row <- a*row - b'*piv at column col, with row[col] already popped.

    a is the pivot coefficient piv[col]; when a is a single term c*t^e the
    cheaper combination c*row - (b/t^e)*piv is used instead.  Either way the
    result differs from a clean elimination only by a nonzero scalar of
    Q(t), which no caller depends on.
    """
    a = piv[col]
    if len(a) == 1:
        (ea, ca), = a.items()
        if ca != 1 and ca != -1:
            for poly in row.values():
                for e in poly:
                    poly[e] *= ca
        sgn = 1 if ca > 0 else -1
        for c2, p2 in piv.items():
            if c2 == col:
                continue
            dst = row.get(c2)
            if dst is None:
                dst = row[c2] = {}
            for eb, vb in b.items():
                k = eb - ea
                w = sgn * vb
                for e2, v2 in p2.items():
                    e = e2 + k
                    nv = dst.get(e, 0) - w * v2
                    if nv:
                        dst[e] = nv
                    else:
                        del dst[e]
            if not dst:
                del row[c2]
        return row
    for c2 in list(row):
        poly = row[c2]
        acc = {}
        for e1, v1 in poly.items():
            for e2, v2 in a.items():
                e = e1 + e2
                nv = acc.get(e, 0) + v1 * v2
                if nv:
                    acc[e] = nv
                else:
                    acc.pop(e, None)
        if acc:
            row[c2] = acc
        else:
            del row[c2]
    for c2, p2 in piv.items():
        if c2 == col:
            continue
        dst = row.get(c2)
        if dst is None:
            dst = row[c2] = {}
        for eb, vb in b.items():
            for e2, v2 in p2.items():
                e = e2 + eb
                nv = dst.get(e, 0) - vb * v2
                if nv:
                    dst[e] = nv
                else:
                    del dst[e]
        if not dst:
            del row[c2]
    return row


def _lau_reduce_row(row, pivots):
    """Reduce a Laurent row against stored pivots until its lead is new."""
    while row:
        col = min(row)
        piv = pivots.get(col)
        if piv is None:
            return col, _lau_content_strip(row)
        b = row.pop(col)
        row = _lau_elim_step(row, piv, col, b)
        _lau_content_strip(row)
        if row:
            span = max(max(p) - min(p) for p in row.values())
            if span > _CLEANUP_SPAN:
                row = _lau_row_cleanup(row)
                span = max(max(p) - min(p) for p in row.values())
                if span > _BLOWUP_SPAN:
                    raise EliminationBlowup(span)
    return None, None


def laurent_echelon(rows, full=False):
    """Echelon form of integer-Laurent rows; optionally fully reduced.

    Returns {pivot col: row dict}.  With full=True the pivot column is
    eliminated from every other pivot row, so each stored row expresses its
    own pivot column in non-pivot columns alone (up to the row's lead).
    """
    pivots = {}
    for row in rows:
        col, reduced = _lau_reduce_row(dict(row), pivots)
        if col is not None:
            pivots[col] = reduced
    if full and pivots:
        for col in sorted(pivots, reverse=True):
            piv = pivots[col]
            for col2, other in pivots.items():
                if col2 == col:
                    continue
                b = other.pop(col, None)
                if b is None:
                    continue
                _lau_elim_step(other, piv, col, b)
                _lau_content_strip(other)
                if other:
                    span = max(max(p) - min(p) for p in other.values())
                    if span > _CLEANUP_SPAN:
                        pivots[col2] = other = _lau_row_cleanup(other)
                        span = max(max(p) - min(p)
                                   for p in other.values())
                        if span > _BLOWUP_SPAN:
                            raise EliminationBlowup(span)
    return pivots


def laurent_rank(rows):
    return len(laurent_echelon(rows))


def _lau_mul(a, b):
    """Product of two {exp: int} Laurent polynomials."""
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _lau_div(a, b):
    """Exact quotient of {exp: int} Laurent polynomials."""
    lo_a, lo_b = min(a), min(b)
    pa = [a.get(lo_a + i, 0) for i in range(max(a) - lo_a + 1)]
    pb = [b.get(lo_b + i, 0) for i in range(max(b) - lo_b + 1)]
    q = _int_exact_div(pa, pb)
    off = lo_a - lo_b
    return {off + i: c for i, c in enumerate(q) if c}


def _ffgj_update(r, piv, col, a, prev):
    """One fraction-free Gauss-Jordan update: (a*r - r[col]*piv) / prev.

    Dividing every entry by the previous pivot coefficient is exact
    (one-step Bareiss) and keeps entries the size of matrix minors, which
    is what stops the exponential coefficient growth of naive
    division-free elimination.
    """
    b = r.pop(col, None)
    new = {}
    for c, v in r.items():
        av = _lau_mul(a, v)
        if b is not None:
            pv = piv.get(c)
            if pv is not None:
                for e, x in _lau_mul(b, pv).items():
                    nv = av.get(e, 0) - x
                    if nv:
                        av[e] = nv
                    else:
                        del av[e]
        if av:
            new[c] = _lau_div(av, prev) if prev else av
    if b is not None:
        for c, pv in piv.items():
            if c == col or c in r:
                continue
            neg = {e: -x for e, x in _lau_mul(b, pv).items()}
            if neg:
                new[c] = _lau_div(neg, prev) if prev else neg
    return new


def laurent_jordan(rows):
    """Fully reduced form of integer-Laurent rows, fraction-free.

    Same contract as laurent_echelon(rows, full=True): returns
    {pivot col: row dict} where every other pivot column is eliminated from
    each stored row.  Every row (active and finished) is updated at every
    step so the one-step division stays exact.
    """
    work = [dict(r) for r in rows if r]
    done = {}
    prev = None
    while work:
        col = min(min(r) for r in work)
        pi = min((i for i, r in enumerate(work) if col in r),
                 key=lambda i: len(work[i]))
        piv = work.pop(pi)
        a = piv[col]
        work = [nr for nr in (_ffgj_update(r, piv, col, a, prev)
                              for r in work) if nr]
        for c2 in list(done):
            done[c2] = _ffgj_update(done[c2], piv, col, a, prev)
        done[col] = piv
        prev = a
    for row in done.values():
        _lau_content_strip(row)
    return done


def laurent_full(rows):
    """Fully reduced pivot table, fast path first.

    The insertion echelon is cheaper on typical systems but its coefficient
    growth is unbounded in bad cases; on blowup the fraction-free
    Gauss-Jordan redoes the job with guaranteed minor-sized entries.
    """
    try:
        return laurent_echelon([{c: dict(p) for c, p in r.items()}
                                for r in rows], full=True)
    except EliminationBlowup:
        return laurent_jordan(rows)


def ratfunc_from_laurent(num, den):
    """RatFunc num/den from {exp: int} dicts (exponents may be negative)."""
    base = min(min(num) if num else 0, min(den))
    np_ = UniPoly([num.get(base + i, 0)
                   for i in range(max(num) - base + 1)]) if num else P_ZERO
    dp = UniPoly([den.get(base + i, 0)
                  for i in range(max(den) - base + 1)])
    return RatFunc(np_, dp)


def fast_rank(m):
    """Exact rank of a SparseMatrix over Q(t) via Laurent elimination."""
    return laurent_rank(laurent_rows(m.row_lists()))


def laurent_cols(m):
    """Denominator-cleared columns of a SparseMatrix, indexed by row."""
    by_k = {}
    for c, row in enumerate(m.transpose().row_lists()):
        for col in laurent_rows([row]):
            for k, p in col.items():
                by_k.setdefault(k, []).append((c, p))
    return by_k


def product_is_zero(a, b, arows=None, bcols=None):
    """Whether the SparseMatrix product a*b vanishes, over integer Laurents.

    Rows of a and columns of b are denominator-cleared first; that scales
    each product entry by a nonzero scalar, so vanishing is unaffected.
    Precomputed forms can be passed in; they are not modified.
    """
    if a.cols != b.rows:
        raise ValueError("dimension mismatch in matrix product")
    by_k = bcols if bcols is not None else laurent_cols(b)
    if arows is None:
        arows = laurent_rows(a.row_lists())
    for arow in arows:
        acc = {}
        for k, pa in arow.items():
            for c, pb in by_k.get(k, ()):
                dst = acc.setdefault(c, {})
                for e1, c1 in pa.items():
                    for e2, c2 in pb.items():
                        e = e1 + e2
                        v = dst.get(e, 0) + c1 * c2
                        if v:
                            dst[e] = v
                        else:
                            dst.pop(e, None)
        if any(acc.values()):
            return False
    return True


def kernel_basis(m):
    """Basis of the right null space as a list of dicts col -> RatFunc."""
    reduced, pivots = rref_rows(m.row_lists(), m.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = {fc: RF_ONE}
        for prow, pc in zip(reduced, pivots):
            v = prow.get(fc)
            if v is not None:
                vec[pc] = -v
        basis.append(vec)
    return basis
