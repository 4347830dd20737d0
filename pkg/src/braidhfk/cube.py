"""The cube of resolutions: vertex algebras, signed zip/unzip maps, D^2 = 0.

Cube vertices are resolution assignments encoded as bitmasks (bit p is the
resolution of crossing p).  The edge I -> J flipping crossing p is the unzip
(quotient ring) map when p is positive, the zip map (multiplication by
t*U_a - U_d) when p is negative.  Signs follow the standard convention
eps(I<J) = (-1)^(number of earlier crossings already set to 1 in I), which
makes all 2-faces anticommute.

Basis elements of the total complex are (mask, degree, monomial) with

  A  = -degree + (sigma - b + 1)/2      internal Alexander grading
  M  = 2*A                              Maslov grading
  A' = A + (-N + sum(I))/2              renormalized Alexander grading

Every edge map preserves A' and drops M by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import build_algebra
from .field import (RF_ONE, RatFunc, SparseMatrix, laurent_cols,
                    laurent_rows, product_is_zero)
from .resolution import resolve


class FaceCheckError(AssertionError):
    pass


class DifferentialSquareError(AssertionError):
    pass


def edge_sign(mask, p):
    """Sign of the cube edge out of `mask` flipping crossing p."""
    return -1 if bin(mask & ((1 << p) - 1)).count("1") % 2 else 1


def edge_map(from_alg, to_alg, kind, crossing):
    """Images of every basis monomial of the source algebra in the target.

    Returns {(degree, monomial): {target monomial: RatFunc}}.  The unzip map
    is reduction in the target quotient; zip multiplies by t*U_a - U_d first.
    """
    if kind not in ("unzip", "zip"):
        raise ValueError(f"unknown edge kind {kind!r}")
    out = {}
    if from_alg.zero or to_alg.zero:
        return out
    t = RatFunc.t_power(1)
    for d, mono in from_alg.basis_elements():
        if kind == "unzip":
            poly = {mono: RF_ONE}
        else:
            poly = {}
            ma = tuple(sorted(mono + (crossing.a,)))
            md = tuple(sorted(mono + (crossing.d,)))
            poly[ma] = t
            cur = poly.get(md)
            poly[md] = cur - RF_ONE if cur is not None else -RF_ONE
        img = to_alg.reduce(poly)
        if img:
            out[(d, mono)] = img
    return out


@dataclass
class CubeVertex:
    mask: int
    bits: tuple
    algebra: object
    shift_Aprime: Fraction


class TotalComplex:
    """Bigraded groups keyed (A', M) with the signed total differential."""

    def __init__(self, diagram, vertices, edge_maps):
        self.diagram = diagram
        self.vertices = vertices
        self.edge_maps = edge_maps
        self.basis = {}  # (A', M) -> ordered list of (mask, degree, monomial)
        self.index = {}  # (mask, degree, monomial) -> (A', M, position)
        for v in vertices:
            alg = v.algebra
            if alg.zero:
                continue
            for d, mono in alg.basis_elements():
                a_int = alg.grading(d)
                key = (a_int + v.shift_Aprime, 2 * a_int)
                slot = self.basis.setdefault(key, [])
                self.index[(v.mask, d, mono)] = (key[0], key[1], len(slot))
                slot.append((v.mask, d, mono))
        self.differential = {}  # (A', M) -> SparseMatrix into (A', M-1)
        self._lau_rows = {}
        self._lau_cols = {}
        self._build_differential()

    def lau_rows(self, key):
        """Integer-Laurent rows of a differential block, cached, read-only."""
        if key not in self._lau_rows:
            self._lau_rows[key] = laurent_rows(
                self.differential[key].row_lists())
        return self._lau_rows[key]

    def lau_cols(self, key):
        if key not in self._lau_cols:
            self._lau_cols[key] = laurent_cols(self.differential[key])
        return self._lau_cols[key]

    def _build_differential(self):
        n = self.diagram.n
        for (aprime, m), elements in self.basis.items():
            target = self.basis.get((aprime, m - 1), [])
            mat = SparseMatrix(len(target), len(elements))
            for col, (mask, d, mono) in enumerate(elements):
                for p in range(n):
                    if mask >> p & 1:
                        continue
                    emap = self.edge_maps.get((mask, p))
                    if not emap:
                        continue
                    img = emap.get((d, mono))
                    if not img:
                        continue
                    sgn = edge_sign(mask, p)
                    tmask = mask | 1 << p
                    for tmono, coeff in img.items():
                        _, _, row = self.index[(tmask, len(tmono), tmono)]
                        v = coeff if sgn > 0 else -coeff
                        cur = mat.get(row, col)
                        mat.set(row, col, cur + v)
            self.differential[(aprime, m)] = mat

    def group_dims(self):
        return {key: len(els) for key, els in self.basis.items()}

    def verify_d_squared(self):
        for (aprime, m), mat in self.differential.items():
            nxt = self.differential.get((aprime, m - 1))
            if nxt is None or nxt.is_zero() or mat.is_zero():
                continue
            if not product_is_zero(nxt, mat,
                                   arows=self.lau_rows((aprime, m - 1)),
                                   bcols=self.lau_cols((aprime, m))):
                raise DifferentialSquareError(
                    f"D^2 != 0 at A'={aprime}, M={m}")

    def column_euler(self):
        """Euler characteristic in T^(A') per cube column (number of 1-bits)."""
        from .alexander import LaurentPoly
        cols = {}
        for (aprime, m), elements in self.basis.items():
            if aprime.denominator != 1 or m % 1:
                raise AssertionError("non-integer grading on a knot complex")
            for (mask, _d, _mono) in elements:
                c = bin(mask).count("1")
                term = LaurentPoly.term(int(aprime), 1 if m % 2 == 0 else -1)
                cols[c] = cols.get(c, LaurentPoly()) + term
        return cols


def _apply(emap, vec):
    """Push a {monomial: coeff} vector through an edge-map table."""
    out = {}
    for mono, coeff in vec.items():
        img = emap.get((len(mono), mono))
        if not img:
            continue
        for tmono, c in img.items():
            cur = out.get(tmono)
            nv = coeff * c if cur is None else cur + coeff * c
            if nv.is_zero():
                out.pop(tmono, None)
            else:
                out[tmono] = nv
    return out


def check_two_faces(diagram, vertices, edge_maps, cache=None, res_keys=None):
    """Exhaustive anticommutation check of every 2-face of the cube.

    With a cache, faces already verified on another word sharing the same
    resolution structure and edge kinds are skipped: the two path signs of a
    cube square always differ by a global sign, so whether the face
    anticommutes depends only on the four structural edge maps.
    """
    n = diagram.n
    kinds = tuple("unzip" if x.sign > 0 else "zip" for x in diagram.crossings)
    for v in vertices:
        mask = v.mask
        if v.algebra.zero:
            continue
        free = [p for p in range(n) if not mask >> p & 1]
        for i, p in enumerate(free):
            for q in free[i + 1:]:
                if cache is not None:
                    fkey = ("face", res_keys[mask], p, kinds[p], q, kinds[q])
                    if fkey in cache:
                        continue
                m_p = edge_maps.get((mask, p), {})
                m_q = edge_maps.get((mask, q), {})
                m_pq = edge_maps.get((mask | 1 << p, q), {})
                m_qp = edge_maps.get((mask | 1 << q, p), {})
                s1 = edge_sign(mask, p) * edge_sign(mask | 1 << p, q)
                s2 = edge_sign(mask, q) * edge_sign(mask | 1 << q, p)
                for d, mono in v.algebra.basis_elements():
                    vec = {mono: RF_ONE}
                    path1 = _apply(m_pq, _apply(m_p, vec))
                    path2 = _apply(m_qp, _apply(m_q, vec))
                    total = {}
                    for src, sgn in ((path1, s1), (path2, s2)):
                        for tm, c in src.items():
                            add = c if sgn > 0 else -c
                            cur = total.get(tm)
                            nv = add if cur is None else cur + add
                            if nv.is_zero():
                                total.pop(tm, None)
                            else:
                                total[tm] = nv
                    if total:
                        raise FaceCheckError(
                            f"2-face ({mask:0{n}b}, flip {p} and {q}) fails "
                            f"to anticommute on {mono}")
                if cache is not None:
                    cache[fkey] = True


def resolution_key(diagram, bits):
    """Structural key of a resolution: edge wiring plus singular flags.

    Words that differ only in crossing signs share resolution structures,
    so algebras and edge maps keyed this way can be reused across them.
    """
    sing = tuple((b == 0) == (x.sign > 0)
                 for b, x in zip(bits, diagram.crossings))
    return (diagram.word.strands, diagram.edge_count,
            tuple((x.a, x.b, x.c, x.d, s)
                  for x, s in zip(diagram.crossings, sing)))


def assemble(diagram, mode=None, check_faces=None, degree_cap=None,
             subset_cap=22, corrupt_signs=False, cache=None):
    """Build the whole cube complex for a decorated diagram.

    corrupt_signs is a test fixture: it deliberately breaks the sign rule so
    negative controls can watch the face check fail.  cache, when given, is a
    dict reused across calls; it memoizes vertex algebras and edge maps by
    resolution structure (the caller keeps all calls on one settings profile).
    """
    n = diagram.n
    if mode is None:
        mode = "all" if n <= 6 else "coherent_cycles"
    if check_faces is None:
        check_faces = n <= 8

    corrupting = bool(corrupt_signs)
    neg = diagram.negative_count
    vertices = []
    algebras = {}
    res_keys = {}
    for mask in range(1 << n):
        bits = tuple(mask >> p & 1 for p in range(n))
        if cache is None:
            alg = build_algebra(resolve(diagram, bits), mode=mode,
                                degree_cap=degree_cap, subset_cap=subset_cap)
        else:
            key = resolution_key(diagram, bits)
            res_keys[mask] = key
            alg = cache.get(key)
            if alg is None:
                alg = cache[key] = build_algebra(
                    resolve(diagram, bits), mode=mode,
                    degree_cap=degree_cap, subset_cap=subset_cap)
        algebras[mask] = alg
        vertices.append(CubeVertex(mask, bits, alg,
                                   Fraction(-neg + sum(bits), 2)))

    edge_maps = {}
    for mask in range(1 << n):
        src = algebras[mask]
        if src.zero:
            continue
        for p in range(n):
            if mask >> p & 1:
                continue
            tgt = algebras[mask | 1 << p]
            crossing = diagram.crossings[p]
            kind = "unzip" if crossing.sign > 0 else "zip"
            if cache is None or corrupt_signs:
                emap = edge_map(src, tgt, kind, crossing)
            else:
                ekey = ("emap", res_keys[mask], p, kind)
                emap = cache.get(ekey)
                if emap is None:
                    emap = cache[ekey] = edge_map(src, tgt, kind, crossing)
            if corrupt_signs and emap:
                # flip one coefficient so anticommutation must fail
                key = next(iter(emap))
                emap = dict(emap)
                emap[key] = {m: -c for m, c in emap[key].items()}
                corrupt_signs = False
            if emap:
                edge_maps[(mask, p)] = emap

    if check_faces:
        check_two_faces(diagram, vertices, edge_maps,
                        cache=None if corrupting else cache,
                        res_keys=res_keys)
    total = TotalComplex(diagram, vertices, edge_maps)
    total.verify_d_squared()
    return total
