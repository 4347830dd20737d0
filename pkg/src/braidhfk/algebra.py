"""The graded quotient algebra of a complete resolution, over Q(t).

Monomials in the edge variables U_0..U_{2n} are sorted tuples of edge ids.
Polynomials are dicts monomial -> RatFunc.  Relations:

  per singular vertex   t*(U_a + U_b) - (U_c + U_d)        (linear)
                        t^2*U_a*U_b - U_c*U_d              (quadratic)
  per smoothed crossing t*U_a - U_c  and  t*U_b - U_d
  per vertex subset W   t^|W| * prod(out boundary) - prod(in boundary)
  hat specialization    U_0 = 0

The build eliminates the linear relations first, rewriting every edge
variable as a combination of the surviving (free) variables; each higher
degree is then a single row reduction in the free-variable monomial basis.
That is sound because the algebra is standard graded: once some degree
vanishes, everything above it does too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .field import (RF_ONE, RF_ZERO, RatFunc, laurent_full, laurent_rows,
                    ratfunc_from_laurent)
from .resolution import enumerate_subsets, is_connected


class DegreeCapExceeded(RuntimeError):
    pass


class InhomogeneousRelation(RuntimeError):
    pass


@dataclass
class Relation:
    kind: str
    poly: dict  # monomial (sorted tuple of edge ids) -> RatFunc

    def degree_set(self):
        return {len(m) for m in self.poly}


def _mono(*vs):
    return tuple(sorted(vs))


def _add_into(poly, mono, coeff):
    cur = poly.get(mono)
    nv = coeff if cur is None else cur + coeff
    if nv.is_zero():
        poly.pop(mono, None)
    else:
        poly[mono] = nv


def poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            _add_into(out, _mono(*(m1 + m2)), c1 * c2)
    return out


def _signature(poly):
    lead = None
    for m in sorted(poly):
        lead = poly[m]
        break
    inv = lead.inverse()
    return tuple(sorted((m, c * inv) for m, c in poly.items()))


def generate_relations(g, mode="all", subset_cap=22):
    """All defining relations of the quotient algebra of the resolution g."""
    rels = [Relation("hat", {(0,): RF_ONE})]
    t = RatFunc.t_power(1)
    t2 = RatFunc.t_power(2)
    for v, kind in enumerate(g.vertices):
        if kind[0] != "sing":
            continue
        x = g.diagram.crossings[kind[1]]
        lin = {}
        _add_into(lin, (x.a,), t)
        _add_into(lin, (x.b,), t)
        _add_into(lin, (x.c,), -RF_ONE)
        _add_into(lin, (x.d,), -RF_ONE)
        rels.append(Relation("linear_singular", lin))
        quad = {}
        _add_into(quad, _mono(x.a, x.b), t2)
        _add_into(quad, _mono(x.c, x.d), -RF_ONE)
        rels.append(Relation("quadratic_singular", quad))
    for j, x in enumerate(g.diagram.crossings):
        if g.singular[j]:
            continue
        rels.append(Relation("smooth_left", {(x.a,): t, (x.c,): -RF_ONE}))
        rels.append(Relation("smooth_right", {(x.b,): t, (x.d,): -RF_ONE}))

    # subsets are deduplicated on (weight, boundaries); the singleton subsets
    # repeat the quadratic and smoothing relations, so seed with those
    seen = set()
    for v, kind in enumerate(g.vertices):
        if kind[0] == "sing":
            x = g.diagram.crossings[kind[1]]
            seen.add((2, _mono(x.a, x.b), _mono(x.c, x.d)))
    for j, x in enumerate(g.diagram.crossings):
        if not g.singular[j]:
            seen.add((1, (x.a,), (x.c,)))
            seen.add((1, (x.b,), (x.d,)))
    for w in enumerate_subsets(g, mode=mode, cap=subset_cap):
        if len(w.out_boundary) != len(w.in_boundary):
            # cannot happen for oriented braid closures (every vertex
            # preserves in/out degree); refuse rather than mis-grade
            raise InhomogeneousRelation(
                f"subset with boundaries {sorted(w.out_boundary)} / "
                f"{sorted(w.in_boundary)} has unequal sizes")
        out_m = _mono(*w.out_boundary)
        in_m = _mono(*w.in_boundary)
        key = (w.weight, out_m, in_m)
        if key in seen:
            continue
        seen.add(key)
        if out_m == in_m:
            # equal boundaries leave (t^|W| - 1) * monomial, killing it
            poly = {out_m: RatFunc.t_power(w.weight) - RF_ONE}
        else:
            poly = {out_m: RatFunc.t_power(w.weight), in_m: -RF_ONE}
        rels.append(Relation("subset", poly))
    return rels


class GradedAlgebra:
    def __init__(self, edge_count, sigma, braid_index):
        self.edge_count = edge_count
        self.sigma = sigma
        self.shift_A = Fraction(sigma - braid_index + 1, 2)
        self.zero = False
        self.lin_sub = {}  # edge var -> linear form {free var: RatFunc}
        self.free_vars = []
        self.degrees = {}  # d -> {"basis": [...], "nf": {pivot mono: form}}
        self.top_degree = -1
        self._mult_tables = {}  # edge var -> {(d, basis mono): basis combo}

    @property
    def dims_by_degree(self):
        if self.zero:
            return {}
        return {d: len(info["basis"]) for d, info in self.degrees.items()}

    @property
    def dims(self):
        """Dimension per symmetrized Alexander grading A = -d + shift_A."""
        return {self.grading(d): dim
                for d, dim in self.dims_by_degree.items() if dim}

    def grading(self, degree):
        return -degree + self.shift_A

    @property
    def total_dim(self):
        return sum(self.dims_by_degree.values())

    def basis_elements(self):
        """All basis monomials as (degree, monomial), in degree order."""
        out = []
        for d in sorted(self.degrees):
            for m in self.degrees[d]["basis"]:
                out.append((d, m))
        return out

    def _mult_table(self, v):
        """Multiplication by the edge variable v on each basis element."""
        tab = self._mult_tables.get(v)
        if tab is not None:
            return tab
        tab = self._mult_tables[v] = {}
        form = self.lin_sub[v]
        for d in sorted(self.degrees):
            info_next = self.degrees.get(d + 1)
            for b in self.degrees[d]["basis"]:
                entry = {}
                if info_next is not None:
                    nf = info_next["nf"]
                    for fv, fc in form.items():
                        m = _mono(*(b + (fv,)))
                        red = nf.get(m)
                        if red is None:
                            _add_into(entry, m, fc)
                        else:
                            for bm, bc in red.items():
                                _add_into(entry, bm, fc * bc)
                tab[b] = entry
        return tab

    def reduce(self, poly):
        """Normal form of a polynomial in edge variables.

        Input and output are dicts monomial -> RatFunc; output monomials all
        lie in the stored bases.  Reduction folds each input monomial through
        the cached multiplication tables one variable at a time.
        """
        if self.zero:
            return {}
        out = {}
        for mono, coeff in poly.items():
            vec = {(): coeff}
            for v in mono:
                tab = self._mult_table(v)
                nxt = {}
                for b, c in vec.items():
                    for bm, bc in tab[b].items():
                        _add_into(nxt, bm, c * bc)
                vec = nxt
                if not vec:
                    break
            for b, c in vec.items():
                _add_into(out, b, c)
        return out

    def json_dims(self):
        return {f"{a.numerator}/{a.denominator}" if a.denominator != 1
                else str(a.numerator): dim
                for a, dim in sorted(self.dims.items(), reverse=True)}


def zero_algebra(edge_count, sigma, braid_index):
    alg = GradedAlgebra(edge_count, sigma, braid_index)
    alg.zero = True
    return alg


def build_algebra(g, relations=None, mode="all", degree_cap=None,
                  subset_cap=22):
    """Per-degree bases and reduction tables of the quotient algebra."""
    b = g.diagram.word.strands
    if not is_connected(g):
        return zero_algebra(g.n_edges, g.sigma, b)
    if relations is None:
        relations = generate_relations(g, mode=mode, subset_cap=subset_cap)
    if degree_cap is None:
        degree_cap = g.diagram.edge_count + 1  # 2n + 2

    alg = GradedAlgebra(g.n_edges, g.sigma, b)

    linear = []
    higher = []
    for r in relations:
        degs = r.degree_set()
        if len(degs) != 1:
            raise InhomogeneousRelation(f"mixed degrees {degs} in {r.kind}")
        if degs == {0}:
            # constant relation t^w - 1: the quotient collapses
            return zero_algebra(g.n_edges, g.sigma, b)
        if degs == {1}:
            linear.append({m[0]: c for m, c in r.poly.items()})
        else:
            higher.append(r.poly)

    lin_table = laurent_full(laurent_rows(linear))
    free = [v for v in range(g.n_edges) if v not in lin_table]
    alg.free_vars = free
    for v in free:
        alg.lin_sub[v] = {v: RF_ONE}
    for pv, lrow in lin_table.items():
        lead = lrow[pv]
        alg.lin_sub[pv] = {
            c: ratfunc_from_laurent({e: -x for e, x in p.items()}, lead)
            for c, p in lrow.items() if c != pv}

    alg.degrees[0] = {"basis": [()], "nf": {}}
    alg.degrees[1] = {"basis": [(v,) for v in free],
                      "nf": {(pv,): {(fv,): c for fv, c in alg.lin_sub[pv].items()}
                             for pv in lin_table}}
    alg.top_degree = 1 if free else 0
    if not free:
        return alg

    gens_by_degree = {}
    for poly in higher:
        gens_by_degree.setdefault(len(next(iter(poly))), []).append(poly)

    # Normal form of an edge-variable monomial, folded one variable at a
    # time through the linear substitution and the stored reductions.
    nf_cache = {(): {(): RF_ONE}}

    def nf_mono(mono):
        got = nf_cache.get(mono)
        if got is not None:
            return got
        prev = nf_mono(mono[1:])
        form = alg.lin_sub[mono[0]]
        nf_here = alg.degrees[len(mono)]["nf"]
        out = {}
        for b, c in prev.items():
            for fv, fc in form.items():
                m = _mono(*(b + (fv,)))
                red = nf_here.get(m)
                coeff = c * fc
                if red is None:
                    _add_into(out, m, coeff)
                else:
                    for bm, bc in red.items():
                        _add_into(out, bm, coeff * bc)
        nf_cache[mono] = out
        return out

    # Each degree d is an elimination in the span of the monomials
    # {x * b : x free variable, b in the degree d-1 basis}.  The degree-d
    # part of the ideal is spanned by the variable multiples of the degree
    # d-1 part together with the generators of degree exactly d, so it is
    # enough to quotient by (a) consistency rows x*(y*b') - y*(x*b') over
    # the degree d-2 basis and (b) the degree-d generators with all but one
    # variable of each monomial folded to normal form.
    def step(b, x, nf_dict):
        m = _mono(*(b + (x,)))
        red = nf_dict.get(m)
        return m, red

    d = 2
    while True:
        prev_info = alg.degrees[d - 1]
        prev_nf = prev_info["nf"]
        cols = sorted({_mono(*(b + (x,)))
                       for b in prev_info["basis"] for x in free})
        col_index = {m: i for i, m in enumerate(cols)}
        rows = []
        for i, x in enumerate(free):
            for y in free[i + 1:]:
                for b in alg.degrees[d - 2]["basis"]:
                    row = {}
                    for x1, x2, sgn in ((x, y, RF_ONE), (y, x, -RF_ONE)):
                        m, red = step(b, x2, prev_nf)
                        terms = red if red is not None else {m: RF_ONE}
                        for bm, bc in terms.items():
                            _add_into(row, _mono(*(bm + (x1,))), sgn * bc)
                    if row:
                        rows.append({col_index[m]: c for m, c in row.items()})
        for gen in gens_by_degree.get(d, ()):
            row = {}
            for mono, coeff in gen.items():
                prev = nf_mono(mono[1:])
                form = alg.lin_sub[mono[0]]
                for b, c in prev.items():
                    for fv, fc in form.items():
                        _add_into(row, _mono(*(b + (fv,))), coeff * c * fc)
            if row:
                rows.append({col_index[m]: c for m, c in row.items()})
        piv_table = laurent_full(laurent_rows(rows))
        basis = [cols[i] for i in range(len(cols)) if i not in piv_table]
        nf = {}
        for pc, lrow in piv_table.items():
            lead = lrow[pc]
            nf[cols[pc]] = {
                cols[c]: ratfunc_from_laurent({e: -v for e, v in p.items()},
                                              lead)
                for c, p in lrow.items() if c != pc}
        alg.degrees[d] = {"basis": basis, "nf": nf}
        if not basis:
            del alg.degrees[d]
            break
        alg.top_degree = d
        d += 1
        if d > degree_cap:
            raise DegreeCapExceeded(
                f"algebra did not vanish by degree {degree_cap}; "
                "suspect missing relations")
    return alg


# Kauffman corner calibration: at a singular vertex the four quadrant
# corners are N, W, S, E; one quadrant is disallowed and one counts twice
# (the paper's doubled corner).  Pinned by the two golden counts: the
# singularized trefoil has 4 states and the singularized figure-eight has 5.
KAUFFMAN_EXCLUDED = "E"
KAUFFMAN_DOUBLED = "W"


@dataclass(frozen=True)
class KauffmanStateCount:
    total: int


def count_kauffman_states(g, excluded=None, doubled=None):
    """Count corner assignments: singular vertices -> allowed regions.

    Regions are the faces minus the two adjoining the distinguished edge.
    Each assignment must be a bijection; the doubled quadrant contributes
    multiplicity 2.  Disconnected resolutions have no states.
    """
    if not is_connected(g):
        return KauffmanStateCount(0)
    excluded = excluded or KAUFFMAN_EXCLUDED
    doubled = doubled or KAUFFMAN_DOUBLED
    faces, _ = g.faces()
    regions = [f for f in range(len(faces))
               if f not in g.distinguished_faces()]
    singular = [v for v, kind in enumerate(g.vertices) if kind[0] == "sing"]
    if len(regions) != len(singular):
        return KauffmanStateCount(0)
    region_index = {f: i for i, f in enumerate(regions)}
    options = []
    for v in singular:
        corners = g.corner_faces(v)
        opts = {}
        for q, f in corners.items():
            if q == excluded or f not in region_index:
                continue
            mult = 2 if q == doubled else 1
            opts[region_index[f]] = opts.get(region_index[f], 0) + mult
        options.append(opts)

    # permanent by backtracking over vertices, most constrained first
    options.sort(key=len)
    n = len(options)

    def count(i, used):
        if i == n:
            return 1
        total = 0
        for r, mult in options[i].items():
            bit = 1 << r
            if not used & bit:
                total += mult * count(i + 1, used | bit)
        return total

    return KauffmanStateCount(count(0, 0))
