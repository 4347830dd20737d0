import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from braidhfk.alexander import LaurentPoly
from braidhfk.braid import BraidWord, build_diagram, parse_braid, permutation_cycles
from braidhfk.cube import (
    FaceCheckError,
    assemble,
    edge_sign,
    resolution_key,
)

TREFOIL = "B2: s1 s1 s1"
FIG8 = "B3: s1 -s2 s1 -s2"


def cube(text, **kw):
    return assemble(build_diagram(parse_braid(text)), **kw)


class TestEdgeSign:
    def test_base_vertex_positive(self):
        assert all(edge_sign(0, p) == 1 for p in range(6))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 255), st.integers(0, 7), st.integers(0, 7))
    def test_square_anticommutes(self, mask, p, q):
        # the sign rule makes opposite edges of every 2-face differ in sign
        if p == q or mask >> p & 1 or mask >> q & 1:
            return
        s1 = edge_sign(mask, p) * edge_sign(mask | 1 << p, q)
        s2 = edge_sign(mask, q) * edge_sign(mask | 1 << q, p)
        assert s1 == -s2


class TestGradings:
    def test_edge_maps_preserve_aprime_drop_m(self):
        total = cube(FIG8)
        for (mask, p), emap in total.edge_maps.items():
            tmask = mask | 1 << p
            for (d, mono), img in emap.items():
                a_src, m_src, _ = total.index[(mask, d, mono)]
                for tmono in img:
                    a_tgt, m_tgt, _ = total.index[(tmask, len(tmono), tmono)]
                    assert a_tgt == a_src
                    assert m_tgt == m_src - 1

    def test_trefoil_group_dims(self):
        dims = cube(TREFOIL).group_dims()
        assert dims[(Fraction(1), Fraction(2))] == 1
        assert dims[(Fraction(0), Fraction(0))] == 2
        assert dims[(Fraction(-1), Fraction(-2))] == 1
        assert sum(dims.values()) == 13

    def test_integer_gradings_on_knots(self):
        for text in (TREFOIL, FIG8, "B2: -s1 -s1 -s1"):
            for aprime, m in cube(text).basis:
                assert aprime.denominator == 1
                assert m.denominator == 1


class TestDifferential:
    def test_d_squared_checked_on_build(self):
        # assemble raises if D^2 != 0; make the verification explicit too
        total = cube(FIG8)
        total.verify_d_squared()

    def test_corrupt_sign_fails_face_check(self):
        with pytest.raises(FaceCheckError):
            cube(TREFOIL, corrupt_signs=True)

    def test_trefoil_column_euler(self):
        cols = cube(TREFOIL).column_euler()
        assert cols[0] == LaurentPoly({1: 1, 0: 2, -1: 1})
        assert cols[1] == LaurentPoly({0: -3, 1: -3})
        assert cols[2] == LaurentPoly({1: 3})
        assert 3 not in cols  # all-smoothed resolution is disconnected
        total = LaurentPoly()
        for p in cols.values():
            total = total + p
        assert total == LaurentPoly({-1: 1, 0: -1, 1: 1})


class TestCache:
    def test_shared_cache_matches_uncached(self):
        cache = {}
        for signs in itertools.product((1, -1), repeat=3):
            w = BraidWord(2, tuple((1, s) for s in signs))
            assert len(permutation_cycles(w)) == 1
            d = build_diagram(w)
            fresh = assemble(d)
            shared = assemble(d, cache=cache)
            assert fresh.group_dims() == shared.group_dims()
        assert cache

    def test_resolution_key_ignores_signs(self):
        d_pos = build_diagram(parse_braid(TREFOIL))
        d_neg = build_diagram(parse_braid("B2: -s1 -s1 -s1"))
        # the 0-resolution of a positive crossing and the 1-resolution of a
        # negative one are the same singularized vertex
        assert (resolution_key(d_pos, (0, 0, 0))
                == resolution_key(d_neg, (1, 1, 1)))
