import itertools

import pytest

from braidhfk.braid import build_diagram, parse_braid
from braidhfk.resolution import (
    SubsetCapExceeded,
    connected_components,
    enumerate_subsets,
    resolve,
)

TREFOIL = "B2: s1 s1 s1"
FIG8 = "B3: s1 -s2 s1 -s2"


def graph(text, bits):
    return resolve(build_diagram(parse_braid(text)), bits)


class TestResolve:
    def test_trefoil_all_singular(self):
        g = graph(TREFOIL, (0, 0, 0))
        assert g.sigma == 3
        kinds = [v[0] for v in g.vertices]
        assert kinds.count("sing") == 3
        assert kinds.count("marked") == 1
        assert g.n_edges == 7

    def test_trefoil_all_smoothed_disconnected(self):
        g = graph(TREFOIL, (1, 1, 1))
        assert g.sigma == 0
        assert len(connected_components(g)) == 2

    def test_unknot_single_circle(self):
        g = graph("B1:", ())
        assert len(connected_components(g)) == 1
        assert g.n_edges == 1

    def test_negative_crossing_bit_meaning(self):
        # for a negative crossing the 0-resolution is the smoothing
        g = graph(FIG8, (0, 0, 0, 0))
        assert g.sigma == 2
        g = graph(FIG8, (0, 1, 0, 1))
        assert g.sigma == 4

    def test_euler_formula_all_resolutions(self):
        d = build_diagram(parse_braid(FIG8))
        for bits in itertools.product((0, 1), repeat=4):
            assert resolve(d, bits).euler_check()

    def test_json_export(self):
        data = graph(TREFOIL, (0, 1, 0)).to_json()
        assert data["assignment"] == "010"
        assert data["sigma"] == 2
        assert len(data["edges"]) == 7


class TestSubsets:
    def test_all_mode_count(self):
        g = graph(TREFOIL, (0, 0, 0))
        assert sum(1 for _ in enumerate_subsets(g, "all")) == 7

    def test_all_vertices_boundary(self):
        # W = everything: only the edges through the marked vertex cross
        g = graph(TREFOIL, (0, 0, 0))
        full = max(enumerate_subsets(g, "all"), key=lambda s: len(s.members))
        assert full.weight == 6
        assert full.out_boundary == frozenset({6})
        assert full.in_boundary == frozenset({0})

    def test_single_singular_vertex_degenerates(self):
        g = graph(TREFOIL, (0, 0, 0))
        singles = [s for s in enumerate_subsets(g, "all") if len(s.members) == 1]
        for s in singles:
            (v,) = s.members
            x = g.diagram.crossings[g.vertices[v][1]]
            assert s.out_boundary == frozenset({x.a, x.b})
            assert s.in_boundary == frozenset({x.c, x.d})

    def test_weight_complement(self):
        g = graph(FIG8, (0, 0, 0, 0))
        total = g.total_weight()
        subs = list(enumerate_subsets(g, "all"))
        by_members = {s.members: s for s in subs}
        non_marked = frozenset(v for v in range(len(g.vertices)) if v != g.marked)
        for s in subs:
            comp = non_marked - s.members
            if not comp:
                continue
            c = by_members[comp]
            assert s.weight + c.weight == total
            # boundaries swap roles away from the marked vertex
            out_s = {e for e in s.out_boundary if g.head[e] != g.marked}
            in_c = {e for e in c.in_boundary if g.tail[e] != g.marked}
            assert out_s == in_c

    def test_cap(self):
        g = graph("B3: s1 s1 s1 s1 s1 s2", (1,) * 6)
        with pytest.raises(SubsetCapExceeded):
            list(enumerate_subsets(g, "all", cap=5))

    def test_coherent_includes_singletons_and_full_cycle(self):
        g = graph(TREFOIL, (0, 0, 0))
        subs = list(enumerate_subsets(g, "coherent_cycles"))
        sizes = sorted(len(s.members) for s in subs)
        assert sizes == [1, 1, 1, 3]

    def test_fig8_innermost_cycle_weight_4(self):
        g = graph(FIG8, (0, 1, 0, 1))
        weights = {}
        for s in enumerate_subsets(g, "coherent_cycles"):
            if len(s.members) > 1:
                weights.setdefault(s.weight, []).append(s)
        assert 4 in weights
        found = [s for s in weights[4]
                 if len(s.out_boundary) == 2 and len(s.in_boundary) == 2]
        assert found
