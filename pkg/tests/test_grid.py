import itertools

import pytest

from braidhfk.braid import build_diagram, parse_braid
from braidhfk.cube import assemble
from braidhfk.grid import (
    GridDiagram,
    GridError,
    SpecialGridMarking,
    alexander,
    grid_from_braid,
    grid_homology_tilde,
    lambda_alexander_maximal,
    lambda_is_cycle,
    lambda_state,
    marking_from_crossing,
    maslov,
    rectangle_count_between,
    rotate_grid,
    simplify_grid,
    singular_grid_from_marking,
    special_composite_check,
    special_grid_from_braid,
    special_violations,
    tilde_differential,
    zip_on_lambda_check,
)
from braidhfk.homology import homology

# right-handed trefoil on five columns and the figure eight on six
TREFOIL_5 = GridDiagram.build(5, (1, 0, 4, 3, 2), list(enumerate((4, 3, 2, 1, 0))))
FIG8_6 = GridDiagram.build(6, (3, 4, 2, 1, 5, 0), list(enumerate((5, 1, 0, 3, 2, 4))))
# TREFOIL_5 with the X in cell (4,0) stabilized into a 2x2 block
TREFOIL_6 = GridDiagram.build(6, (2, 0, 5, 4, 3, 1), list(enumerate((5, 4, 3, 2, 1, 0))))
UNKNOT_2 = GridDiagram.build(2, (0, 1), [(0, 1), (1, 0)])

# a five-column marking small enough for exhaustive scans; its corner
# contraction is the four-column singular grid used below
MARKING_5 = SpecialGridMarking(5, (2, 0, 3, 1, 4), ((0, 3), (3, 4), (4, 0)), (2, 2))


def cube_ranks(text):
    return homology(assemble(build_diagram(parse_braid(text)))).entries


class TestGridDiagram:
    def test_validate_rejects_bad_o(self):
        with pytest.raises(GridError):
            GridDiagram.build(3, (0, 0, 2), [(0, 1), (1, 2), (2, 0)]).validate()

    def test_validate_rejects_tiny(self):
        with pytest.raises(GridError):
            GridDiagram.build(1, (0,), [(0, 0)]).validate()

    def test_validate_rejects_unbalanced_row(self):
        with pytest.raises(GridError):
            GridDiagram.build(3, (0, 1, 2), [(0, 1), (1, 1), (2, 2)]).validate()

    def test_components(self):
        assert TREFOIL_5.components() == 1
        # two split columns of a 2-component unlink
        hopfless = GridDiagram.build(
            4, (0, 1, 2, 3), [(0, 1), (1, 0), (2, 3), (3, 2)]).validate()
        assert hopfless.components() == 2

    def test_json_round_trip(self):
        for g in (TREFOIL_5, FIG8_6, UNKNOT_2):
            assert GridDiagram.from_json(g.to_json()) == g

    def test_json_round_trip_singular(self):
        s = singular_grid_from_marking(MARKING_5)
        assert s.singular
        assert GridDiagram.from_json(s.to_json()) == s

    def test_crossing_squares_of_plain_trefoil(self):
        # the five-column torus diagram realizes the trefoil with three crossings
        assert len(TREFOIL_5.crossing_squares()) == 3


class TestHomology:
    def test_unknot(self):
        h = grid_homology_tilde(UNKNOT_2)
        assert h.deflated == {(0, 0): 1}
        assert h.raw == {(0, 0): 1, (-1, -1): 1}

    def test_trefoil_matches_cube(self):
        h = grid_homology_tilde(TREFOIL_5)
        assert h.deflated == {(0, 1): 1, (-1, 0): 1, (-2, -1): 1}
        assert h.deflated == cube_ranks("B2: s1 s1 s1")

    def test_figure_eight_matches_cube(self):
        h = grid_homology_tilde(FIG8_6)
        assert h.deflated == {(1, 1): 1, (0, 0): 3, (-1, -1): 1}
        assert h.total_deflated() == 5

    def test_stabilization_invariance(self):
        assert (grid_homology_tilde(TREFOIL_6).deflated
                == grid_homology_tilde(TREFOIL_5).deflated)

    def test_mirror_by_column_reflection(self):
        n = TREFOIL_5.n
        mirror = GridDiagram.build(
            n, tuple(reversed(TREFOIL_5.o)),
            [(n - 1 - c, r) for c, r in TREFOIL_5.xs]).validate()
        assert grid_homology_tilde(mirror).deflated == cube_ranks("B2: -s1 -s1 -s1")

    def test_braid_constructor_unknots(self):
        for text in ("B1:", "B2: s1", "B2: -s1"):
            g = grid_from_braid(parse_braid(text))
            assert grid_homology_tilde(g).deflated == {(0, 0): 1}, text

    def test_braid_constructor_trefoil_chirality(self):
        g = grid_from_braid(parse_braid("B2: s1 s1 s1"))
        assert g.n == 7
        assert grid_homology_tilde(g).deflated == cube_ranks("B2: s1 s1 s1")

    def test_rejects_singular(self):
        with pytest.raises(GridError):
            grid_homology_tilde(singular_grid_from_marking(MARKING_5))

    def test_rejects_links(self):
        g = GridDiagram.build(
            4, (0, 1, 2, 3), [(0, 1), (1, 0), (2, 3), (3, 2)])
        with pytest.raises(GridError):
            grid_homology_tilde(g)

    def test_size_cap(self):
        with pytest.raises(GridError):
            grid_homology_tilde(FIG8_6, max_size=5)

    def test_d_squared_vanishes_mod_two(self):
        for g in (TREFOIL_5, UNKNOT_2):
            for x in itertools.permutations(range(g.n)):
                targets = {}
                for y in tilde_differential(x, g):
                    for z in tilde_differential(y, g):
                        targets[z] = targets.get(z, 0) + 1
                assert all(v % 2 == 0 for v in targets.values())

    def test_differential_bigrading(self):
        g = TREFOIL_5
        for x in itertools.permutations(range(g.n)):
            for y in tilde_differential(x, g):
                assert maslov(y, g) == maslov(x, g) - 1
                assert alexander(y, g) == alexander(x, g)

    def test_integer_gradings(self):
        for x in itertools.permutations(range(FIG8_6.n)):
            assert maslov(x, FIG8_6).denominator == 1
            assert alexander(x, FIG8_6).denominator == 1


class TestSimplify:
    def test_destabilizes_hand_stabilization(self):
        assert simplify_grid(TREFOIL_6) == TREFOIL_5 or (
            grid_homology_tilde(simplify_grid(TREFOIL_6)).deflated
            == grid_homology_tilde(TREFOIL_5).deflated)

    def test_unknot_words_reach_minimal_size(self):
        for text in ("B2: s1", "B2: -s1", "B3: s1 s2"):
            g = simplify_grid(grid_from_braid(parse_braid(text)))
            assert g.n == 2, text

    def test_figure_eight_shrinks_within_oracle_cap(self):
        g = simplify_grid(grid_from_braid(parse_braid("B3: s1 -s2 s1 -s2")))
        assert g.n <= 7
        assert grid_homology_tilde(g).deflated == cube_ranks("B3: s1 -s2 s1 -s2")

    def test_rotation_preserves_homology(self):
        rot = rotate_grid(TREFOIL_5, 2, 3)
        assert (grid_homology_tilde(rot).deflated
                == grid_homology_tilde(TREFOIL_5).deflated)


class TestSpecialConstructor:
    def test_unknot_special_grid(self):
        g = special_grid_from_braid(parse_braid("B2: s1"))
        assert g.n == 7
        assert special_violations(g) == []
        assert len(g.crossing_squares()) == 1

    def test_trefoil_special_grid(self):
        g = special_grid_from_braid(parse_braid("B2: s1 s1 s1"))
        assert g.n == 13
        assert special_violations(g) == []
        assert len(g.crossing_squares()) == 3

    def test_figure_eight_special_grid(self):
        g = special_grid_from_braid(parse_braid("B3: s1 -s2 s1 -s2"))
        assert g.n == 18
        assert special_violations(g) == []
        assert len(g.crossing_squares()) == 4

    def test_plain_trefoil_grid_is_not_special(self):
        assert special_violations(TREFOIL_5)

    def test_every_crossing_yields_a_marking(self):
        g = special_grid_from_braid(parse_braid("B2: s1 s1 s1"))
        for sq in g.crossing_squares():
            m = marking_from_crossing(g, sq)
            assert len(set(m.u_variables())) == 4
            m.grid_a().validate()
            m.grid_b().validate()

    def test_marking_rejects_unflanked_square(self):
        sq = TREFOIL_5.crossing_squares()[0]
        with pytest.raises(GridError):
            marking_from_crossing(TREFOIL_5, sq)


class TestLambda:
    def test_cycle_on_both_resolutions(self):
        g = special_grid_from_braid(parse_braid("B2: s1"))
        m = marking_from_crossing(g, g.crossing_squares()[0])
        assert lambda_is_cycle(m.grid_a())
        assert lambda_is_cycle(m.grid_b())

    def test_singular_contraction_valid(self):
        g = special_grid_from_braid(parse_braid("B2: s1"))
        m = marking_from_crossing(g, g.crossing_squares()[0])
        s = singular_grid_from_marking(m)
        assert s.n == 6
        assert s.singular
        s.validate()

    def test_maximal_alexander_on_singular_grids(self):
        g = special_grid_from_braid(parse_braid("B2: s1"))
        m = marking_from_crossing(g, g.crossing_squares()[0])
        for s in (singular_grid_from_marking(m),
                  singular_grid_from_marking(MARKING_5)):
            assert lambda_is_cycle(s)
            assert lambda_alexander_maximal(s)


class TestCompositeIdentity:
    def test_unknot_exhaustive(self):
        g = special_grid_from_braid(parse_braid("B2: s1"))
        m = marking_from_crossing(g, g.crossing_squares()[0])
        ok, msg = special_composite_check(m)
        assert ok, msg
        assert "720 of 720" in msg

    def test_trefoil_sampled(self):
        g = special_grid_from_braid(parse_braid("B2: s1 s1 s1"))
        m = marking_from_crossing(g, g.crossing_squares()[0])
        ok, msg = special_composite_check(m, sample=12, seed=0)
        assert ok, msg

    def test_small_marking_exhaustive(self):
        ok, msg = special_composite_check(MARKING_5)
        assert ok, msg
        assert "24 of 24" in msg


class TestZip:
    def test_trefoil_all_crossings(self):
        g = special_grid_from_braid(parse_braid("B2: s1 s1 s1"))
        for sq in g.crossing_squares():
            m = marking_from_crossing(g, sq)
            report = zip_on_lambda_check(m)
            assert report["ok"], (sq, report)
            assert report["count"] == 2
            assert report["strays"] == 0

    def test_small_marking_monomials(self):
        report = zip_on_lambda_check(MARKING_5)
        assert report["ok"]
        ua, _ub, _uc, ud = MARKING_5.u_variables()
        assert report["monomials"] == sorted([((ua, 1),), ((ud, 1),)])

    def test_brute_force_rectangle_scan(self):
        # full enumeration over the four-column site agrees with the count
        lam_r = lambda_state(MARKING_5.grid_a())
        lam_x = lambda_state(MARKING_5.grid_b())
        assert rectangle_count_between(MARKING_5, lam_r, lam_x) == 2

    def test_negative_control(self):
        lam_r = lambda_state(MARKING_5.grid_a())
        cx, cy = MARKING_5.corner
        hits = 0
        for dst in itertools.permutations(range(MARKING_5.n)):
            if dst[cx] != cy or dst == lambda_state(MARKING_5.grid_b()):
                continue
            hits += rectangle_count_between(MARKING_5, lam_r, dst)
        assert hits == 0
