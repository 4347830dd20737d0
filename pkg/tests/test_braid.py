import json

import pytest

from braidhfk.braid import (
    BraidSyntaxError,
    NotAKnotError,
    build_diagram,
    diagram_from_json,
    diagram_to_json_text,
    parse_braid,
)

TREFOIL = "B2: s1 s1 s1"
FIG8 = "B3: s1 -s2 s1 -s2"


class TestParse:
    def test_trefoil(self):
        w = parse_braid(TREFOIL)
        assert w.strands == 2
        assert w.letters == ((1, 1), (1, 1), (1, 1))

    def test_unknot(self):
        w = parse_braid("B1:")
        assert w.strands == 1
        assert w.letters == ()

    def test_two_component_link_rejected(self):
        with pytest.raises(NotAKnotError) as exc:
            parse_braid("B2: s1 s1")
        assert len(exc.value.cycles) == 2

    def test_syntax_error_position(self):
        with pytest.raises(BraidSyntaxError, match="position"):
            parse_braid("B2: s1 x3")

    def test_generator_out_of_range(self):
        with pytest.raises(BraidSyntaxError):
            parse_braid("B2: s2")

    def test_negative_letters(self):
        w = parse_braid(FIG8)
        assert w.letters == ((1, 1), (2, -1), (1, 1), (2, -1))


class TestDiagram:
    def test_trefoil_edge_count(self):
        d = build_diagram(parse_braid(TREFOIL))
        assert d.edge_count == 7
        assert d.n == 3

    def test_unknot_single_edge(self):
        d = build_diagram(parse_braid("B1:"))
        assert d.edge_count == 1
        assert d.crossings == []
        assert d.tails[0] == ("marked",)
        assert d.heads[0] == ("marked",)

    def test_fig8_counts(self):
        d = build_diagram(parse_braid(FIG8))
        assert d.edge_count == 9
        assert d.n == 4
        assert d.negative_count == 2

    def test_crossings_four_valent(self):
        d = build_diagram(parse_braid(FIG8))
        incident = {}
        for x in d.crossings:
            slots = [x.a, x.b, x.c, x.d]
            assert all(s >= 0 for s in slots)
            for e in slots:
                incident.setdefault(e, 0)
                incident[e] += 1
        # each edge has two endpoints in total across all vertices
        for e in range(d.edge_count):
            ends = incident.get(e, 0)
            ends += (1 if d.tails[e] == ("marked",) else 0)
            ends += (1 if d.heads[e] == ("marked",) else 0)
            assert ends == 2

    def test_traversal_order_consecutive(self):
        # following the knot from e0 must visit edge k after edge k-1
        d = build_diagram(parse_braid(TREFOIL))
        cont = {"c": "b", "d": "a"}
        e = 0
        for step in range(1, d.edge_count):
            head = d.heads[e]
            assert head[0] == "x"
            x = d.crossings[head[1]]
            e = getattr(x, cont[head[2]])
            assert e == step
        assert d.heads[e] == ("marked",)

    def test_json_roundtrip(self):
        d = build_diagram(parse_braid(FIG8))
        text = diagram_to_json_text(d)
        d2 = diagram_from_json(json.loads(text))
        assert diagram_to_json_text(d2) == text
