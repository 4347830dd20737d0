"""Braid word parsing and the decorated closed-braid diagram.

A braid word on b strands closes up to a knot when its underlying permutation
is a single b-cycle.  The closure diagram carries 2n+1 edges numbered by
traversal order starting at e0, the edge leaving the marked bivalent vertex.
The marked vertex subdivides the topmost edge of strand position 1, so the
edge entering it gets the last number 2n.

Each crossing knows its four incident edges by local role: c (incoming left),
d (incoming right), a (outgoing left), b (outgoing right).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field


class BraidSyntaxError(ValueError):
    pass


class NotAKnotError(ValueError):
    def __init__(self, cycles):
        self.cycles = cycles
        desc = " ".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in cycles)
        super().__init__(
            f"closure is a link with {len(cycles)} components, not a knot; "
            f"strand cycle structure: {desc}"
        )


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple  # of (generator index i, sign)

    @property
    def text(self):
        parts = [f"B{self.strands}:"]
        for i, sign in self.letters:
            parts.append(f"s{i}" if sign > 0 else f"-s{i}")
        return " ".join(parts)


def permutation_cycles(word):
    """Cycle decomposition of the positions permutation of the closure."""
    perm = list(range(word.strands + 1))  # 1-based positions
    for i, _sign in word.letters:
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = set()
    cycles = []
    for start in range(1, word.strands + 1):
        if start in seen:
            continue
        cyc = []
        p = start
        while p not in seen:
            seen.add(p)
            cyc.append(p)
            p = perm[p]
        cycles.append(cyc)
    return cycles


_HEADER = re.compile(r"^\s*B(\d+)\s*:")
_LETTER = re.compile(r"^(-?)s(\d+)$")


def parse_braid(text):
    """Parse 'B<strands>: s1 -s2 ...' into a validated BraidWord."""
    m = _HEADER.match(text)
    if not m:
        raise BraidSyntaxError(
            f"position 0: expected header 'B<strands>:' in {text!r}")
    strands = int(m.group(1))
    if strands < 1:
        raise BraidSyntaxError("strand count must be positive")
    letters = []
    pos = m.end()
    for tok in text[m.end():].split():
        at = text.index(tok, pos)
        pos = at + len(tok)
        lm = _LETTER.match(tok)
        if not lm:
            raise BraidSyntaxError(f"position {at}: bad letter {tok!r}")
        i = int(lm.group(2))
        if not 1 <= i <= strands - 1:
            raise BraidSyntaxError(
                f"position {at}: generator s{i} needs {i + 1} strands, have {strands}")
        letters.append((i, -1 if lm.group(1) else 1))
    word = BraidWord(strands, tuple(letters))
    cycles = permutation_cycles(word)
    if len(cycles) != 1:
        raise NotAKnotError(cycles)
    return word


@dataclass
class Crossing:
    order_index: int
    sign: int
    position: int  # leftmost of the two braid positions it occupies
    a: int = -1  # outgoing left
    b: int = -1  # outgoing right
    c: int = -1  # incoming left
    d: int = -1  # incoming right


@dataclass
class DecoratedDiagram:
    word: BraidWord
    crossings: list
    edge_count: int
    # edge id -> (tail endpoint, head endpoint); endpoints are
    # ("x", crossing index, slot) or ("marked",)
    tails: dict = field(default_factory=dict)
    heads: dict = field(default_factory=dict)

    @property
    def n(self):
        return len(self.crossings)

    @property
    def negative_count(self):
        return sum(1 for x in self.crossings if x.sign < 0)

    def to_json(self):
        return {
            "strands": self.word.strands,
            "letters": [[i, s] for i, s in self.word.letters],
            "edges": self.edge_count,
            "crossings": [
                {"sign": x.sign, "a": x.a, "b": x.b, "c": x.c, "d": x.d}
                for x in self.crossings
            ],
            "distinguished_edge": 0,
        }


def build_diagram(word):
    """Build the decorated closure diagram of a braid word."""
    n = len(word.letters)
    crossings = [
        Crossing(order_index=j, sign=sign, position=i)
        for j, (i, sign) in enumerate(word.letters)
    ]

    # Simulate the braid bottom to top.  open_at[p] is the lower endpoint
    # ("x", j, slot) of the strand segment currently open at position p, or
    # ("bottom", p) before any crossing has touched that position.
    open_at = {p: ("bottom", p) for p in range(1, word.strands + 1)}
    # segments as (tail endpoint, head endpoint)
    segments = []
    for j, (i, _sign) in enumerate(word.letters):
        segments.append((open_at[i], ("x", j, "c")))
        segments.append((open_at[i + 1], ("x", j, "d")))
        open_at[i] = ("x", j, "a")
        open_at[i + 1] = ("x", j, "b")
    # close up: top of position p joins bottom of position p; position 1
    # passes through the marked vertex on the way around.
    segments.append((open_at[1], ("marked",)))
    segments.append((("marked",), ("bottom", 1)))
    for p in range(2, word.strands + 1):
        segments.append((open_at[p], ("bottom", p)))

    # splice out the virtual bottom points, merging segment chains into edges
    by_tail = {}
    for tail, head in segments:
        by_tail[tail] = head

    def resolve(endpoint):
        while endpoint[0] == "bottom":
            endpoint = by_tail[endpoint]
        return endpoint

    edges = []  # (tail, head) with real endpoints only
    for tail, head in segments:
        if tail[0] == "bottom":
            continue  # merged into the segment that feeds it
        edges.append((tail, resolve(head)))

    # number edges by traversal order from the marked vertex
    out_of = {tail: (tail, head) for tail, head in edges}
    continuation = {"c": "b", "d": "a"}  # strand passes through the crossing
    numbered = {}
    cur = out_of[("marked",)]
    for idx in range(len(edges)):
        numbered[cur] = idx
        head = cur[1]
        if head[0] == "marked":
            break
        _, j, slot = head
        cur = out_of[("x", j, continuation[slot])]
    if len(numbered) != len(edges):
        raise AssertionError("closure traversal did not visit every edge")

    diagram = DecoratedDiagram(word, crossings, edge_count=len(edges))
    for (tail, head), idx in numbered.items():
        diagram.tails[idx] = tail
        diagram.heads[idx] = head
        if tail[0] == "x":
            setattr(crossings[tail[1]], tail[2], idx)
        if head[0] == "x":
            setattr(crossings[head[1]], head[2], idx)
    assert diagram.edge_count == 2 * n + 1
    return diagram


def diagram_from_json(data):
    word = BraidWord(data["strands"], tuple((i, s) for i, s in data["letters"]))
    return build_diagram(word)


def diagram_to_json_text(diagram):
    return json.dumps(diagram.to_json(), sort_keys=True)
