"""Complete resolutions of a decorated braid diagram.

A resolution assignment picks, for each crossing, either its singularization
(one 4-valent vertex) or its oriented smoothing (two 2-valent vertices).  For
a positive crossing the 0-resolution is the singularization; for a negative
crossing the roles are swapped.

The plane embedding is known from braid position, so faces are computed from
a combinatorial rotation system: darts in counterclockwise order around each
vertex, faces as orbits of (rotation o reversal).  The face to the left of a
dart d is exactly the orbit of d, which is what the Kauffman-corner and
coherent-cycle machinery needs.
"""

from __future__ import annotations

from dataclasses import dataclass


class SubsetCapExceeded(ValueError):
    def __init__(self, count, cap):
        super().__init__(
            f"{count} non-marked vertices exceeds the subset cap {cap}; "
            "use mode='coherent_cycles'")


@dataclass(frozen=True)
class VertexSubset:
    members: frozenset  # of vertex indices, never the marked vertex
    weight: int
    out_boundary: frozenset  # edges from members to the complement
    in_boundary: frozenset  # edges from the complement into members


class ResolutionGraph:
    def __init__(self, diagram, assignment):
        self.diagram = diagram
        self.assignment = tuple(assignment)
        if len(self.assignment) != diagram.n:
            raise ValueError("assignment length must equal crossing count")

        # a crossing is singular at its 0-resolution iff it is positive
        self.singular = tuple(
            (bit == 0) == (x.sign > 0)
            for bit, x in zip(self.assignment, diagram.crossings)
        )
        self.sigma = sum(self.singular)

        self.vertices = []
        vx = {}  # (crossing, slot) -> vertex index
        for j, x in enumerate(diagram.crossings):
            if self.singular[j]:
                idx = len(self.vertices)
                self.vertices.append(("sing", j))
                for slot in "abcd":
                    vx[(j, slot)] = idx
            else:
                left = len(self.vertices)
                self.vertices.append(("sml", j))
                right = len(self.vertices)
                self.vertices.append(("smr", j))
                vx[(j, "a")] = vx[(j, "c")] = left
                vx[(j, "b")] = vx[(j, "d")] = right
        self.marked = len(self.vertices)
        self.vertices.append(("marked",))

        def endpoint(ep):
            if ep[0] == "marked":
                return self.marked
            _, j, slot = ep
            return vx[(j, slot)]

        self.n_edges = diagram.edge_count
        self.tail = [endpoint(diagram.tails[e]) for e in range(self.n_edges)]
        self.head = [endpoint(diagram.heads[e]) for e in range(self.n_edges)]

        self.out_edges = [[] for _ in self.vertices]
        self.in_edges = [[] for _ in self.vertices]
        for e in range(self.n_edges):
            self.out_edges[self.tail[e]].append(e)
            self.in_edges[self.head[e]].append(e)

        self._faces = None

    def weight(self, v):
        return 2 if self.vertices[v][0] == "sing" else 1

    def total_weight(self):
        return sum(self.weight(v) for v in range(len(self.vertices))
                   if v != self.marked)

    # --- rotation system and faces -------------------------------------

    def rotation(self, v):
        """Darts (edge, end) in counterclockwise order around vertex v.

        end is 'T' when the dart leaves v along the edge, 'H' when the edge
        arrives at v.  Crossing geometry: a exits upper-left, b upper-right,
        c enters lower-left, d lower-right.
        """
        kind = self.vertices[v]
        if kind[0] == "sing":
            x = self.diagram.crossings[kind[1]]
            return [(x.b, "T"), (x.a, "T"), (x.c, "H"), (x.d, "H")]
        if kind[0] == "sml":
            x = self.diagram.crossings[kind[1]]
            return [(x.a, "T"), (x.c, "H")]
        if kind[0] == "smr":
            x = self.diagram.crossings[kind[1]]
            return [(x.b, "T"), (x.d, "H")]
        out = self.out_edges[self.marked][0]
        inc = self.in_edges[self.marked][0]
        return [(out, "T"), (inc, "H")]

    def faces(self):
        """List of faces (dart tuples) and the dart -> face index map.

        The face with index dart_face[(e, 'T')] lies to the left of edge e;
        dart_face[(e, 'H')] is the face to its right.
        """
        if self._faces is not None:
            return self._faces
        succ = {}  # dart -> next dart counterclockwise at the same vertex
        dart_vertex = {}
        for v in range(len(self.vertices)):
            rot = self.rotation(v)
            for i, d in enumerate(rot):
                succ[d] = rot[(i + 1) % len(rot)]
                dart_vertex[d] = v
        def flip(d):
            e, end = d
            return (e, "H" if end == "T" else "T")
        faces = []
        dart_face = {}
        for start in succ:
            if start in dart_face:
                continue
            orbit = []
            d = start
            while d not in dart_face:
                dart_face[d] = len(faces)
                orbit.append(d)
                d = succ[flip(d)]
            faces.append(tuple(orbit))
        self._faces = (faces, dart_face)
        return self._faces

    def euler_check(self):
        """V - E + F == 2 on every component (each embeds in a sphere)."""
        faces, dart_face = self.faces()
        comp_of = {}
        for ci, comp in enumerate(connected_components(self)):
            for v in comp:
                comp_of[v] = ci
        counts = {}
        for ci in set(comp_of.values()):
            counts[ci] = [0, 0, 0]
        for v, ci in comp_of.items():
            counts[ci][0] += 1
        for e in range(self.n_edges):
            counts[comp_of[self.tail[e]]][1] += 1
        for face in faces:
            if face:
                counts[comp_of[self.tail[face[0][0]]]][2] += 1
        return all(v - e + f == 2 for v, e, f in counts.values()
                   if e > 0 or v > 1)

    def distinguished_faces(self):
        """The two faces adjoining the marked vertex's edges."""
        _, dart_face = self.faces()
        e0 = self.out_edges[self.marked][0]
        return {dart_face[(e0, "T")], dart_face[(e0, "H")]}

    def face_vertices(self, face_idx):
        faces, _ = self.faces()
        verts = set()
        for e, end in faces[face_idx]:
            verts.add(self.tail[e])
            verts.add(self.head[e])
        return verts

    def corner_faces(self, v):
        """Faces at the quadrants of a singular vertex, keyed N/W/S/E.

        Quadrants sit between consecutive counterclockwise darts; the corner
        after dart d in the rotation belongs to the face left of d.
        """
        if self.vertices[v][0] != "sing":
            raise ValueError("corner_faces applies to singular vertices")
        _, dart_face = self.faces()
        x = self.diagram.crossings[self.vertices[v][1]]
        return {
            "N": dart_face[(x.b, "T")],
            "W": dart_face[(x.a, "T")],
            "S": dart_face[(x.c, "H")],
            "E": dart_face[(x.d, "H")],
        }

    def to_json(self):
        return {
            "assignment": "".join(str(b) for b in self.assignment),
            "sigma": self.sigma,
            "vertices": [list(v) for v in self.vertices],
            "weights": [self.weight(v) if v != self.marked else 0
                        for v in range(len(self.vertices))],
            "edges": [[self.tail[e], self.head[e]]
                      for e in range(self.n_edges)],
        }


def resolve(diagram, assignment):
    return ResolutionGraph(diagram, assignment)


def connected_components(g):
    """Partition of vertex indices of the underlying undirected graph."""
    parent = list(range(len(g.vertices)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(g.n_edges):
        ra, rb = find(g.tail[e]), find(g.head[e])
        if ra != rb:
            parent[ra] = rb
    comps = {}
    for v in range(len(g.vertices)):
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def is_connected(g):
    return len(connected_components(g)) == 1


def _subset_of(g, members):
    members = frozenset(members)
    weight = sum(g.weight(v) for v in members)
    out_b = []
    in_b = []
    for e in range(g.n_edges):
        t_in = g.tail[e] in members
        h_in = g.head[e] in members
        if t_in and not h_in:
            out_b.append(e)
        elif h_in and not t_in:
            in_b.append(e)
    return VertexSubset(members, weight, frozenset(out_b), frozenset(in_b))


def enumerate_subsets(g, mode="all", cap=22):
    """Stream the vertex subsets whose relations cut out the algebra.

    mode='all': every nonempty subset of non-marked vertices.
    mode='coherent_cycles': subsets enclosed by coherently oriented
    multi-cycles avoiding the marked vertex, plus all single-vertex subsets.
    """
    non_marked = [v for v in range(len(g.vertices)) if v != g.marked]
    if mode == "all":
        if len(non_marked) > cap:
            raise SubsetCapExceeded(len(non_marked), cap)
        for mask in range(1, 1 << len(non_marked)):
            members = [non_marked[i] for i in range(len(non_marked))
                       if mask >> i & 1]
            yield _subset_of(g, members)
        return
    if mode != "coherent_cycles":
        raise ValueError(f"unknown mode {mode!r}")

    for v in non_marked:
        yield _subset_of(g, [v])

    if not is_connected(g):
        # disconnected resolutions short-circuit to the zero algebra before
        # subset relations matter, so cycles are not enumerated here
        return

    faces, dart_face = g.faces()
    excluded = g.distinguished_faces()
    candidates = [f for f in range(len(faces)) if f not in excluded]
    seen = set()
    for mask in range(1, 1 << len(candidates)):
        chosen = {candidates[i] for i in range(len(candidates))
                  if mask >> i & 1}
        members = set()
        boundary_out = {}
        boundary_in = {}
        ok = True
        for e in range(g.n_edges):
            left = dart_face[(e, "T")] in chosen
            right = dart_face[(e, "H")] in chosen
            if left or right:
                members.add(g.tail[e])
                members.add(g.head[e])
            if left != right:
                # boundary edge; embedded coherent cycles pass each vertex
                # at most once in each direction
                t, h = g.tail[e], g.head[e]
                if t in boundary_out or h in boundary_in:
                    ok = False
                    break
                boundary_out[t] = e
                boundary_in[h] = e
        if not ok:
            continue
        if set(boundary_out) != set(boundary_in):
            continue  # boundary is not a union of directed cycles
        if g.marked in members:
            continue
        key = frozenset(members)
        if key in seen or len(key) <= 1:
            continue
        seen.add(key)
        yield _subset_of(g, members)
