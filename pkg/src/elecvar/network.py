"""Plane electrical networks: Kirchhoff and response matrices, Y-Delta moves.

The embedding is a rotation system: for each vertex, the clockwise list of
incident edge indices.  For a boundary vertex the list starts just after
the gap facing the outer circle, so it is read linearly; interior lists are
cyclic.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, DegeneracyError, ParseError, SingularMatrixError
from .matrix import Matrix, schur_complement
from .rational import fmt, parse_rational


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    gamma: Fraction

    def other(self, w):
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ArgumentError(f"{w} is not an endpoint of {self.u}-{self.v}")


@dataclass(frozen=True, eq=False)
class PlaneNetwork:
    boundary: tuple
    edges: tuple
    rotation: dict
    interior: tuple = ()

    def __post_init__(self):
        seen = list(self.boundary) + list(self.interior)
        extra = []
        for e in self.edges:
            for w in (e.u, e.v):
                if w not in seen and w not in extra:
                    extra.append(w)
        object.__setattr__(self, "interior", tuple(self.interior) + tuple(extra))

    @property
    def vertices(self):
        return tuple(self.boundary) + tuple(self.interior)

    @property
    def n_boundary(self):
        return len(self.boundary)

    def incident(self, w):
        return [k for k, e in enumerate(self.edges) if w in (e.u, e.v)]

    def gammas(self):
        return [e.gamma for e in self.edges]

    def with_gammas(self, gammas):
        gammas = list(gammas)
        if len(gammas) != len(self.edges):
            raise ArgumentError("one conductance per edge required")
        edges = tuple(Edge(e.u, e.v, Fraction(g)) for e, g in zip(self.edges, gammas))
        return PlaneNetwork(self.boundary, edges, self.rotation, self.interior)

    def _canon(self):
        edges = tuple((frozenset((e.u, e.v)), e.gamma) for e in self.edges)
        rot = {}
        for w, lst in self.rotation.items():
            lst = list(lst)
            if w not in self.boundary and lst:
                k = lst.index(min(lst))
                lst = lst[k:] + lst[:k]
            rot[w] = tuple(lst)
        return (tuple(self.boundary), frozenset(self.interior), edges, rot)

    def __eq__(self, other):
        if not isinstance(other, PlaneNetwork):
            return NotImplemented
        return self._canon() == other._canon()


def make_network(boundary, edges, rotation, interior=()):
    """Build from plain data: edges as (u, v, gamma) triples."""
    es = tuple(Edge(str(u), str(v), Fraction(g)) for u, v, g in edges)
    rot = {str(w): tuple(lst) for w, lst in rotation.items()}
    return PlaneNetwork(tuple(str(b) for b in boundary), es, rot, tuple(str(w) for w in interior))


def single_edge(c=1):
    return make_network(["1", "2"], [("1", "2", c)], {"1": [0], "2": [0]})


def triangle(a=1, b=1, c=1):
    """Boundary 1, 2, 3 in clockwise order; edges (1,2), (2,3), (3,1)."""
    return make_network(["1", "2", "3"], [("1", "2", a), ("2", "3", b), ("3", "1", c)],
                        {"1": [0, 2], "2": [1, 0], "3": [2, 1]})


def star(a=1, b=1, c=1, center="d"):
    return make_network(["1", "2", "3"],
                        [("1", center, a), ("2", center, b), ("3", center, c)],
                        {"1": [0], "2": [1], "3": [2], center: [0, 1, 2]})


# --- matrices

def kirchhoff(net, order=None):
    order = list(net.vertices) if order is None else [str(w) for w in order]
    if sorted(order) != sorted(net.vertices) or len(set(order)) != len(order):
        raise ArgumentError("order must list every vertex exactly once")
    pos = {w: i for i, w in enumerate(order)}
    n = len(order)
    K = [[Fraction(0)] * n for _ in range(n)]
    for e in net.edges:
        i, j = pos[e.u], pos[e.v]
        K[i][i] += e.gamma
        K[j][j] += e.gamma
        K[i][j] -= e.gamma
        K[j][i] -= e.gamma
    return Matrix(K)


def response(net):
    K = kirchhoff(net)
    try:
        return schur_complement(K, range(net.n_boundary))
    except SingularMatrixError as e:
        raise SingularMatrixError(f"degenerate chart point: {e}", e.rank)


# --- validation

def validate(net):
    bad = []
    if len(set(net.boundary)) != len(net.boundary):
        bad.append("boundary lists a vertex more than once")
    for k, e in enumerate(net.edges):
        if e.u == e.v:
            bad.append(f"self-loop at {e.u}")
        if e.gamma == 0:
            bad.append(f"edge {k} has zero conductance")
    for w in net.rotation:
        if w not in net.vertices:
            bad.append(f"rotation given for unknown vertex {w}")
    for w in net.vertices:
        inc = sorted(net.incident(w))
        got = sorted(net.rotation.get(w, ()))
        if got != inc:
            bad.append(f"rotation at {w} lists {got}, incident edges are {inc}")
    verts = net.vertices
    if verts:
        adj = {w: set() for w in verts}
        for e in net.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            w = stack.pop()
            for x in adj[w] - seen:
                seen.add(x)
                stack.append(x)
        if len(seen) != len(verts):
            bad.append("not connected")
    return bad


# --- star-triangle

def _next_cw(net, w, k):
    lst = list(net.rotation[w])
    i = lst.index(k)
    if i + 1 < len(lst):
        return lst[i + 1]
    return None if w in net.boundary else lst[0]


def _fresh_name(net):
    i = 1
    while f"c{i}" in net.vertices:
        i += 1
    return f"c{i}"


def star_triangle_mutate(net, site, center=None, check=True):
    """Y-Delta move.

    ``site`` is an interior vertex of degree 3 (star to triangle) or a
    triple of edge indices / vertex ids bounding a triangular face
    (triangle to star).  Edge indices are reused so that mutating back
    restores the original network; ``center`` names the new star vertex.
    """
    if isinstance(site, (str, int)) and str(site) in net.vertices:
        new = _star_to_triangle(net, str(site))
    else:
        new = _triangle_to_star(net, site, center)
    if check and __debug__:
        try:
            same = response(new) == response(net)
        except SingularMatrixError:
            same = True
        assert same, "Y-Delta move changed the response matrix"
    return new


def _star_to_triangle(net, c):
    if c in net.boundary:
        raise ArgumentError(f"{c} is a boundary vertex")
    rot = list(net.rotation[c])
    if len(rot) != 3:
        raise ArgumentError(f"{c} has degree {len(rot)}, not 3")
    nb = [net.edges[k].other(c) for k in rot]
    if len(set(nb)) != 3:
        raise ArgumentError(f"star at {c} has repeated neighbours")
    y = [net.edges[k].gamma for k in rot]
    s = sum(y)
    if s == 0:
        raise DegeneracyError(f"sum of star conductances at {c} vanishes")
    edges = list(net.edges)
    # triangle edge opposite star edge k joins the two other neighbours
    for k in range(3):
        a, b = (k + 1) % 3, (k + 2) % 3
        edges[rot[k]] = Edge(nb[a], nb[b], y[a] * y[b] / s)
    rotation = {w: list(l) for w, l in net.rotation.items() if w != c}
    for k in range(3):
        nxt, prv = (k + 1) % 3, (k + 2) % 3
        to_next = rot[prv]  # edge opposite the third vertex joins k and next
        to_prev = rot[nxt]
        lst = rotation[nb[k]]
        i = lst.index(rot[k])
        lst[i:i + 1] = [to_next, to_prev]
    interior = tuple(w for w in net.interior if w != c)
    return PlaneNetwork(net.boundary, tuple(edges), {w: tuple(l) for w, l in rotation.items()}, interior)


def _triangle_edges(net, site):
    site = list(site)
    if len(site) != 3:
        raise ArgumentError("a triangle is given by three edges or three vertices")
    if all(isinstance(s, int) for s in site):
        ks = site
    else:
        vs = [str(s) for s in site]
        ks = []
        for a, b in ((vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[0])):
            found = [k for k, e in enumerate(net.edges) if {e.u, e.v} == {a, b}]
            if len(found) != 1:
                raise ArgumentError(f"need exactly one edge between {a} and {b}")
            ks.append(found[0])
    for k in ks:
        if not 0 <= k < len(net.edges):
            raise ArgumentError(f"no edge {k}")
    verts = set()
    for k in ks:
        verts |= {net.edges[k].u, net.edges[k].v}
    if len(verts) != 3 or len(set(ks)) != 3:
        raise ArgumentError("edges do not form a triangle")
    return ks


def _triangle_to_star(net, site, center):
    ks = _triangle_edges(net, site)
    verts = []
    for k in ks:
        for w in (net.edges[k].u, net.edges[k].v):
            if w not in verts:
                verts.append(w)
    # at each corner the two triangle edges must be clockwise neighbours
    first = {}
    for w in verts:
        mine = [k for k in ks if w in (net.edges[k].u, net.edges[k].v)]
        a, b = mine
        if _next_cw(net, w, a) == b:
            first[w] = (a, b)
        elif _next_cw(net, w, b) == a:
            first[w] = (b, a)
        else:
            raise ArgumentError(f"triangle {ks} is not a face at {w}")
    # clockwise order around the new centre: v, then the far end of v's first edge
    v0 = verts[0]
    v1 = net.edges[first[v0][0]].other(v0)
    v2 = next(w for w in verts if w not in (v0, v1))
    order = [v0, v1, v2]
    for i, w in enumerate(order):
        if net.edges[first[w][0]].other(w) != order[(i + 1) % 3]:
            raise ArgumentError("triangle corners are not consistently oriented")
    opp = {}
    for w in order:
        opp[w] = next(k for k in ks if w not in (net.edges[k].u, net.edges[k].v))
    t = {}
    for k in ks:
        t[frozenset((net.edges[k].u, net.edges[k].v))] = net.edges[k].gamma
    g_opp = {w: net.edges[opp[w]].gamma for w in order}
    pair_sum = (g_opp[v0] * g_opp[v1] + g_opp[v1] * g_opp[v2] + g_opp[v2] * g_opp[v0])
    if pair_sum == 0:
        raise DegeneracyError("sum of pairwise products of triangle conductances vanishes")
    c = center if center is not None else _fresh_name(net)
    c = str(c)
    if c in net.vertices:
        raise ArgumentError(f"vertex name {c} already in use")
    edges = list(net.edges)
    for w in order:
        edges[opp[w]] = Edge(w, c, pair_sum / g_opp[w])
    rotation = {w: list(l) for w, l in net.rotation.items()}
    for w in order:
        lst = rotation[w]
        a, b = first[w]
        i, j = lst.index(a), lst.index(b)
        if j == (i + 1) % len(lst) and j != 0:
            lst[i:j + 1] = [opp[w]]
        else:  # wraps around the end of an interior list
            lst.remove(b)
            lst[lst.index(a)] = opp[w]
    rotation[c] = [opp[w] for w in order]
    interior = tuple(net.interior) + (c,)
    return PlaneNetwork(net.boundary, tuple(edges), {w: tuple(l) for w, l in rotation.items()}, interior)


def mutable_sites(net):
    """All sites where a Y-Delta move applies."""
    out = []
    for w in net.interior:
        if len(net.rotation.get(w, ())) == 3 and len({net.edges[k].other(w) for k in net.rotation[w]}) == 3:
            out.append(w)
    seen = set()
    n = len(net.edges)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                try:
                    ks = _triangle_edges(net, (a, b, c))
                    key = frozenset(ks)
                    if key in seen:
                        continue
                    _triangle_to_star(net, ks, "__probe__")
                except (ArgumentError, DegeneracyError):
                    continue
                seen.add(key)
                out.append(tuple(ks))
    return out


# --- text form

def network_to_json(net):
    doc = {
        "boundary": list(net.boundary),
        "edges": [{"u": e.u, "v": e.v, "gamma": fmt(e.gamma)} for e in net.edges],
        "rotation": {w: list(net.rotation[w]) for w in net.vertices if w in net.rotation},
    }
    if net.interior:
        doc["interior"] = list(net.interior)
    return json.dumps(doc, indent=2) + "\n"


def network_from_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno)
    for key in ("boundary", "edges", "rotation"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}", 1)
    edges = []
    for k, e in enumerate(doc["edges"]):
        try:
            g = parse_rational(str(e["gamma"]))
        except ParseError as err:
            raise ParseError(f"edge {k}: {err}")
        edges.append((e["u"], e["v"], g))
    return make_network(doc["boundary"], edges, doc["rotation"], doc.get("interior", ()))
