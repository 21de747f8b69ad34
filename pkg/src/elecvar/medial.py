"""Wiring diagrams, standard graphs and medial graphs.

Levels of a wiring diagram are numbered 1..N from the bottom; strand k
starts at level k on the left.  A crossing at level h swaps the wires at
levels h and h+1.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
import heapq

from .errors import ArgumentError, EmbeddingError, ParseError, ShapeError
from .network import Edge, PlaneNetwork, validate

BLACK, WHITE = "b", "w"


def parity_color(i, j):
    return BLACK if (i + j) % 2 == 0 else WHITE


def flip(c):
    return WHITE if c == BLACK else BLACK


def trace_pairs(word, n):
    """Strand pairs (i < j) crossed by each letter, in word order."""
    lev = list(range(1, n + 1))
    out = []
    for h in word:
        if not 1 <= h < n:
            raise ArgumentError(f"level {h} out of range for {n} strands")
        a, b = lev[h - 1], lev[h]
        out.append((min(a, b), max(a, b)))
        lev[h - 1], lev[h] = b, a
    return out


def is_reduced(word, n):
    pairs = trace_pairs(word, n)
    return len(set(pairs)) == len(pairs)


def standard_word(N):
    """1 2 .. (N-1) 1 2 .. (N-2) .. 1"""
    w = []
    for top in range(N - 1, 0, -1):
        w.extend(range(1, top + 1))
    return w


@dataclass(frozen=True)
class WiringDiagram:
    n_strands: int
    word: tuple
    colors: tuple

    def __post_init__(self):
        if len(self.colors) != len(self.word):
            raise ArgumentError("one color per letter required")
        if any(c not in (BLACK, WHITE) for c in self.colors):
            raise ArgumentError("colors must be 'b' or 'w'")

    def pairs(self):
        return trace_pairs(self.word, self.n_strands)

    def crossings(self):
        """(i, j, color) per crossing, in crossing order."""
        return [(i, j, c) for (i, j), c in zip(self.pairs(), self.colors)]

    def __len__(self):
        return len(self.word)


def wiring_from_word(word, n_strands, colors=None):
    word = tuple(int(h) for h in word)
    pairs = trace_pairs(word, n_strands)
    if len(set(pairs)) != len(pairs):
        dup = next(p for p in pairs if pairs.count(p) > 1)
        raise ArgumentError(f"word is not reduced: strands {dup} cross twice")
    if colors is None:
        colors = [parity_color(i, j) for i, j in pairs]
    return WiringDiagram(n_strands, word, tuple(colors))


def is_longest(d):
    n = d.n_strands
    return len(d.word) == n * (n - 1) // 2


def braid_sites(word):
    """Positions p (0-based) where letters p..p+2 read h, h±1, h."""
    return [p for p in range(len(word) - 2)
            if word[p] == word[p + 2] and abs(word[p] - word[p + 1]) == 1]


def commute_sites(word):
    return [p for p in range(len(word) - 1) if abs(word[p] - word[p + 1]) >= 2]


# --- standard graphs

def standard_pairs(N):
    return trace_pairs(standard_word(N), N)


def _network_of_word(word, N, gammas):
    """Plane network whose medial diagram is the wiring diagram of ``word``.

    Regions between consecutive levels are split by crossings at that
    level; regions in odd rows become vertices.  A crossing at odd level
    gives a horizontal edge, at even level a vertical one.
    """
    m = len(word)
    cuts = defaultdict(list)  # row -> x positions of crossings splitting it
    for x, h in enumerate(word, 1):
        cuts[h].append(x)

    def chamber(row, x):
        return (row, sum(1 for c in cuts[row] if c < x))

    edges = []
    for x, h in enumerate(word, 1):
        if h % 2 == 1:
            edges.append((chamber(h, x - 0.5), chamber(h, x + 0.5)))
        else:
            edges.append((chamber(h - 1, x), chamber(h + 1, x)))

    def chambers_in(row):
        return [(row, k) for k in range(len(cuts[row]) + 1)] if row < N else [(row, 0)]

    node_rows = [r for r in range(1, N + 1) if r % 2 == 1]
    left = [(r, 0) for r in node_rows if r < N]
    right = [(r, len(cuts[r])) for r in node_rows if r < N]
    top = [(N, 0)] if N % 2 == 1 else []
    boundary = left + top + right[::-1]
    interior = [c for r in node_rows for c in chambers_in(r) if c not in boundary]

    def span(c):
        row, k = c
        xs = [0] + cuts[row] + [m + 1] if row < N else [0, m + 1]
        return xs[k], xs[k + 1]

    rotation = {}
    for c in boundary + interior:
        row, _ = c
        a, b = span(c)
        west = [k for k, (x, h) in enumerate(zip(range(1, m + 1), word)) if h == row and x == a]
        east = [k for k, (x, h) in enumerate(zip(range(1, m + 1), word)) if h == row and x == b]
        north = [k for k, (x, h) in enumerate(zip(range(1, m + 1), word)) if h == row + 1 and a < x < b]
        south = [k for k, (x, h) in enumerate(zip(range(1, m + 1), word)) if h == row - 1 and a < x < b][::-1]
        if c in top:
            rot = south
        elif c in left:
            rot = north + east + south
        elif c in right:
            rot = south + west + north
        else:
            rot = west + north + east + south
        rotation[c] = rot

    names = {c: str(i) for i, c in enumerate(boundary, 1)}
    names.update({c: f"c{i}" for i, c in enumerate(interior, 1)})
    es = tuple(Edge(names[u], names[v], Fraction(g)) for (u, v), g in zip(edges, gammas))
    rot = {names[c]: tuple(r) for c, r in rotation.items()}
    return PlaneNetwork(tuple(names[c] for c in boundary), es, rot,
                        tuple(names[c] for c in interior))


def standard_graph(N, gamma=None):
    """Sigma_N with edge k carrying the conductance of the k-th crossing's
    strand pair.  ``gamma`` maps pairs (i, j) to values (default 1)."""
    if N < 2:
        raise ShapeError(f"standard graph needs N >= 2, got {N}")
    pairs = standard_pairs(N)
    gamma = gamma or {}
    return _network_of_word(standard_word(N), N, [gamma.get(p, 1) for p in pairs])


# --- medial graphs

@dataclass(frozen=True)
class MedialGraph:
    n_strands: int
    boundary_points: tuple            # labels 1..2n
    strands: tuple                    # (source, sink) per strand 1..n
    paths: tuple                      # crossing sequence per strand, oriented
    strand_of: dict                   # network edge index -> (i, j)
    color: dict                       # network edge index -> 'b' | 'w'
    vertex_order: tuple
    edges: tuple = field(default=())  # oriented medial edges

    def crossings(self):
        return [self.strand_of[k] + (self.color[k],) for k in self.vertex_order]

    def pairs(self):
        return [self.strand_of[k] for k in self.vertex_order]


def medial_of_network(net):
    problems = [p for p in validate(net) if "zero conductance" not in p]
    if problems:
        raise EmbeddingError("; ".join(problems))
    n = net.n_boundary
    rot = {w: list(net.rotation[w]) for w in net.vertices}
    bindex = {w: i for i, w in enumerate(net.boundary, 1)}
    for w in net.boundary:
        if not rot[w]:
            raise EmbeddingError(f"boundary vertex {w} has no edges")

    def step(w, k, side):
        """Leave medial vertex k through the corner at w on ``side``."""
        lst = rot[w]
        i = lst.index(k)
        if side == "cw":
            if i + 1 < len(lst):
                return ("v", lst[i + 1], w, "ccw")
            if w in bindex:
                return ("t", 2 * bindex[w] - 1)
            return ("v", lst[0], w, "ccw")
        if i > 0:
            return ("v", lst[i - 1], w, "cw")
        if w in bindex:
            return ("t", 2 * bindex[w])
        return ("v", lst[-1], w, "cw")

    def entry(label):
        w = net.boundary[(label + 1) // 2 - 1]
        if label % 2 == 0:
            return ("v", rot[w][0], w, "ccw")
        return ("v", rot[w][-1], w, "cw")

    used = set()
    raw = []
    for t in range(1, 2 * n + 1):
        if t in used:
            continue
        cur = entry(t)
        visits = []
        seen = set()
        while cur[0] == "v":
            _, k, w, side = cur
            if (k, side) in seen:
                raise EmbeddingError("strand runs in a closed loop")
            seen.add((k, side))
            visits.append((k, w, side))
            cur = step(net.edges[k].other(w), k, side)
        end = cur[1]
        used |= {t, end}
        raw.append((t, end, visits))
    if len(used) != 2 * n:
        raise EmbeddingError("strands do not match up the boundary points")

    raw.sort(key=lambda r: min(r[0], r[1]))
    strands, paths = [], []
    passes = defaultdict(list)  # edge -> [(strand, entry endpoint, side)]
    for s, (a, b, visits) in enumerate(raw, 1):
        if a > b:
            a, b = b, a
            visits = [(k, net.edges[k].other(w), side) for k, w, side in reversed(visits)]
        strands.append((a, b))
        paths.append(tuple(k for k, _, _ in visits))
        for k, w, side in visits:
            passes[k].append((s, w, side))

    strand_of, color = {}, {}
    for k, e in enumerate(net.edges):
        ps = passes.get(k, [])
        if len(ps) != 2:
            raise EmbeddingError(f"edge {k} is not crossed by exactly two strand passes")
        (s1, w1, d1), (s2, w2, d2) = ps
        if s1 == s2:
            raise EmbeddingError(f"strand {s1} crosses itself at edge {k}")
        strand_of[k] = (min(s1, s2), max(s1, s2))

        def side_of(w, d):
            # which side of the edge, read from e.u to e.v, the pass enters on
            return (w == e.u) == (d == "cw")
        # sources on the same side of the edge line -> black
        color[k] = BLACK if side_of(w1, d1) == side_of(w2, d2) else WHITE

    order = _topo_order(len(net.edges), paths)
    medges = []
    for s, p in enumerate(paths):
        a, b = strands[s]
        nodes = [("t", a)] + [("v", k) for k in p] + [("t", b)]
        medges.extend(zip(nodes, nodes[1:]))
    return MedialGraph(n, tuple(range(1, 2 * n + 1)), tuple(strands), tuple(paths),
                       strand_of, color, tuple(order), tuple(medges))


def _topo_order(nv, paths):
    succ = defaultdict(set)
    indeg = [0] * nv
    for p in paths:
        for a, b in zip(p, p[1:]):
            if b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1
    heap = [k for k in range(nv) if indeg[k] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        k = heapq.heappop(heap)
        out.append(k)
        for b in sorted(succ[k]):
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, b)
    if len(out) != nv:
        raise EmbeddingError("medial graph has a directed cycle")
    return out


def crossing_order(d):
    if isinstance(d, WiringDiagram):
        return list(range(len(d.word)))
    return list(d.vertex_order)


def strand_sequences(d):
    """For each strand, the partner strands in the order it meets them."""
    seq = defaultdict(list)
    for i, j, _ in d.crossings():
        seq[i].append(j)
        seq[j].append(i)
    return {s: tuple(v) for s, v in sorted(seq.items())}


def same_colored_diagram(a, b):
    if a.n_strands != b.n_strands:
        return False
    ca = {(i, j): c for i, j, c in a.crossings()}
    cb = {(i, j): c for i, j, c in b.crossings()}
    return ca == cb and strand_sequences(a) == strand_sequences(b)


def wiring_of_medial(md):
    """A wiring diagram with the same crossings, or None when the strands
    cannot be laid out as left-to-right pseudolines in source order."""
    n = md.n_strands
    lev = list(range(1, n + 1))
    nxt = {s: 0 for s in range(1, n + 1)}
    path_of = {s: md.paths[s - 1] for s in range(1, n + 1)}
    rank = {k: r for r, k in enumerate(md.vertex_order)}
    word, colors = [], []
    for _ in range(len(md.vertex_order)):
        ready = []
        for h in range(1, n):
            a, b = lev[h - 1], lev[h]
            pa, pb = path_of[a], path_of[b]
            if nxt[a] < len(pa) and nxt[b] < len(pb) and pa[nxt[a]] == pb[nxt[b]]:
                ready.append((rank[pa[nxt[a]]], h))
        if not ready:
            return None
        r, h = min(ready)
        k = md.vertex_order[r]
        a, b = lev[h - 1], lev[h]
        word.append(h)
        colors.append(md.color[k])
        nxt[a] += 1
        nxt[b] += 1
        lev[h - 1], lev[h] = b, a
    return WiringDiagram(n, tuple(word), tuple(colors))


# --- text form

def wiring_to_text(d):
    return (f"strands {d.n_strands}\n" + " ".join(map(str, d.word)) + "\n"
            + " ".join(d.colors) + "\n")


def wiring_from_text(text, check_colors=False):
    lines = [l for l in text.splitlines()]
    body = [(k, l) for k, l in enumerate(lines, 1) if l.strip() and not l.lstrip().startswith("#")]
    if len(body) < 2:
        raise ParseError("wiring diagram needs a 'strands N' line and a word line", len(lines) or 1)
    k, head = body[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "strands" or not parts[1].isdigit():
        raise ParseError("expected 'strands N'", k, 1)
    n = int(parts[1])
    k, wline = body[1]
    word = []
    for tok in wline.split():
        if not tok.isdigit():
            raise ParseError(f"bad level {tok!r}", k, wline.index(tok) + 1)
        word.append(int(tok))
    colors = None
    if len(body) > 2 and not body[2][1].split()[0] == "params":
        k, cline = body[2]
        colors = cline.split()
        for tok in colors:
            if tok not in (BLACK, WHITE):
                raise ParseError(f"bad color {tok!r}", k, cline.index(tok) + 1)
        if len(colors) != len(word):
            raise ParseError(f"{len(colors)} colors for {len(word)} crossings", k)
    try:
        return wiring_from_word(word, n, colors)
    except ArgumentError as e:
        raise ParseError(str(e), body[1][0])
