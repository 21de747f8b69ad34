"""Vertex models on crossing diagrams and their boundary partition functions."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, DegeneracyError, ParameterError, ParseError
from .matrix import Matrix, embed_block
from .medial import (BLACK, WHITE, MedialGraph, WiringDiagram, braid_sites, commute_sites,
                     crossing_order, flip, medial_of_network, standard_pairs, standard_word,
                     wiring_from_text, wiring_from_word, wiring_to_text)
from .mpoly import MPoly
from .rational import fmt, split_rationals

KINDS = ("phi", "psi", "phi_check", "lusztig")


def _inv(r):
    if isinstance(r, MPoly):
        if not r.is_constant():
            raise ParameterError("psi needs an invertible parameter")
        r = r.constant_value()
    if r == 0:
        raise ParameterError("psi(0) is undefined")
    return 1 / Fraction(r)


def local_operator(kind, r):
    if kind == "phi":
        return Matrix([[r, 1 + r], [1 - r, -r]])
    if kind == "psi":
        q = _inv(r)
        return Matrix([[-q, 1 - q], [1 + q, q]])
    if kind == "phi_check":
        return Matrix([[1 - r, -r], [r, 1 + r]])
    if kind == "lusztig":
        return Matrix([[1, r], [0, 1]])
    raise ArgumentError(f"unknown operator kind {kind!r}")


def phi_param(color, r):
    """Parameter x with weight(color, r) = phi(x)."""
    return r if color == BLACK else -_inv(r)


def from_phi_param(color, x):
    return x if color == BLACK else -_inv(x)


def _num(x):
    return Fraction(x) if isinstance(x, int) else x


def local_yb_transform(kind, p1, p2, p3):
    p1, p2, p3 = _num(p1), _num(p2), _num(p3)
    if kind in ("phi", "phi_check"):
        D = p1 + p3 - p1 * p2 * p3
        if D == 0:
            raise DegeneracyError(f"D = p1 + p3 - p1*p2*p3 vanishes at ({p1}, {p2}, {p3})")
        if kind == "phi":
            return (p1 * p2 / D, D, p3 * p2 / D)
        return (p3 * p2 / D, D, p1 * p2 / D)
    if kind == "electrical":
        s = p1 + p2 + p3
        if s == 0:
            raise DegeneracyError(f"R1 + R2 + R3 vanishes at ({p1}, {p2}, {p3})")
        if 0 in (p1, p2, p3):
            raise DegeneracyError("electrical map needs nonzero resistances")
        prod = p1 * p2 * p3 / s
        return (prod / p1, prod / p2, prod / p3)
    if kind == "lusztig":
        D = p1 + p3
        if D == 0:
            raise DegeneracyError(f"D = t1 + t3 vanishes at ({p1}, {p2}, {p3})")
        return (p2 * p3 / D, D, p1 * p2 / D)
    raise ArgumentError(f"unknown transform kind {kind!r}")


def lyb_sides(kind, before, after):
    """Both sides of the 3x3 local Yang-Baxter identity for ``kind``."""
    a1, a2, a3 = before
    b1, b2, b3 = after
    E = embed_block
    if kind == "phi":
        f = lambda r: local_operator("phi", r)
        return (E(f(a1), 1, 2, 3) @ E(f(a2), 1, 3, 3) @ E(f(a3), 2, 3, 3),
                E(f(b3), 2, 3, 3) @ E(f(b2), 1, 3, 3) @ E(f(b1), 1, 2, 3))
    if kind == "electrical":
        f = lambda r: local_operator("phi", r)
        g = lambda r: local_operator("psi", r)
        return (E(g(a1), 1, 2, 3) @ E(f(a2), 1, 3, 3) @ E(g(a3), 2, 3, 3),
                E(f(b3), 2, 3, 3) @ E(g(b2), 1, 3, 3) @ E(f(b1), 1, 2, 3))
    if kind in ("phi_check", "lusztig"):
        f = lambda r: local_operator(kind, r)
        return (E(f(a3), 1, 2, 3) @ E(f(a2), 2, 3, 3) @ E(f(a1), 1, 2, 3),
                E(f(b3), 2, 3, 3) @ E(f(b2), 1, 2, 3) @ E(f(b1), 2, 3, 3))
    raise ArgumentError(f"unknown transform kind {kind!r}")


# --- models

@dataclass(frozen=True)
class VertexModel:
    diagram: object      # WiringDiagram | MedialGraph
    params: tuple        # one per crossing, in crossing_order

    def __post_init__(self):
        if len(self.params) != len(crossing_order(self.diagram)):
            raise ArgumentError("one parameter per crossing required")

    @property
    def n_strands(self):
        return self.diagram.n_strands

    def weights(self):
        """(i, j, 2x2 weight) per crossing in crossing order."""
        out = []
        for (i, j, c), r in zip(self.diagram.crossings(), self.params):
            out.append((i, j, local_operator("phi" if c == BLACK else "psi", r)))
        return out


def model_of_network(net):
    md = medial_of_network(net)
    return VertexModel(md, tuple(net.edges[k].gamma for k in md.vertex_order))


def standard_model(N, gamma):
    """Parity-colored model of Sigma_N; ``gamma`` maps strand pairs to values."""
    d = wiring_from_word(standard_word(N), N)
    return VertexModel(d, tuple(gamma[p] for p in d.pairs()))


def _comb(a, u, b, v):
    # a*u + b*v, skipping zero entries (rows of wiring products are sparse)
    if not u:
        return b * v if v else u
    return a * u + b * v if v else a * u


def _apply_block(rows, x, i, j):
    ri, rj = rows[i - 1], rows[j - 1]
    a, b, c, d = x[0, 0], x[0, 1], x[1, 0], x[1, 1]
    rows[i - 1] = [_comb(a, u, b, v) for u, v in zip(ri, rj)]
    rows[j - 1] = [_comb(c, u, d, v) for u, v in zip(ri, rj)]


def ordered_product(blocks, n):
    """prod of embed_block(x, i, j, n) with the first block rightmost."""
    rows = Matrix.identity(n).tolist()
    for i, j, x in blocks:
        _apply_block(rows, x, i, j)
    return Matrix(rows)


def partition_product(model):
    return ordered_product(model.weights(), model.n_strands)


def partition_pathsum(model):
    """Sum over turning paths of products of turn weights.

    A path enters a crossing on one of its two strands and leaves on one of
    them; entering on the smaller strand is the W row, the larger the N row,
    and likewise leaving is the E (smaller) or S (larger) column.  Paths are
    walked from the last crossing back to the first, which is the direction
    that reproduces the ordered product with the first crossing rightmost.
    """
    n = model.n_strands
    ws = model.weights()
    on_strand = {s: [] for s in range(1, n + 1)}
    for pos, (i, j, _) in enumerate(ws):
        on_strand[i].append(pos)
        on_strand[j].append(pos)

    def prev_on(s, pos):
        best = None
        for q in on_strand[s]:
            if q < pos:
                best = q
        return best

    zero = Fraction(0)
    out = [[zero] * n for _ in range(n)]

    def walk(src, s, pos, weight):
        q = prev_on(s, pos)
        if q is None:
            out[src - 1][s - 1] = out[src - 1][s - 1] + weight
            return
        i, j, x = ws[q]
        a = 0 if s == i else 1
        for b, t in ((0, i), (1, j)):
            w = x[a, b]
            if w:
                walk(src, t, q, weight * w)

    for s in range(1, n + 1):
        walk(s, s, len(ws), Fraction(1))
    return Matrix(out)


def _require_wiring(model):
    if not isinstance(model.diagram, WiringDiagram):
        raise ArgumentError("braid moves need a wiring diagram")
    return model.diagram


def yb_mutate(model, position):
    """Braid move on letters position..position+2 (1-based)."""
    d = _require_wiring(model)
    p = position - 1
    if p not in braid_sites(d.word):
        raise ArgumentError(f"no braid pattern h, h+-1, h at position {position}")
    cols = d.colors[p:p + 3]
    xs = [phi_param(c, r) for c, r in zip(cols, model.params[p:p + 3])]
    new_x = local_yb_transform("phi", xs[2], xs[1], xs[0])
    # the crossing landing at slot p is the pair that sat at slot p+2
    new_cols = tuple(flip(c) for c in reversed(cols))
    new_r = tuple(from_phi_param(c, x) for c, x in zip(new_cols, new_x))
    h, k = d.word[p], d.word[p + 1]
    word = d.word[:p] + (k, h, k) + d.word[p + 3:]
    colors = d.colors[:p] + new_cols + d.colors[p + 3:]
    params = model.params[:p] + new_r + model.params[p + 3:]
    return VertexModel(WiringDiagram(d.n_strands, word, colors), params)


def commute_move(model, position):
    """Swap commuting letters position, position+1 (1-based)."""
    d = _require_wiring(model)
    p = position - 1
    if p not in commute_sites(d.word):
        raise ArgumentError(f"letters at {position} do not commute")
    sw = lambda t: t[:p] + (t[p + 1], t[p]) + t[p + 2:]
    return VertexModel(WiringDiagram(d.n_strands, sw(d.word), sw(d.colors)), sw(model.params))


# --- text form

def model_to_text(model):
    d = _require_wiring(model)
    return wiring_to_text(d) + "params " + " ".join(fmt(r) for r in model.params) + "\n"


def model_from_text(text):
    d = wiring_from_text(text)
    for k, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s.startswith("params"):
            params = split_rationals(line.replace("params", " " * 6, 1), k)
            if len(params) != len(d.word):
                raise ParseError(f"{len(params)} params for {len(d.word)} crossings", k)
            return VertexModel(d, tuple(params))
    raise ParseError("missing 'params' line", len(text.splitlines()) or 1)
