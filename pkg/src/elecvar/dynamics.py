"""Discrete Toda-type dynamics on rectangular conductance lattices.

Rows are indexed j = 1..m and columns i = 1..n, columns cyclically.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ArgumentError, DegeneracyError, ParseError, ShapeError
from .matrix import Matrix
from .mpoly import MPoly
from .rational import fmt, split_rationals


@dataclass(frozen=True)
class Lattice:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ShapeError("empty lattice")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged lattice")
        object.__setattr__(self, "rows", rows)

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    def x(self, j, i):
        return self.rows[j - 1][(i - 1) % self.n]

    def transpose(self):
        return Lattice(tuple(zip(*self.rows)))

    def row_products(self):
        return [prod(r) for r in self.rows]


def affine_matrix(x, y):
    return Matrix([[x, 0], [1 + x * y, y]])


def mobius(x, y, t):
    """T_{x,y}(t) = t x / (t + y + t x y)"""
    return t * x / (t + y + t * x * y)


def q_poly(xs, ys):
    if len(xs) != len(ys) or not xs:
        raise ShapeError("q_poly needs two sequences of the same positive length")
    n = len(xs)
    x = lambda k: xs[k - 1]
    y = lambda k: ys[k - 1]
    one = Fraction(1)
    s1 = sum((prod((x(k) for k in range(1, a)), start=one) * prod((y(k) for k in range(a + 1, n + 1)), start=one)
              for a in range(1, n + 1)), Fraction(0))
    s2 = sum((prod((x(k + 1) for k in range(1, a)), start=one) * prod((y(k - 1) for k in range(a + 1, n + 1)), start=one)
              for a in range(1, n + 1)), Fraction(0))
    return s1 + x(1) * y(n) * s2


def transfer(xs, ys):
    """A(x_n, y_n) ... A(x_1, y_1)"""
    M = Matrix.identity(2)
    for x, y in zip(xs, ys):
        M = affine_matrix(x, y) @ M
    return M


def stable_point(xs, ys):
    px, py = prod(xs, start=Fraction(1)), prod(ys, start=Fraction(1))
    if px == py:
        raise DegeneracyError("parabolic case: products of x and y coincide")
    q = q_poly(xs, ys)
    if q == 0:
        raise DegeneracyError("pole: Q vanishes")
    return (px - py) / q


def p_poly(lat, j, i):
    n = lat.n
    x = lambda k: lat.x(j, k)
    y = lambda k: lat.x(j + 1, k)
    one = Fraction(1)
    s1 = sum((prod((x(i + k) for k in range(1, a)), start=one) * prod((y(i + k) for k in range(a + 1, n + 1)), start=one)
              for a in range(1, n + 1)), Fraction(0))
    s2 = sum((prod((x(i + k + 1) for k in range(1, a)), start=one) * prod((y(i + k - 1) for k in range(a + 1, n + 1)), start=one)
              for a in range(1, n + 1)), Fraction(0))
    return s1 + x(i + 1) * y(i) * s2


def p_poly_first(lat, j, i):
    """First summand of P_{j,i} alone (the undeformed formula)."""
    n = lat.n
    x = lambda k: lat.x(j, k)
    y = lambda k: lat.x(j + 1, k)
    one = Fraction(1)
    return sum((prod((x(i + k) for k in range(1, a)), start=one) * prod((y(i + k) for k in range(a + 1, n + 1)), start=one)
                for a in range(1, n + 1)), Fraction(0))


def act_r(lat, j):
    """Exchange rows j and j+1, corrected by the ratios P_{j,i-1} / P_{j,i}."""
    if not 1 <= j <= lat.m - 1:
        raise ArgumentError(f"row index {j} outside 1..{lat.m - 1}")
    n = lat.n
    P = {}
    for i in range(1, n + 1):
        P[i] = p_poly(lat, j, i)
        if P[i] == 0:
            raise DegeneracyError(f"P vanishes at (j, i) = ({j}, {i})")
    ratio = lambda i: P[(i - 2) % n + 1] / P[i]
    top = tuple(lat.x(j + 1, i) * ratio(i) for i in range(1, n + 1))
    bot = tuple(lat.x(j, i) / ratio(i) for i in range(1, n + 1))
    rows = list(lat.rows)
    rows[j - 1], rows[j] = top, bot
    return Lattice(tuple(rows))


def act_s(lat, i):
    if not 1 <= i <= lat.n - 1:
        raise ArgumentError(f"column index {i} outside 1..{lat.n - 1}")
    return act_r(lat.transpose(), i).transpose()


def two_by_two(x1, x2, y1, y2):
    """Stable point, multiplier mu and transformed resistances of a 2x2 block."""
    den_t = x1 + y2 + x1 * x2 * y2 + x1 * y1 * y2
    num_mu = x1 + y2 + x1 * y2 * (x2 + y1)
    den_mu = x2 + y1 + x2 * y1 * (x1 + y2)
    if den_t == 0 or num_mu == 0 or den_mu == 0:
        raise DegeneracyError("vanishing denominator in the 2x2 transformation")
    t = (x1 * x2 - y1 * y2) / den_t
    mu = num_mu / den_mu
    return t, mu, (x1 * mu, x2 / mu, y1 / mu, y2 * mu)


def apply_word(lat, word):
    """Apply generators such as ['r1', 's2'] left to right."""
    for g in word:
        if len(g) < 2 or g[0] not in "rs" or not g[1:].isdigit():
            raise ArgumentError(f"bad generator {g!r}")
        k = int(g[1:])
        lat = act_r(lat, k) if g[0] == "r" else act_s(lat, k)
    return lat


def symbolic_lattice(m, n, eps="e"):
    """x_{j,i} = eps * xi_j_i as polynomials."""
    e = MPoly.var(eps)
    return Lattice(tuple(tuple(e * MPoly.var(f"xi{j}_{i}") for i in range(1, n + 1))
                         for j in range(1, m + 1)))


# --- text form

def lattice_to_text(lat):
    return f"{lat.m} {lat.n}\n" + "".join(" ".join(fmt(v) for v in r) + "\n" for r in lat.rows)


def lattice_from_text(text):
    lines = [(k, l) for k, l in enumerate(text.splitlines(), 1)
             if l.strip() and not l.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty lattice file", 1)
    k, head = lines[0]
    toks = head.split()
    if len(toks) != 2 or not all(t.isdigit() for t in toks):
        raise ParseError("expected 'm n'", k, 1)
    m, n = int(toks[0]), int(toks[1])
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} rows, found {len(lines) - 1}", k)
    rows = []
    for k, l in lines[1:]:
        r = split_rationals(l, k)
        if len(r) != n:
            raise ParseError(f"expected {n} entries, found {len(r)}", k)
        if any(v == 0 for v in r):
            raise ParseError("lattice entries must be nonzero", k)
        rows.append(tuple(r))
    return Lattice(tuple(rows))
