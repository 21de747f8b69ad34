"""Chamber ansatz for reduced words of the longest permutation.

Chart coordinates t_1..t_m sit on the letters of a reduced word h.  Two
gluings between charts differing by a braid move are provided: the
Lusztig one (3-term Plucker relations) and the electrical one (4-term
relations).  The electrical gluing is the phi_check map read in the
coordinates t_k = (-1)^{h_k} r_k.
"""

import re
from fractions import Fraction
from itertools import combinations

from .errors import ArgumentError, DegeneracyError, ParseError
from .medial import braid_sites, commute_sites, is_reduced, standard_word, trace_pairs
from .rational import fmt, parse_rational
from .vertex_model import local_yb_transform


def _s(h, x):
    return h + 1 if x == h else h if x == h + 1 else x


def check_reduced_longest(h, n):
    h = tuple(h)
    if len(h) != n * (n - 1) // 2 or not is_reduced(h, n):
        raise ArgumentError(f"{h} is not a reduced word for the longest permutation of {n}")
    return h


def chamber_data(h, k):
    """(L, i, j) = s_{h_m}..s_{h_{k+1}} applied to ({1..h_k - 1}, h_k, h_k + 1)."""
    m = len(h)
    if not 1 <= k <= m:
        raise IndexError(f"position {k} outside 1..{m}")
    hk = h[k - 1]
    L, i, j = set(range(1, hk)), hk, hk + 1
    for q in range(k, m):
        g = h[q]
        L = {_s(g, x) for x in L}
        i, j = _s(g, i), _s(g, j)
    return frozenset(L), i, j


def chart_data(h, k):
    """Chamber data read from the left end: the prefix h_1..h_{k-1} acts."""
    return chamber_data(tuple(reversed(h)), len(h) + 1 - k)


def chamber_sets(h):
    out = []
    for k in range(1, len(h) + 1):
        L, i, j = chart_data(h, k)
        out.append(L | {j})
    return out


def normalized_sets(n):
    return [frozenset()] + [frozenset(range(1, b + 1)) for b in range(1, n + 1)]


def _get(mv, S):
    S = frozenset(S)
    if S not in mv:
        raise KeyError(f"no value for subset {subset_str(S) or '-'}")
    return mv[S]


def ansatz_forward(mv, h):
    out = []
    for k in range(1, len(h) + 1):
        L, i, j = chart_data(h, k)
        den = _get(mv, L | {i}) * _get(mv, L | {j})
        if den == 0:
            raise DegeneracyError(f"zero denominator at position {k}")
        out.append(_get(mv, L) * _get(mv, L | {i, j}) / den)
    return tuple(out)


def ansatz_inverse(chart, h, n=None):
    h = tuple(h)
    n = n if n is not None else max(h) + 1
    if len(chart) != len(h):
        raise ArgumentError("one chart value per letter required")
    if any(t == 0 for t in chart):
        raise DegeneracyError("chart values must be nonzero")
    data = [chart_data(h, k) for k in range(1, len(h) + 1)]
    mv = {S: Fraction(1) for S in normalized_sets(n)}
    for L, i, j in data:
        J = L | {j}
        v = Fraction(1)
        for (L2, i2, j2), t in zip(data, chart):
            if j2 in J and i2 not in J:
                v = v / t
        if J in mv and mv[J] != v:
            raise ArgumentError(f"chamber set {subset_str(J)} conflicts with the normalisation")
        mv[J] = v
    return mv


# --- gluing charts

def glue(kind, t1, t2, t3):
    if kind == "lusztig":
        return local_yb_transform("lusztig", t1, t2, t3)
    if kind == "electrical":
        D = t1 + t3 + t1 * t2 * t3
        if D == 0:
            raise DegeneracyError(f"t1 + t3 + t1*t2*t3 vanishes at ({t1}, {t2}, {t3})")
        return (t2 * t3 / D, D, t1 * t2 / D)
    raise ArgumentError(f"unknown gluing {kind!r}")


def chart_braid(h, chart, position, kind):
    p = position - 1
    h = tuple(h)
    if p not in braid_sites(h):
        raise ArgumentError(f"no braid pattern at position {position}")
    a, b = h[p], h[p + 1]
    new = glue(kind, *chart[p:p + 3])
    return h[:p] + (b, a, b) + h[p + 3:], tuple(chart[:p]) + tuple(new) + tuple(chart[p + 3:])


def chart_commute(h, chart, position):
    p = position - 1
    h = tuple(h)
    if p not in commute_sites(h):
        raise ArgumentError(f"letters at {position} do not commute")
    sw = lambda t: t[:p] + (t[p + 1], t[p]) + t[p + 2:]
    return sw(h), sw(tuple(chart))


def explore_charts(h, chart, kind, limit=None):
    """All charts reachable by braid and commutation moves (word -> chart)."""
    seen = {tuple(h): tuple(chart)}
    stack = [tuple(h)]
    while stack and (limit is None or len(seen) < limit):
        w = stack.pop()
        t = seen[w]
        nxt = [chart_braid(w, t, p + 1, kind) for p in braid_sites(w)]
        nxt += [chart_commute(w, t, p + 1) for p in commute_sites(w)]
        for w2, t2 in nxt:
            if w2 not in seen:
                seen[w2] = t2
                stack.append(w2)
    return seen


def glued_chamber_vars(charts, n):
    """Union of ansatz_inverse over charts; raises if two charts disagree."""
    mv = {}
    for w, t in charts.items():
        for S, v in ansatz_inverse(t, w, n).items():
            if S in mv and mv[S] != v:
                raise ArgumentError(f"charts disagree on M_{subset_str(S)}")
            mv[S] = v
    return mv


# --- exchange relations

def check_relation(mv, variant, i, j, k, L=frozenset()):
    if not i < j < k:
        raise ArgumentError("need i < j < k")
    L = frozenset(L)
    if L & {i, j, k}:
        raise ArgumentError("L must avoid i, j, k")
    g = lambda *xs: _get(mv, L | set(xs))
    lhs = g(i, k) * g(j)
    rhs = g(i, j) * g(k) + g(j, k) * g(i)
    if variant == "four_term":
        rhs += g() * g(i, j, k)
    elif variant != "three_term":
        raise ArgumentError(f"unknown relation {variant!r}")
    return lhs == rhs


def relation_instances(mv, n):
    """All (i, j, k, L) whose eight subsets are present in ``mv``."""
    out = []
    for i, j, k in combinations(range(1, n + 1), 3):
        rest = [x for x in range(1, n + 1) if x not in (i, j, k)]
        for r in range(len(rest) + 1):
            for L in combinations(rest, r):
                L = frozenset(L)
                need = [L, L | {i}, L | {j}, L | {k}, L | {i, j}, L | {i, k}, L | {j, k}, L | {i, j, k}]
                if all(S in mv for S in need):
                    out.append((i, j, k, L))
    return out


# --- text form

def subset_str(S, n=None):
    xs = sorted(S)
    if n is not None and n >= 10:
        return ",".join(map(str, xs))
    return "".join(map(str, xs))


def chamber_vars_to_text(mv, n):
    keys = sorted(mv, key=lambda S: (len(S), sorted(S)))
    return "".join(f"{subset_str(S, n) or '-'} {fmt(mv[S])}\n" for S in keys)


def chamber_vars_from_text(text):
    mv = {}
    for k, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        found = list(re.finditer(r"\S+", line))
        if len(found) != 2:
            raise ParseError("expected 'subset value'", k, 1)
        s = found[0].group()
        if s == "-":
            S = frozenset()
        elif "," in s:
            S = frozenset(int(x) for x in s.split(","))
        elif s.isdigit():
            S = frozenset(int(c) for c in s)
        else:
            raise ParseError(f"bad subset {s!r}", k, 1)
        mv[S] = parse_rational(found[1].group(), k, found[1].start() + 1)
    return mv
