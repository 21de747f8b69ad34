"""Randomised property suites with exact checks.

Each suite takes a ``random.Random``, a sample count and a size bound and
returns a Result; the first failing instance is kept as a counterexample.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import chamber as ch
from . import dynamics as dy
from . import standard as st
from .errors import DegeneracyError, ParameterError, SingularMatrixError
from .matrix import Matrix, row_space_equal, structured
from .medial import (braid_sites, commute_sites, standard_pairs, standard_word,
                     trace_pairs, wiring_from_word)
from .mpoly import lowest_degree_part
from .network import mutable_sites, response, star, star_triangle_mutate, triangle
from .rational import fmt
from .vertex_model import (VertexModel, commute_move, local_yb_transform, lyb_sides,
                           partition_pathsum, partition_product, standard_model, yb_mutate)


@dataclass
class Result:
    name: str
    checked: int = 0
    failure: str = None

    @property
    def passed(self):
        return self.failure is None and self.checked > 0

    def check(self, ok, what):
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = what
        return ok

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        s = f"{status} {self.name}: {self.checked} checks"
        return s + (f"; first counterexample: {self.failure}" if self.failure else "")


def pos(rng, top=9):
    return Fraction(rng.randint(1, top), rng.randint(1, top))


def signed(rng, top=9):
    return pos(rng, top) * rng.choice((-1, 1))


def reduced_words(n, max_len):
    """Every reduced word on n strands with at most max_len letters."""
    out = []

    def rec(w, lev, seen):
        out.append(tuple(w))
        if len(w) == max_len:
            return
        for h in range(1, n):
            a, b = lev[h - 1], lev[h]
            p = (min(a, b), max(a, b))
            if p in seen:
                continue
            nxt = list(lev)
            nxt[h - 1], nxt[h] = b, a
            rec(w + [h], nxt, seen | {p})

    rec([], list(range(1, n + 1)), frozenset())
    return out


def _show(xs):
    return "(" + ", ".join(fmt(x) for x in xs) + ")"


# --- 1. Y-Delta invariance

def ydelta(rng, samples=100, size=5):
    res = Result("ydelta")
    t, s = triangle(1, 1, 1), star(3, 3, 3)
    target = Matrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    mt = star_triangle_mutate(t, (0, 1, 2), center="d")
    res.check(response(t) == target and response(mt) == target
              and mt.gammas() == [3, 3, 3], "triangle(1,1,1) -> star(3,3,3)")
    res.check(star_triangle_mutate(s, "d") .gammas() == [1, 1, 1]
              and response(s) == target, "star(3,3,3) -> triangle(1,1,1)")
    corpus = [triangle(), star()] + [st.standard_graph(N) for N in range(3, max(3, size) + 1)]
    corpus = [(net, mutable_sites(net)) for net in corpus]
    corpus = [(net, sites) for net, sites in corpus if sites]
    for k in range(samples):
        net, sites = corpus[k % len(corpus)]
        net = net.with_gammas([pos(rng) for _ in net.edges])
        before = response(net)
        for site in sites:
            other = star_triangle_mutate(net, site, center="y")
            res.check(response(other) == before, f"site {site} with gammas {_show(net.gammas())}")
            if isinstance(site, str):   # the triangle reuses the star's edge indices
                back = star_triangle_mutate(other, tuple(net.rotation[site]), center=site)
            else:
                back = star_triangle_mutate(other, "y")
            res.check(back == net, f"mutating back at {site} did not restore the network")
    return res


# --- 2. local Yang-Baxter

def lyb(rng, samples=200, size=None):
    res = Result("lyb")
    res.check(local_yb_transform("phi", 1, 2, 3) == (-1, -2, -3), "phi (1,2,3) -> (-1,-2,-3)")
    l, r = lyb_sides("phi", (1, 2, 3), (-1, -2, -3))
    res.check(l == r, "phi pinned matrix identity")
    res.check(local_yb_transform("phi", 1, 1, 1) == (1, 1, 1), "phi fixed point")
    res.check(local_yb_transform("electrical", 1, 2, 3) == (1, Fraction(1, 2), Fraction(1, 3)),
              "electrical (1,2,3)")
    res.check(local_yb_transform("lusztig", 1, 2, 3) == (Fraction(3, 2), 4, Fraction(1, 2)),
              "lusztig (1,2,3)")
    for kind in ("phi", "electrical", "phi_check", "lusztig"):
        done = 0
        while done < samples:
            p = (signed(rng), signed(rng), signed(rng))
            try:
                q = local_yb_transform(kind, *p)
                l, r = lyb_sides(kind, p, q)
            except (DegeneracyError, ParameterError):
                continue
            done += 1
            res.check(l == r, f"{kind} {_show(p)}")
            if kind == "electrical":
                rp = q[0] * q[1] + q[1] * q[2] + q[2] * q[0]
                res.check(all(a * b == rp for a, b in zip(p, q)), f"electrical product rule {_show(p)}")
    return res


# --- 3. path sum = ordered product

def pathsum(rng, samples=50, size=7, max_crossings=6, all_words_up_to=4):
    """Every reduced word with at most ``max_crossings`` letters.

    A diagram splits into blocks over runs of adjacent levels and both sides
    factor accordingly, so above ``all_words_up_to`` strands only words using
    every level are enumerated; with 6 letters nothing spans more than 7 strands.
    """
    res = Result("pathsum")
    for n in range(2, size + 1):
        words = reduced_words(n, max_crossings)
        if n > all_words_up_to:
            words = [w for w in words if set(w) == set(range(1, n))]
        for w in words:
            for _ in range(samples):
                d = wiring_from_word(w, n, [rng.choice("bw") for _ in w])
                m = VertexModel(d, tuple(signed(rng) for _ in w))
                res.check(partition_pathsum(m) == partition_product(m),
                          f"word {w} on {n} strands, colors {''.join(d.colors)}, params {_show(m.params)}")
    return res


# --- 4. braid-move invariance

def _explore_models(m0, rng, walk=None):
    if walk is None:
        seen = {m0.diagram.word: m0}
        stack = [m0]
        while stack:
            m = stack.pop()
            yield m
            nxt = [commute_move(m, p + 1) for p in commute_sites(m.diagram.word)]
            for p in braid_sites(m.diagram.word):
                try:
                    nxt.append(yb_mutate(m, p + 1))
                except DegeneracyError:
                    pass
            for m2 in nxt:
                if m2.diagram.word not in seen:
                    seen[m2.diagram.word] = m2
                    stack.append(m2)
    else:
        m = m0
        for _ in range(walk):
            yield m
            opts = [(1, p) for p in braid_sites(m.diagram.word)] + [(0, p) for p in commute_sites(m.diagram.word)]
            kind, p = rng.choice(opts)
            try:
                m = yb_mutate(m, p + 1) if kind else commute_move(m, p + 1)
            except DegeneracyError:
                pass


def braid(rng, samples=50, size=5, full_large=10, walk=60):
    """Every braid move at every visited diagram keeps M_B; all diagrams of
    Sigma_N for N <= 4, and for N = 5 all diagrams on ``full_large`` samples
    and random walks on the rest."""
    res = Result("braid")
    for N in range(3, size + 1):
        for k in range(samples):
            g = {p: pos(rng) for p in standard_pairs(N)}
            m0 = standard_model(N, g)
            M = partition_product(m0)
            full = N <= 4 or k < full_large
            for m in _explore_models(m0, rng, None if full else walk):
                for p in braid_sites(m.diagram.word):
                    try:
                        m2 = yb_mutate(m, p + 1)
                    except DegeneracyError:
                        continue
                    res.check(partition_product(m2) == M,
                              f"N={N} word {m.diagram.word} move at {p + 1}")
                    res.check(yb_mutate(m2, p + 1) == m, f"N={N} word {m.diagram.word} move back at {p + 1}")
    return res


# --- 5. Grassmannian and conversions

def grassmann(rng, samples=50, size=6):
    res = Result("grassmann")
    for N in range(2, size + 1):
        for _ in range(samples):
            net = st.random_standard(N, rng)
            mb, mr = st.mb_standard(net), st.mr_standard(net)
            tag = f"N={N} gamma {_show(net.gamma[p] for p in sorted(net.gamma))}"
            res.check(row_space_equal(st.build_w1(mr), st.build_w2(mb)), "W1 ~ W2 " + tag)
            res.check(st.mr_from_mb(mb) == mr, "mr_from_mb " + tag)
            res.check(st.mb_from_mr(mr) == mb, "mb_from_mr " + tag)
    return res


# --- 6. inverse problem

def inverse(rng, samples=100, size=6):
    res = Result("inverse")
    for N in range(2, size + 1):
        for _ in range(samples):
            net = st.random_standard(N, rng)
            try:
                ok = st.invert_conductances(st.mb_standard(net), N) == net
            except Exception as e:   # report rather than abort the suite
                ok = False
            res.check(ok, f"N={N} gamma {_show(net.gamma[p] for p in sorted(net.gamma))}")
    return res


# --- 7. symplectic form and determinant

def symplectic(rng, samples=50, size=6):
    res = Result("symplectic")
    for N in range(2, size + 1):
        for _ in range(samples):
            net = st.random_standard(N, rng)
            tag = f"N={N} gamma {_show(net.gamma[p] for p in sorted(net.gamma))}"
            res.check(st.check_symplectic(net), "Omega " + tag)
            res.check(st.cmb_standard(net).det() == 1, "det " + tag)
    return res


# --- 8. Temperley-Lieb

def tl(rng, samples=20, size=8):
    res = Result("tl")
    for n in range(2, size + 1):
        a = {i: st.tl_generator(i, n) for i in range(1, n)}
        Z = Matrix.zeros(n, n)
        I = Matrix.identity(n)
        for i in range(1, n):
            res.check(a[i] @ a[i] == Z, f"a_{i}^2 = 0 at n={n}")
            for j in range(1, n):
                if abs(i - j) == 1:
                    res.check(a[i] @ a[j] @ a[i] == -a[i], f"a_{i} a_{j} a_{i} = -a_{i} at n={n}")
                    for _ in range(samples):
                        r1, r2, r3 = signed(rng), signed(rng), signed(rng)
                        D = r1 + r3 - r1 * r2 * r3
                        if D == 0:
                            continue
                        lhs = (I + a[i].scale(r1)) @ (I + a[j].scale(r2)) @ (I + a[i].scale(r3))
                        rhs = ((I + a[j].scale(r2 * r3 / D)) @ (I + a[i].scale(D))
                               @ (I + a[j].scale(r1 * r2 / D)))
                        res.check(lhs == rhs, f"factorisation at n={n}, i={i}, j={j}, r={_show((r1, r2, r3))}")
                elif abs(i - j) >= 2:
                    res.check(a[i] @ a[j] == a[j] @ a[i], f"a_{i} a_{j} = a_{j} a_{i} at n={n}")
    return res


# --- 9. Lusztig degeneration

def lusztig(rng=None, samples=None, size=5):
    res = Result("lusztig")
    for N in range(2, size + 1):
        res.check(st.check_lusztig_degeneration(N, bound=max(5, size)), f"N={N}")
    return res


# --- 10. chamber ansatz

def cluster(rng, samples=50, size=4):
    res = Result("cluster")
    res.check(ch.chamber_data((2, 1, 3, 2, 3, 1), 3) == (frozenset({2, 4}), 1, 3),
              "chamber_data(213231, 3)")
    # pinned n = 3 four-term instance from two electrical charts
    t = tuple(pos(rng) for _ in range(3))
    mv = ch.glued_chamber_vars(ch.explore_charts((1, 2, 1), t, "electrical"), 3)
    res.check(ch.check_relation(mv, "four_term", 1, 2, 3), f"M2 M13 = M3 M12 + M1 M23 + M M123 at {_show(t)}")
    ns = list(range(3, size + 1))
    for kind, rel, other in (("electrical", "four_term", "three_term"), ("lusztig", "three_term", "four_term")):
        witnessed = False
        for k in range(samples):
            n = ns[k % len(ns)]
            h = tuple(standard_word(n))
            chart = tuple(pos(rng) for _ in h)
            charts = ch.explore_charts(h, chart, kind)
            try:
                mv = ch.glued_chamber_vars(charts, n)
            except Exception as e:
                res.check(False, f"{kind} charts inconsistent for n={n}: {e}")
                continue
            for w, tw in charts.items():
                res.check(ch.ansatz_forward(ch.ansatz_inverse(tw, w, n), w) == tw,
                          f"{kind} roundtrip on {w}")
            for w, tw in list(charts.items())[:4]:
                mw = ch.ansatz_inverse(tw, w, n)
                restricted = {S: mv[S] for S in mw}
                res.check(ch.ansatz_inverse(ch.ansatz_forward(restricted, w), w, n) == restricted,
                          f"{kind} inverse roundtrip on {w}")
            for x in ch.relation_instances(mv, n):
                res.check(ch.check_relation(mv, rel, *x), f"{kind} {rel} at {x} chart {_show(chart)}")
                if not ch.check_relation(mv, other, *x):
                    witnessed = True
            for p in braid_sites(h):
                w2, t2 = ch.chart_braid(h, chart, p + 1, kind)
                a, b, c = chart[p:p + 3]
                a2, b2, c2 = t2[p:p + 3]
                res.check(a * b == c2 * b2 and c * b == a2 * b2, f"{kind} product identities")
        res.check(witnessed, f"{kind} charts never violate {other}")
    return res


# --- 11. dynamics

def dynamics(rng, samples=50, size=4):
    res = Result("dynamics")
    for k in range(samples):
        m, n = rng.randint(2, size), rng.randint(2, size)
        lat = dy.Lattice(tuple(tuple(pos(rng) for _ in range(n)) for _ in range(m)))
        tag = f"lattice {[_show(r) for r in lat.rows]}"
        try:
            for j in range(1, m):
                r = dy.act_r(lat, j)
                res.check(dy.act_r(r, j) == lat, f"r{j}^2 " + tag)
                res.check(r.row_products()[j - 1] == lat.row_products()[j], f"r{j} row products " + tag)
                for j2 in range(1, m):
                    if j2 == j + 1:
                        res.check(dy.apply_word(lat, [f"r{j}", f"r{j2}", f"r{j}"])
                                  == dy.apply_word(lat, [f"r{j2}", f"r{j}", f"r{j2}"]), f"r braid {j} " + tag)
                    elif abs(j2 - j) >= 2:
                        res.check(dy.apply_word(lat, [f"r{j}", f"r{j2}"]) == dy.apply_word(lat, [f"r{j2}", f"r{j}"]),
                                  f"r{j} r{j2} commute " + tag)
                for i in range(1, n):
                    res.check(dy.apply_word(lat, [f"r{j}", f"s{i}"]) == dy.apply_word(lat, [f"s{i}", f"r{j}"]),
                              f"r{j} s{i} commute " + tag)
            for i in range(1, n):
                res.check(dy.act_s(dy.act_s(lat, i), i) == lat, f"s{i}^2 " + tag)
                for i2 in range(1, n):
                    if i2 == i + 1:
                        res.check(dy.apply_word(lat, [f"s{i}", f"s{i2}", f"s{i}"])
                                  == dy.apply_word(lat, [f"s{i2}", f"s{i}", f"s{i2}"]), f"s braid {i} " + tag)
                    elif abs(i2 - i) >= 2:
                        res.check(dy.apply_word(lat, [f"s{i}", f"s{i2}"]) == dy.apply_word(lat, [f"s{i2}", f"s{i}"]),
                                  f"s{i} s{i2} commute " + tag)
        except DegeneracyError:
            continue
    for n in range(1, 7):
        for _ in range(max(1, samples // 5)):
            xs = [pos(rng) for _ in range(n)]
            ys = [pos(rng) for _ in range(n)]
            res.check(dy.q_poly(xs, ys) == dy.transfer(xs, ys)[1, 0], f"Q at {_show(xs)}, {_show(ys)}")
            try:
                t = dy.stable_point(xs, ys)
            except DegeneracyError:
                continue
            tt = t
            for x, y in zip(xs, ys):
                tt = dy.mobius(x, y, tt)
            res.check(tt == t, f"stable point at {_show(xs)}, {_show(ys)}")
    for m, n in ((2, 1), (2, 2), (2, 3), (3, 3), (2, 4)):
        sl = dy.symbolic_lattice(m, n)
        for j in range(1, m):
            for i in range(1, n + 1):
                res.check(lowest_degree_part(dy.p_poly(sl, j, i)) == dy.p_poly_first(sl, j, i),
                          f"degeneration of P_{j},{i} on {m}x{n}")
    return res


# --- 12. column sums

def colsums(rng, samples=50, size=6):
    res = Result("colsums")
    for N in range(2, size + 1):
        for _ in range(samples):
            net = st.random_standard(N, rng)
            mb = st.mb_standard(net)
            res.check(all(c == 1 for c in mb.col_sums()), f"mb_standard N={N}")
            res.check(all(c == 1 for c in st.mb_from_mr(st.mr_standard(net)).col_sums()), f"mb_from_mr N={N}")
    for w in reduced_words(4, 6):
        for _ in range(max(1, samples // 10)):
            d = wiring_from_word(w, 4, [rng.choice("bw") for _ in w])
            m = VertexModel(d, tuple(signed(rng) for _ in w))
            res.check(all(c == 1 for c in partition_product(m).col_sums()), f"model on word {w}")
    return res


SUITES = {
    "ydelta": ydelta,
    "lyb": lyb,
    "pathsum": pathsum,
    "braid": braid,
    "grassmann": grassmann,
    "inverse": inverse,
    "symplectic": symplectic,
    "tl": tl,
    "lusztig": lusztig,
    "cluster": cluster,
    "dynamics": dynamics,
    "colsums": colsums,
}

# acceptance criteria in order, with their default sample counts and sizes
ACCEPTANCE = [
    ("ydelta", 100, 5),
    ("lyb", 200, None),
    ("pathsum", 50, 7),
    ("braid", 50, 5),
    ("grassmann", 50, 6),
    ("inverse", 100, 6),
    ("symplectic", 50, 6),
    ("tl", 20, 8),
    ("lusztig", None, 5),
    ("cluster", 50, 4),
    ("dynamics", 50, 4),
    ("colsums", 50, 6),
]


def run_suite(name, seed=0, samples=None, size=None):
    fn = SUITES[name]
    defaults = {n: (s, z) for n, s, z in ACCEPTANCE}
    s0, z0 = defaults[name]
    kwargs = {}
    if s0 is not None or samples is not None:
        kwargs["samples"] = samples if samples is not None else s0
    if z0 is not None or size is not None:
        kwargs["size"] = size if size is not None else z0
    return fn(random.Random(seed), **kwargs)
