"""Standard graphs Sigma_N: M_B, the Grassmannian picture, conversions,
the inverse problem, and the symplectic / Temperley-Lieb / Lusztig facts."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (ArgumentError, ConsistencyError, DegeneracyError, InversionError,
                     ParameterError, ParseError, ShapeError, SingularMatrixError)
from .matrix import Matrix, embed_block, mat_inverse, rref, structured
from .medial import parity_color, standard_graph, standard_pairs, standard_word, BLACK
from .mpoly import MPoly, lowest_degree_part
from .network import response
from .rational import fmt, split_rationals
from .vertex_model import local_operator, ordered_product, partition_product, standard_model


@dataclass(frozen=True)
class StandardNetwork:
    N: int
    gamma: dict   # (i, j) -> Fraction, i < j

    def __post_init__(self):
        pairs = set(standard_pairs(self.N))
        if set(self.gamma) != pairs:
            raise ArgumentError(f"need exactly the {len(pairs)} pairs i < j <= {self.N}")
        for p, g in self.gamma.items():
            if g == 0:
                raise ParameterError(f"zero conductance on {p}")

    def network(self):
        return standard_graph(self.N, self.gamma)


def random_standard(N, rng, top=9):
    return StandardNetwork(N, {p: Fraction(rng.randint(1, top), rng.randint(1, top))
                               for p in standard_pairs(N)})


def mb_standard(net):
    return partition_product(standard_model(net.N, net.gamma))


def mr_standard(net):
    return response(net.network())


# --- Grassmannian

def build_w1(mr):
    N = mr.rows
    w = structured("S", N).hstack(mr)
    if rref(w)[1] != N - 1:
        raise ConsistencyError(f"W1 has rank {rref(w)[1]}, expected {N - 1}")
    return w


def build_w2(mb):
    N = mb.rows
    w = mb.hstack(Matrix.identity(N)) @ structured("S", 2 * N) @ structured("T", 2 * N)
    if rref(w)[1] != N - 1:
        raise ConsistencyError(f"W2 has rank {rref(w)[1]}, expected {N - 1}")
    return w


def mr_from_mb(mb):
    N = mb.rows
    if N < 2:
        raise ShapeError("need N >= 2")
    X = structured("Id0", N) @ build_w2(mb)
    M0 = X.submatrix(range(N - 1), range(N - 1))
    try:
        Y = mat_inverse(M0) @ X
    except SingularMatrixError as e:
        raise DegeneracyError(f"M0 block is singular (rank {e.rank})")
    cum = Y.submatrix(range(N - 1), range(N, 2 * N)).tolist()
    rows = [cum[0]] + [[a - b for a, b in zip(cum[k], cum[k - 1])] for k in range(1, N - 1)]
    rows.append([-sum(c) for c in zip(*rows)])
    mr = Matrix(rows)
    if not mr.is_symmetric() or any(mr.row_sums()):
        raise ConsistencyError("recovered response matrix is not symmetric with zero row sums")
    return mr


def mb_from_mr(mr):
    """Boundary partition function from the response matrix.

    The first N-1 rows of W1 T^t S~ together with the all-ones row span the
    row space of (M_B, Id); normalising the right block to Id reads off M_B.
    """
    N = mr.rows
    Z = build_w1(mr) @ structured("T", 2 * N).T @ structured("S_tilde", 2 * N)
    Z = Z.submatrix(range(N - 1), range(2 * N)).vstack(Matrix([[1] * (2 * N)]))
    Y = Z.submatrix(range(N), range(N, 2 * N))
    try:
        V = mat_inverse(Y) @ Z
    except SingularMatrixError as e:
        raise DegeneracyError(f"right block is singular (rank {e.rank})")
    if V.submatrix(range(N), range(N, 2 * N)) != Matrix.identity(N):
        raise ConsistencyError("normalisation failed")
    mb = V.submatrix(range(N), range(N))
    if any(c != 1 for c in mb.col_sums()):
        raise ConsistencyError("recovered M_B does not have unit column sums")
    return mb


# --- inverse problem

def _var(p):
    return f"x{p[0]}_{p[1]}"


@lru_cache(maxsize=None)
def symbolic_mb(N):
    """M_B of Sigma_N with phi-parameters x_i_j as polynomial variables."""
    blocks = []
    for p in standard_pairs(N):
        blocks.append((p[0], p[1], local_operator("phi", MPoly.var(_var(p)))))
    return ordered_product(blocks, N)


@lru_cache(maxsize=None)
def inversion_schedule(N):
    """Order in which each phi-parameter is read off a single entry.

    Each step is (pair, [(row, col, c1, c0), ...]) where the entry equals
    c1 * x + c0 with c1, c0 polynomials in already-solved parameters.
    Alternatives are kept in case c1 vanishes at a particular point.
    """
    M = symbolic_mb(N)
    pairs = list(reversed(standard_pairs(N)))
    known = set()
    steps = []
    while len(known) < len(pairs):
        progress = False
        for p in pairs:
            v = _var(p)
            if v in known:
                continue
            cands = []
            for a in range(N):
                for b in range(N):
                    e = M[a, b]
                    vs = set(e.variables())
                    if v in vs and vs <= known | {v} and e.degree_in(v) == 1:
                        cs = e.coefficients_in(v)
                        cands.append((a, b, cs[1], cs.get(0, MPoly.const(0))))
            if cands:
                cands.sort(key=lambda c: (len(c[2].terms) + len(c[3].terms), c[0], c[1]))
                steps.append((p, cands))
                known.add(v)
                progress = True
        if not progress:
            raise InversionError(f"no triangular elimination order exists for N={N}")
    return tuple(steps)


def invert_conductances(mb, N=None):
    N = mb.rows if N is None else N
    if mb.shape != (N, N):
        raise ShapeError(f"expected a {N}x{N} matrix")
    if N < 2:
        raise ShapeError("need N >= 2")
    vals = {}
    for p, cands in inversion_schedule(N):
        for a, b, c1, c0 in cands:
            k1 = c1.evaluate(vals)
            if k1 != 0:
                x = (mb[a, b] - c0.evaluate(vals)) / k1
                break
        else:
            raise InversionError(f"every entry isolating gamma{p} has a vanishing coefficient")
        if x == 0:
            raise InversionError(f"entry ({a + 1},{b + 1}) forces a zero parameter for {p}")
        vals[_var(p)] = Fraction(x)
    gamma = {}
    for p in standard_pairs(N):
        x = vals[_var(p)]
        gamma[p] = x if parity_color(*p) == BLACK else -1 / x
    net = StandardNetwork(N, gamma)
    back = mb_standard(net)
    if back != mb:
        a, b = next((a, b) for a in range(N) for b in range(N) if back[a, b] != mb[a, b])
        raise InversionError(f"no exact solution: entry ({a + 1},{b + 1}) is {fmt(mb[a, b])}, "
                             f"reconstruction gives {fmt(back[a, b])}")
    return net


# --- symplectic and Temperley-Lieb

def cmb_standard(net):
    return structured("w0", net.N) @ mb_standard(net)   # w0 is an involution


def cphi_product(N, params):
    """Level-wise product of phi_check factors along the standard word."""
    blocks = [(h, h + 1, local_operator("phi_check", r)) for h, r in zip(standard_word(N), params)]
    return ordered_product(blocks, N)


def check_symplectic(net):
    C = cmb_standard(net)
    Om = structured("Omega", net.N)
    return C.T @ Om @ C == Om


def tl_generator(i, n):
    if not 1 <= i <= n - 1:
        raise IndexError(f"need 1 <= i <= {n - 1}, got {i}")
    a = Matrix.zeros(n, n).tolist()
    a[i - 1][i - 1] = a[i - 1][i] = Fraction(-1)
    a[i][i - 1] = a[i][i] = Fraction(1)
    return Matrix(a)


# --- Lusztig degeneration

def check_lusztig_degeneration(N, bound=5):
    """Lowest-degree parts of the upper triangle of the phi_check product
    against the Lusztig product, after the alternating sign change of the
    sink order."""
    if N > bound:
        raise ArgumentError(f"N={N} exceeds the symbolic bound {bound}")
    word = standard_word(N)
    gs = [MPoly.var(f"g{k}") for k in range(1, len(word) + 1)]
    M1 = ordered_product([(h, h + 1, local_operator("phi_check", g)) for h, g in zip(word, gs)], N)
    ML = ordered_product([(h, h + 1, local_operator("lusztig", g)) for h, g in zip(word, gs)], N)
    for a in range(N):
        for b in range(a, N):
            sign = -1 if (b - a) % 2 else 1
            if lowest_degree_part(M1[a, b] * sign) != ML[a, b]:
                return False
    return True


# --- text form

def conductances_to_text(net):
    return "".join(f"{i} {j} {fmt(net.gamma[(i, j)])}\n" for i, j in sorted(net.gamma))


def conductances_from_text(text):
    gamma = {}
    for k, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 3 or not toks[0].isdigit() or not toks[1].isdigit():
            raise ParseError("expected 'i j value'", k, 1)
        i, j = int(toks[0]), int(toks[1])
        if not i < j:
            raise ParseError(f"need i < j, got {i} {j}", k, 1)
        gamma[(i, j)] = split_rationals(line, k)[2]
    if not gamma:
        raise ParseError("no conductances", 1)
    N = max(j for _, j in gamma)
    try:
        return StandardNetwork(N, gamma)
    except (ArgumentError, ParameterError) as e:
        raise ParseError(str(e), 1)
