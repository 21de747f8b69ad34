"""Dense exact matrices over Fraction or MPoly entries.

Storage is row-major tuples; every operation returns a new matrix.  Row and
column indices are 0-based except in ``embed_block``, whose (i, j) follow
the strand labels 1..n.
"""

from fractions import Fraction
from itertools import permutations

from .errors import ArgumentError, ParseError, ShapeError, SingularMatrixError
from .rational import fmt, split_rationals

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


class Matrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, data):
        data = [list(r) for r in data]
        if not data or not data[0]:
            raise ShapeError("matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ShapeError("ragged rows")
        self.rows = len(data)
        self.cols = width
        self._e = tuple(tuple(_coerce(x) for x in r) for r in data)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls([[ZERO] * c for _ in range(r)])

    @classmethod
    def from_function(cls, r, c, f):
        return cls([[f(i, j) for j in range(c)] for i in range(r)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i):
        return list(self._e[i])

    def col(self, j):
        return [r[j] for r in self._e]

    def tolist(self):
        return [list(r) for r in self._e]

    def __iter__(self):
        return iter(self._e)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        return "Matrix(" + repr([[fmt(x) for x in r] for r in self._e]) + ")"

    def __str__(self):
        return format_matrix(self)

    # -- ring operations
    def __add__(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self._e])

    def scale(self, c):
        return Matrix([[c * a for a in r] for r in self._e])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    @property
    def T(self):
        return Matrix(list(zip(*self._e)))

    def map(self, f):
        return Matrix([[f(a) for a in r] for r in self._e])

    def submatrix(self, rows, cols):
        return Matrix([[self._e[i][j] for j in cols] for i in rows])

    def hstack(self, other):
        if self.rows != other.rows:
            raise ShapeError("hstack needs equal row counts")
        return Matrix([list(r) + list(s) for r, s in zip(self._e, other._e)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise ShapeError("vstack needs equal column counts")
        return Matrix(self.tolist() + other.tolist())

    def col_sums(self):
        return [sum(c, ZERO) for c in zip(*self._e)]

    def row_sums(self):
        return [sum(r, ZERO) for r in self._e]

    def is_symmetric(self):
        return self == self.T

    def is_square(self):
        return self.rows == self.cols

    def det(self):
        if not self.is_square():
            raise ShapeError("determinant of a non-square matrix")
        if all(isinstance(x, Fraction) for r in self._e for x in r):
            return _det_field(self.tolist())
        return _det_laplace(self.tolist())

    def inverse(self):
        return mat_inverse(self)

    def rref(self):
        return rref(self)

    def rank(self):
        return rref(self)[1]


def _det_field(a):
    n = len(a)
    d = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _det_laplace(a):
    n = len(a)
    total = ZERO
    for p in permutations(range(n)):
        term = Fraction(_perm_sign(p))
        for i in range(n):
            term = term * a[i][p[i]]
            if not term:
                break
        total = total + term
    return total


def mat_mul(a, b):
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    bt = list(zip(*b._e))
    out = []
    for r in a._e:
        row = []
        for c in bt:
            s = ZERO
            for x, y in zip(r, c):
                if x and y:
                    s = s + x * y
            row.append(s)
        out.append(row)
    return Matrix(out)


def mat_inverse(a):
    if not a.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = a.rows
    m = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(a._e)]
    rank = 0
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            rank = rref(a)[1]
            raise SingularMatrixError(f"matrix is singular (rank {rank} < {n})", rank)
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return Matrix([r[n:] for r in m])


def rref(a):
    """Reduced row echelon form and rank; pivots are the first nonzero
    entry found scanning columns left to right, rows top to bottom."""
    m = a.tolist()
    rows, cols = a.rows, a.cols
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return Matrix(m), r


def row_space_equal(a, b):
    if a.cols != b.cols:
        raise ShapeError(f"column counts differ: {a.cols} vs {b.cols}")
    ra, ka = rref(a)
    rb, kb = rref(b)
    return ka == kb and ra.tolist()[:ka] == rb.tolist()[:kb]


def schur_complement(m, keep):
    """A - B D^-1 C after moving the 0-based indices ``keep`` to the front."""
    if not m.is_square():
        raise ShapeError("Schur complement of a non-square matrix")
    keep = list(keep)
    if len(set(keep)) != len(keep) or any(not 0 <= k < m.rows for k in keep):
        raise ArgumentError(f"bad index set {keep}")
    rest = [i for i in range(m.rows) if i not in set(keep)]
    A = m.submatrix(keep, keep)
    if not rest:
        return A
    B = m.submatrix(keep, rest)
    C = m.submatrix(rest, keep)
    D = m.submatrix(rest, rest)
    try:
        Dinv = mat_inverse(D)
    except SingularMatrixError as e:
        raise SingularMatrixError(f"interior block is singular (rank {e.rank} < {D.rows})", e.rank)
    return A - B @ Dinv @ C


def embed_block(x, i, j, n):
    """n x n identity with rows/cols i, j (1-based, i < j) replaced by the 2x2 x."""
    if not (1 <= i < j <= n):
        raise IndexError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if x.shape != (2, 2):
        raise ShapeError("embed_block needs a 2x2 block")
    e = Matrix.identity(n).tolist()
    i0, j0 = i - 1, j - 1
    e[i0][i0], e[i0][j0] = x[0, 0], x[0, 1]
    e[j0][i0], e[j0][j0] = x[1, 0], x[1, 1]
    return Matrix(e)


def structured(kind, n):
    """The fixed matrices S, S_tilde, T, Omega, w0, Id0, Id1 at size n.

    T needs even n (the shuffle on 2N coordinates).  Id0 is the first n-1
    rows of I_n; Id1 is the first n-1 columns of I_n.
    """
    if n < 2:
        raise ShapeError(f"size must be at least 2, got {n}")
    if kind == "S":
        def f(i, j):
            if i == j:
                return 1
            if i == j + 1 or (i == 0 and j == n - 1):
                return -1
            return 0
        return Matrix.from_function(n, n, f)
    if kind == "S_tilde":
        return Matrix.from_function(n, n, lambda i, j: 1 if j <= i else 0)
    if kind == "T":
        if n % 2:
            raise ShapeError(f"T needs an even size, got {n}")
        h = n // 2
        def f(i, j):
            return 1 if (i % 2 == 0 and j == h + i // 2) or (i % 2 == 1 and j == i // 2) else 0
        return Matrix.from_function(n, n, f)
    if kind == "Omega":
        return Matrix.from_function(n, n, lambda i, j: (i < j) - (i > j))
    if kind == "w0":
        return Matrix.from_function(n, n, lambda i, j: 1 if i + j == n - 1 else 0)
    if kind == "Id0":
        return Matrix.from_function(n - 1, n, lambda i, j: 1 if i == j else 0)
    if kind == "Id1":
        return Matrix.from_function(n, n - 1, lambda i, j: 1 if i == j else 0)
    raise ArgumentError(f"unknown structured matrix {kind!r}")


def format_matrix(m):
    return "\n".join(" ".join(fmt(x) for x in r) for r in m)


def parse_matrix(text):
    rows = []
    for k, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append((k, split_rationals(line, k)))
    if not rows:
        raise ParseError("empty matrix", 1)
    width = len(rows[0][1])
    for k, r in rows:
        if len(r) != width:
            raise ParseError(f"expected {width} entries, found {len(r)}", k)
    return Matrix([r for _, r in rows])
