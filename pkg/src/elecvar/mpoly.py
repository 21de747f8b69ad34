"""Sparse multivariate polynomials over the rationals with named variables.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name; the
constant monomial is ``()``.  Polynomials are immutable.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i][0] == b[j][0]:
            out.append((a[i][0], a[i][1] + b[j][1]))
            i += 1
            j += 1
        elif a[i][0] < b[j][0]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _deg(m):
    return sum(e for _, e in m)


class MPoly:
    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = Fraction(c)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def var(cls, name):
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @staticmethod
    def lift(x):
        if isinstance(x, MPoly):
            return x
        if isinstance(x, (int, Fraction, _RationalABC)):
            return MPoly.const(x)
        raise TypeError(f"cannot lift {type(x).__name__} to MPoly")

    # -- inspection
    @property
    def terms(self):
        return dict(self._t)

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and () in self._t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get((), Fraction(0))

    def variables(self):
        return sorted({v for m in self._t for v, _ in m})

    def degree(self):
        return max((_deg(m) for m in self._t), default=-1)

    def min_degree(self):
        return min((_deg(m) for m in self._t), default=-1)

    def degree_in(self, name):
        return max((dict(m).get(name, 0) for m in self._t), default=-1)

    def coefficients_in(self, name):
        """Split as sum of c_k * name^k; returns {k: c_k}."""
        out = {}
        for m, c in self._t.items():
            k = 0
            rest = []
            for v, e in m:
                if v == name:
                    k = e
                else:
                    rest.append((v, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: MPoly._raw(d) for k, d in out.items()}

    # -- arithmetic
    def __add__(self, other):
        try:
            other = MPoly.lift(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for m, c in other._t.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return MPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = MPoly.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw({})
            return MPoly._raw({m: c * other for m, c in self._t.items()})
        try:
            other = MPoly.lift(other)
        except TypeError:
            return NotImplemented
        t = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                m = _mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return MPoly._raw(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if not other.is_constant():
                raise ZeroDivisionError("division by a non-constant polynomial")
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division of a polynomial by zero")
        return MPoly._raw({m: c / other for m, c in self._t.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            other = MPoly.lift(other)
        except TypeError:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- evaluation
    def evaluate(self, values):
        """Substitute ``values`` (name -> Fraction or MPoly); unknown names stay."""
        acc = MPoly._raw({})
        const_only = True
        total = Fraction(0)
        for m, c in self._t.items():
            term = c
            leftover = []
            for v, e in m:
                if v in values:
                    term = term * values[v] ** e
                else:
                    leftover.append((v, e))
            if leftover:
                term = MPoly._raw({tuple(leftover): Fraction(1)}) * term
            if isinstance(term, MPoly):
                const_only = False
                acc = acc + term
            else:
                total += term
        if const_only:
            return total
        return acc + total

    def homogeneous_part(self, d):
        return MPoly._raw({m: c for m, c in self._t.items() if _deg(m) == d})

    # -- printing
    def sorted_terms(self):
        names = self.variables()

        def key(item):
            m = dict(item[0])
            return (-_deg(item[0]), [-m.get(v, 0) for v in names])

        return sorted(self._t.items(), key=key)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"MPoly({self})"


def lowest_degree_part(p):
    """Sum of the terms of minimal total degree (zero stays zero)."""
    if not isinstance(p, MPoly):
        return p
    if p.is_zero():
        return p
    return p.homogeneous_part(p.min_degree())
