"""Text form of exact rationals: ``p/q`` or ``p``."""

import re
from fractions import Fraction

from .errors import ParseError

_RAT = re.compile(r"-?\d+(?:/\d+)?\Z")


def parse_rational(text, line=None, col=None):
    s = text.strip()
    if not _RAT.match(s):
        raise ParseError(f"malformed rational {text!r}", line, col)
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            slash = col + s.index("/") + 1 if col is not None else None
            raise ParseError(f"zero denominator in {text!r}", line, slash)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def fmt(x):
    """Canonical text of a rational (or of anything with a sensible str)."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def split_rationals(line, lineno=None):
    """Parse a whitespace-separated row, reporting 1-based columns on error."""
    out = []
    for m in re.finditer(r"\S+", line):
        out.append(parse_rational(m.group(), lineno, m.start() + 1))
    return out
