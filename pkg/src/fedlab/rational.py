"""Exact rational arithmetic used everywhere weights and LP data appear.

All weights, capacities and LP coefficients in this package are exact
rationals; no solve path ever touches floating point.  gmpy2's mpq is used
when available (roughly an order of magnitude faster on tableau pivots),
with fractions.Fraction as a drop-in fallback.
"""

import re

try:
    from gmpy2 import mpq as Rat

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

    _BACKEND = "fractions"

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rat(numerator, denominator=1):
    """Build an exact rational from integers."""
    return Rat(numerator, denominator)


def parse_rat(text):
    """Parse 'p' or 'p/q' (q > 0).  Rejects floats and malformed strings."""
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Rat(num, den)


def format_rat(x):
    """Serialize exactly: 'p' when integral, otherwise 'p/q'."""
    x = Rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_floor(x):
    return x.numerator // x.denominator


def rat_ceil(x):
    return -((-x.numerator) // x.denominator)


def backend_name():
    return _BACKEND
