"""Independent reference computations used to freeze expected values.

Everything here is plain Python over ``fractions.Fraction`` so the results are
exact for decimal inputs and share no code with the package.
"""

import math
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction


def frac_pairs(pairs):
    return [(Fraction(str(m)), Fraction(str(n))) for m, n in pairs]


def steps(pairs):
    out = []
    prev_m, prev_n = Fraction(0), Fraction(0)
    for m, n in pairs:
        out.append((m - prev_m, prev_n - n))
        prev_m, prev_n = m, n
    return out


def spatial_distance(y, x):
    y, x = frac_pairs(y), frac_pairs(x)
    k = len(y)
    md = nmd = ed = Fraction(0)
    for (dy, gy), (dx, gx) in zip(steps(y), steps(x)):
        mem = abs(dy - dx)
        non = abs(gy - gx)
        full = abs((dy + gy) - (dx + gx))
        md += mem + full
        nmd += non + full
        ed += mem + non
    return md / (4 * k), nmd / (4 * k), ed / (4 * k)


def spatial_similarity(y, x):
    return tuple(1 - d for d in spatial_distance(y, x))


def hamming(y, x):
    y, x = frac_pairs(y), frac_pairs(x)
    s = sum(abs(a - c) + abs(b - d) for (a, b), (c, d) in zip(y, x))
    return 1 - s / (2 * len(y))


def chen(y, x):
    y, x = frac_pairs(y), frac_pairs(x)
    s = sum(abs((a - b) - (c - d)) for (a, b), (c, d) in zip(y, x))
    return 1 - s / (2 * len(y))


def euclid(y, x):
    y, x = frac_pairs(y), frac_pairs(x)
    s = sum((a - c) ** 2 + (b - d) ** 2 for (a, b), (c, d) in zip(y, x))
    return 1 - math.sqrt(s / (2 * len(y)))


def rounded(value, places=4):
    """Half-up rounding of an exact or float value to ``places`` decimals."""
    if isinstance(value, Fraction):
        d = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        d = Decimal(f"{value:.12f}")
    return float(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))
