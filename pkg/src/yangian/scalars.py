"""Dense polynomials in one central variable over exact rationals.

A polynomial is a plain list of Fraction coefficients in ascending
order of the power, with trailing zeros trimmed; the empty list is the
zero polynomial.  These carry the purely scalar parts of the
computation (falling-factorial denominators, eigenvalue products);
polynomials with noncommutative coefficients live in pbw.UPoly.
"""

import math
from fractions import Fraction


def trim(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def const(c):
    return trim([Fraction(c)])


ZERO = []
ONE = [Fraction(1)]


def padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] += c
    return trim(out)


def pneg(a):
    return [-c for c in a]


def psub(a, b):
    return padd(a, pneg(b))


def pscale(a, c):
    c = Fraction(c)
    if c == 0:
        return []
    return [x * c for x in a]


def pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def pshift(p, a):
    """Substitute u -> u + a."""
    a = Fraction(a)
    out = [Fraction(0)] * len(p)
    for k, c in enumerate(p):
        if c == 0:
            continue
        pw = Fraction(1)
        for j in range(k, -1, -1):
            out[j] += c * math.comb(k, k - j) * pw
            pw *= a
    return trim(out)


def peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def from_roots(roots):
    out = ONE
    for r in roots:
        out = pmul(out, [Fraction(-r), Fraction(1)])
    return out


def from_shifts(shifts):
    """Product of the linear factors (u + c) for c in shifts."""
    return from_roots([-Fraction(c) for c in shifts])


def falling(k, shift=0):
    """(u - shift)(u - shift - 1) ... (u - shift - k + 1)."""
    return from_roots([Fraction(shift) + t for t in range(k)])


def peq(a, b):
    return trim(a) == trim(b)


def pstr(p):
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        elif k == 1:
            parts.append("%s*u" % c)
        else:
            parts.append("%s*u^%d" % (c, k))
    return " + ".join(parts)
