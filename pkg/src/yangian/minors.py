"""Quantum minors of the matrix u + E over gl(N).

The s x s minor with row tuple a and column tuple b is the signed sum
over permutations of products of entries of u + E with the spectral
parameter stepping down by one from factor to factor.  Row-ordered and
column-ordered expansions must agree; every construction computes both
and asserts it.  Minors are polynomials in u; the series normalized to
constant term 1 are carried as (polynomial numerator, scalar
falling-factorial denominator) pairs.
"""

import itertools
from fractions import Fraction

from . import scalars
from .pbw import UeaElement, UPoly
from .reports import check
from .rmatrix import perm_sign

_MINOR_CACHE = {}


def entry(a, b, shift, N):
    """(u + E + shift)_{ab} as a degree <= 1 polynomial."""
    c0 = UeaElement.gen(N, a, b)
    if a == b:
        c0 = c0 + UeaElement.scalar(N, shift)
        return UPoly(N, (c0, UeaElement.one(N)))
    return UPoly(N, (c0,))


def _row_expansion(rows, cols, N):
    s = len(rows)
    acc = UPoly.zero(N)
    for perm in itertools.permutations(range(s)):
        sign = perm_sign(perm)
        term = UPoly.one(N)
        for t in range(s):
            term = term * entry(rows[perm[t]], cols[t], -t, N)
        acc = acc + term * sign
    return acc


def _col_expansion(rows, cols, N):
    s = len(rows)
    acc = UPoly.zero(N)
    for perm in itertools.permutations(range(s)):
        sign = perm_sign(perm)
        term = UPoly.one(N)
        for t in range(s):
            term = term * entry(rows[t], cols[perm[t]], -(s - 1 - t), N)
        acc = acc + term * sign
    return acc


def qminor(rows, cols, N):
    """Quantum minor with the given row and column tuples.

    Tuples may come in any order (the value is antisymmetric) and may
    repeat indices (the value is then zero); both facts are theorems
    about the expansion, not preprocessing steps.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    for x in rows + cols:
        if not 1 <= x <= N:
            raise ValueError("minor index %d out of range for rank %d" % (x, N))
    key = (rows, cols, N)
    hit = _MINOR_CACHE.get(key)
    if hit is not None:
        return hit
    value = _row_expansion(rows, cols, N)
    other = _col_expansion(rows, cols, N)
    if value != other:
        raise AssertionError("row and column expansions disagree for %r" % (key,))
    _MINOR_CACHE[key] = value
    return value


def qdet(N):
    """Quantum determinant numerator: the full minor on rows 1..N."""
    idx = tuple(range(1, N + 1))
    return qminor(idx, idx, N)


def comatrix_entry(i, j, N):
    """Signed complementary minor: rows omit j, columns omit i."""
    if not (1 <= i <= N and 1 <= j <= N):
        raise ValueError("comatrix index out of range")
    rows = tuple(r for r in range(1, N + 1) if r != j)
    cols = tuple(c for c in range(1, N + 1) if c != i)
    sign = (-1) ** (i + j)
    return qminor(rows, cols, N) * sign


def bordered_minor(i, j, m, n):
    """Minor on rows {i, m+1..n} and columns {j, m+1..n} of rank n.

    These are the images of the generators of the smaller algebra under
    the determinant-preserving embedding; i, j <= m < n.
    """
    if not (1 <= i <= m and 1 <= j <= m and m < n):
        raise ValueError("bordered minor needs 1 <= i,j <= m < n")
    return _bordered(i, j, m, n)


def _bordered(i, j, m, n):
    # internal variant that tolerates the degenerate border m == n,
    # where the minor is just the single entry (u + E)_{ij}
    tail = tuple(range(m + 1, n + 1))
    return qminor((i,) + tail, (j,) + tail, n)


class PolyFraction:
    """A polynomial numerator over a central scalar denominator.

    No reduction is performed; equality is cross-multiplied, so it is
    equality of rational expressions.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom):
        self.numer = numer
        self.denom = scalars.trim(denom)

    @property
    def N(self):
        return self.numer.N

    def __mul__(self, other):
        return PolyFraction(self.numer * other.numer,
                            scalars.pmul(self.denom, other.denom))

    def __add__(self, other):
        return PolyFraction(self.numer.scale_poly(other.denom)
                            + other.numer.scale_poly(self.denom),
                            scalars.pmul(self.denom, other.denom))

    def __sub__(self, other):
        return self + PolyFraction(-other.numer, other.denom)

    def __eq__(self, other):
        return (self.numer.scale_poly(other.denom)
                == other.numer.scale_poly(self.denom))

    def shift(self, a):
        return PolyFraction(self.numer.shift(a), scalars.pshift(self.denom, a))

    def series(self, order):
        """Coefficients of u^0, u^-1, ..., u^-order of the expansion at infinity."""
        N = self.numer.N
        dd = len(self.denom) - 1
        lead = self.denom[-1]
        # denom = lead * u^dd * (1 + a_1/u + ... ), invert the tail as a series
        tail = [self.denom[dd - t] / lead for t in range(dd + 1)]
        inv = [Fraction(0)] * (order + 1)
        inv[0] = Fraction(1)
        for r in range(1, order + 1):
            acc = Fraction(0)
            for t in range(1, min(r, dd) + 1):
                acc -= tail[t] * inv[r - t]
            inv[r] = acc
        out = []
        for r in range(order + 1):
            acc = UeaElement.zero(N)
            for k, c in enumerate(self.numer.coeffs):
                t = r + k - dd
                if 0 <= t <= order:
                    acc = acc + c * (inv[t] / lead)
            out.append(acc)
        return out


def minor_series(rows, cols, N):
    """The normalized minor of 1 + E/u as a PolyFraction."""
    s = len(rows)
    return PolyFraction(qminor(rows, cols, N), scalars.falling(s))


def qdet_of_bordered(m, n):
    """Quantum determinant of the m x m matrix of bordered minors.

    Expands sgn(p) tilde_{p(1)1}(u) tilde_{p(2)2}(u-1) ... with the
    common falling-factorial denominators carried separately.
    """
    s = n - m + 1
    acc = UPoly.zero(n)
    for perm in itertools.permutations(range(m)):
        sign = perm_sign(perm)
        term = UPoly.one(n)
        for t in range(m):
            term = term * _bordered(perm[t] + 1, t + 1, m, n).shift(-t)
        acc = acc + term * sign
    den = scalars.ONE
    for t in range(m):
        den = scalars.pmul(den, scalars.falling(s, shift=t))
    return PolyFraction(acc, den)


# -- bivariate helpers (second central variable v) ---------------------

def _bi_const(p, var):
    """Embed a UPoly into the two-variable table, var 0 = u, var 1 = v."""
    out = {}
    for k, c in enumerate(p.coeffs):
        if not c.is_zero():
            out[(k, 0) if var == 0 else (0, k)] = c
    return out


def _bi_mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            term = c1 * c2
            acc = out.get(key)
            v = term if acc is None else acc + term
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return out


def _bi_scale(a, spoly):
    """Multiply by a scalar bivariate table {(i, j): Fraction}."""
    out = {}
    for (i1, j1), c in a.items():
        for (i2, j2), f in spoly.items():
            key = (i1 + i2, j1 + j2)
            term = c * f
            acc = out.get(key)
            v = term if acc is None else acc + term
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
    return out


def _bi_scalar_mul(a, b):
    """Product of two Fraction-valued bivariate tables."""
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def _bi_sub(a, b):
    out = dict(a)
    for k, c in b.items():
        acc = out.get(k)
        v = -c if acc is None else acc - c
        if v.is_zero():
            out.pop(k, None)
        else:
            out[k] = v
    return out


def _bi_add(a, b):
    out = dict(a)
    for k, c in b.items():
        acc = out.get(k)
        v = c if acc is None else acc + c
        if v.is_zero():
            out.pop(k, None)
        else:
            out[k] = v
    return out


def _uv_linear(k0):
    """u - v + k0 as a scalar bivariate table."""
    out = {(1, 0): Fraction(1), (0, 1): Fraction(-1)}
    if k0:
        out[(0, 0)] = Fraction(k0)
    return out


def minor_commutation_identity(rows_a, cols_b, rows_c, cols_d, N):
    """Exact bivariate commutation identity between two quantum minors.

    [m1(u), m2(v)] equals a sum over swap depths p of signed, scaled
    products of index-exchanged minors; the rational coefficients in
    u - v are cleared before comparing.
    """
    k, l = len(rows_a), len(rows_c)
    P = min(k, l)
    lhs_u = _bi_const(qminor(rows_a, cols_b, N), 0)
    rhs_v = _bi_const(qminor(rows_c, cols_d, N), 1)
    commut = _bi_sub(_bi_mul(lhs_u, rhs_v), _bi_mul(rhs_v, lhs_u))
    clear = {(0, 0): Fraction(1)}
    for t in range(1, P + 1):
        clear = _bi_scalar_mul(clear, _uv_linear(t - k))
    lhs = _bi_scale(commut, clear)

    rhs = {}
    for p in range(1, P + 1):
        coef = {(0, 0): Fraction((-1) ** (p - 1) * _fact(p))}
        for t in range(p + 1, P + 1):
            coef = _bi_scalar_mul(coef, _uv_linear(t - k))
        for isub in itertools.combinations(range(k), p):
            for jsub in itertools.combinations(range(l), p):
                a_sw = list(rows_a)
                c_sw = list(rows_c)
                for a_pos, c_pos in zip(isub, jsub):
                    a_sw[a_pos] = rows_c[c_pos]
                    c_sw[c_pos] = rows_a[a_pos]
                first = _bi_mul(_bi_const(qminor(tuple(a_sw), cols_b, N), 0),
                                _bi_const(qminor(tuple(c_sw), cols_d, N), 1))
                b_sw = list(cols_b)
                d_sw = list(cols_d)
                for b_pos, d_pos in zip(isub, jsub):
                    d_sw[d_pos] = cols_b[b_pos]
                    b_sw[b_pos] = cols_d[d_pos]
                second = _bi_mul(_bi_const(qminor(rows_c, tuple(d_sw), N), 1),
                                 _bi_const(qminor(rows_a, tuple(b_sw), N), 0))
                rhs = _bi_add(rhs, _bi_scale(_bi_sub(first, second), coef))
    diff = _bi_sub(lhs, rhs)
    return not diff, (sorted(diff)[:1] if diff else None)


def _fact(p):
    out = 1
    for t in range(2, p + 1):
        out *= t
    return out


def check_defining_relations(m, n):
    """The bordered minors satisfy the exchange relations of the smaller algebra.

    For all i, j, k, l <= m the cleared bivariate identity
    (u-v)[tilde_ij(u), tilde_kl(v)] = tilde_kj(u) tilde_il(v)
                                    - tilde_kj(v) tilde_il(u)
    must hold exactly (common scalar denominators cancel).
    """
    checks = []
    for i, j, k, l in itertools.product(range(1, m + 1), repeat=4):
        nij = _bordered(i, j, m, n)
        nkl = _bordered(k, l, m, n)
        nkj = _bordered(k, j, m, n)
        nil = _bordered(i, l, m, n)
        bu = _bi_const(nij, 0)
        bv = _bi_const(nkl, 1)
        lhs = _bi_scale(_bi_sub(_bi_mul(bu, bv), _bi_mul(bv, bu)),
                        _uv_linear(0))
        rhs = _bi_sub(_bi_mul(_bi_const(nkj, 0), _bi_const(nil, 1)),
                      _bi_mul(_bi_const(nkj, 1), _bi_const(nil, 0)))
        diff = _bi_sub(lhs, rhs)
        checks.append(check(
            "defining-relation m=%d n=%d ijkl=%d%d%d%d" % (m, n, i, j, k, l),
            "(u-v)[t~ij(u), t~kl(v)] = t~kj(u) t~il(v) - t~kj(v) t~il(u)",
            not diff, witness=sorted(diff)[:1] if diff else None))
    return checks


def check_sylvester(m, n):
    """Determinant factorization through the bordered minors.

    qdet of the m x m bordered matrix equals the full determinant times
    the determinants of the lower-right block at shifted arguments,
    compared exactly after clearing the scalar denominators.
    """
    if not (1 <= m <= n):
        raise ValueError("need 1 <= m <= n")
    checks = check_defining_relations(m, n)
    lhs = qdet_of_bordered(m, n)
    rhs = PolyFraction(qdet(n), scalars.falling(n))
    tail = tuple(range(m + 1, n + 1))
    for t in range(1, m):
        blk = PolyFraction(qminor(tail, tail, n), scalars.falling(n - m)).shift(-t)
        rhs = rhs * blk
    ok = lhs == rhs
    checks.append(check(
        "determinant-factorization m=%d n=%d" % (m, n),
        "qdet of bordered matrix = qdet times shifted block qdets",
        ok))
    return checks


def check_comatrix(N):
    """Comatrix times the shifted matrix gives qdet times the identity."""
    checks = []
    qd = qdet(N)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            acc = PolyFraction(UPoly.zero(N), scalars.ONE)
            for k in range(1, N + 1):
                lhs_entry = PolyFraction(comatrix_entry(i, k, N),
                                         scalars.falling(N - 1))
                t_entry = PolyFraction(entry(k, j, -(N - 1), N),
                                       scalars.from_shifts([-(N - 1)]))
                acc = acc + lhs_entry * t_entry
            target = PolyFraction(qd if i == j else UPoly.zero(N),
                                  scalars.falling(N))
            checks.append(check(
                "comatrix N=%d entry=(%d,%d)" % (N, i, j),
                "comatrix(u) (u+E-N+1) = qdet(u) identity",
                acc == target))
    return checks


def check_minor_identities(N, m):
    """Comatrix inversion, the block variant, and minor commutation instances."""
    checks = check_comatrix(N)
    qd = qdet(N)
    # block variant: top-left comatrix block against the bordered matrix;
    # at m == N it degenerates to the comatrix identity itself
    if 2 <= m <= N:
        tail = tuple(range(m + 1, N + 1))
        blk = (PolyFraction(qminor(tail, tail, N), scalars.falling(N - m))
               .shift(-(m - 1)) if m < N
               else PolyFraction(UPoly.one(N), scalars.ONE))
        target_diag = PolyFraction(qd, scalars.falling(N)) * blk
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                acc = PolyFraction(UPoly.zero(N), scalars.ONE)
                for k in range(1, m + 1):
                    hat = PolyFraction(comatrix_entry(i, k, N),
                                       scalars.falling(N - 1))
                    til = PolyFraction(_bordered(k, j, m, N),
                                       scalars.falling(N - m + 1)).shift(-(m - 1))
                    acc = acc + hat * til
                target = target_diag if i == j else PolyFraction(
                    UPoly.zero(N), scalars.ONE)
                checks.append(check(
                    "comatrix-block N=%d m=%d entry=(%d,%d)" % (N, m, i, j),
                    "comatrix block times shifted bordered matrix"
                    " = qdet times shifted block qdet",
                    acc == target))
    # commutation identity instances up to 2 x 2 minors
    for name, args in _commutation_instances(N):
        ok, witness = minor_commutation_identity(*args, N)
        checks.append(check(
            "minor-commutation N=%d %s" % (N, name),
            "cleared bivariate minor commutation identity",
            ok, witness=witness))
    return checks


def _commutation_instances(N):
    out = [
        ("k1l1-defining", ((1,), (2,), (2,), (1,))),
        ("k1l1-diagonal", ((1,), (1,), (2,), (2,))),
    ]
    if N >= 3:
        out += [
            ("k1l2", ((1,), (2,), (1, 3), (2, 3))),
            ("k2l1", ((1, 2), (1, 2), (3,), (1,))),
            ("k2l2-overlap", ((1, 2), (1, 3), (2, 3), (1, 2))),
            ("k2l2-equal", ((1, 2), (1, 2), (1, 3), (1, 3))),
        ]
    return out
