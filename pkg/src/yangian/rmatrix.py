"""Exact tensor calculus on (C^n)^(tensor s).

Builds permutation operators, rational R-matrices R(u) = 1 - P/u,
their ordered fused products, and antisymmetrizers, and verifies the
Yang-Baxter identity, the exchange relation with the matrix u + E over
gl(n), and its fused antisymmetrized form.

Basis indexing is mixed-radix little-endian over the tensor factors:
factor 1 is the least significant digit.
"""

import itertools
from fractions import Fraction

from .pbw import UeaElement, UPoly
from .reports import check


def _digits(idx, n, s):
    out = []
    for _ in range(s):
        out.append(idx % n)
        idx //= n
    return tuple(out)


def _index(digits, n):
    idx = 0
    for d in reversed(digits):
        idx = idx * n + d
    return idx


class ScalarMatrix:
    """Sparse n^s x n^s matrix with Fraction entries."""

    __slots__ = ("n", "s", "entries")

    def __init__(self, n, s, entries=None):
        self.n = n
        self.s = s
        self.entries = entries or {}

    @property
    def dim(self):
        return self.n ** self.s

    @classmethod
    def identity(cls, n, s):
        return cls(n, s, {(i, i): Fraction(1) for i in range(n ** s)})

    def __add__(self, other):
        out = dict(self.entries)
        for k, c in other.entries.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return ScalarMatrix(self.n, self.s, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return ScalarMatrix(self.n, self.s)
        return ScalarMatrix(self.n, self.s,
                            {k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return other.lapply(self)
        cols = {}
        for (r, c), v in other.entries.items():
            cols.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in cols.get(k, ()):
                key = (r, c)
                acc = out.get(key, 0) + v * w
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return ScalarMatrix(self.n, self.s, out)

    def __eq__(self, other):
        return (self.n, self.s) == (other.n, other.s) and self.entries == other.entries

    def first_mismatch(self, other):
        keys = set(self.entries) | set(other.entries)
        for k in sorted(keys):
            if self.entries.get(k, 0) != other.entries.get(k, 0):
                return k
        return None


def flip(n, s, i, j):
    """The operator permuting tensor factors i and j (1-based)."""
    out = {}
    for idx in range(n ** s):
        d = list(_digits(idx, n, s))
        d[i - 1], d[j - 1] = d[j - 1], d[i - 1]
        out[(_index(d, n), idx)] = Fraction(1)
    return ScalarMatrix(n, s, out)


def permutation_and_r(u, n):
    """The flip P on C^n tensor C^n and R(u) = 1 - P/u."""
    u = Fraction(u)
    if u == 0:
        raise ValueError("R(u) has a pole at u = 0")
    P = flip(n, 2, 1, 2)
    R = ScalarMatrix.identity(n, 2) - P.scale(Fraction(1, 1) / u)
    return P, R


def r_factor(n, s, i, j, x):
    """R_ij(x) = 1 - P_ij/x acting on s tensor factors."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("R_%d%d has a pole at coincident parameters" % (i, j))
    return ScalarMatrix.identity(n, s) - flip(n, s, i, j).scale(1 / x)


def fused_r(us, n):
    """Ordered product of the R_ij(u_i - u_j) over 1 <= i < j <= s.

    The factors are grouped as (R_{s-1,s})(R_{s-2,s} R_{s-2,s-1}) ...
    (R_{1,s} ... R_{1,2}), left to right.
    """
    us = [Fraction(u) for u in us]
    s = len(us)
    out = ScalarMatrix.identity(n, s)
    for i in range(s - 1, 0, -1):
        for j in range(s, i, -1):
            out = out @ r_factor(n, s, i, j, us[i - 1] - us[j - 1])
    return out


def antisymmetrizer(s, n):
    """Signed sum over all permutations of s tensor factors."""
    return antisymmetrizer_on(s, n, tuple(range(1, s + 1)))


def antisymmetrizer_on(s, n, positions):
    """Antisymmetrizer over a subset of the s factors (1-based positions)."""
    out = {}
    pos = [p - 1 for p in positions]
    for perm in itertools.permutations(range(len(pos))):
        sign = perm_sign(perm)
        for idx in range(n ** s):
            d = list(_digits(idx, n, s))
            img = list(d)
            for a, b in zip(pos, perm):
                img[a] = d[pos[b]]
            key = (_index(img, n), idx)
            v = out.get(key, 0) + sign
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return ScalarMatrix(n, s, {k: Fraction(v) for k, v in out.items()})


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class OperatorMatrix:
    """Sparse n^s x n^s matrix with UPoly entries over gl(N)."""

    __slots__ = ("n", "s", "N", "entries")

    def __init__(self, n, s, N, entries=None):
        self.n = n
        self.s = s
        self.N = N
        self.entries = entries or {}

    @classmethod
    def generator_matrix(cls, n, s, slot, shift, N=None):
        """T acting in the given slot, entries (u + shift) d_ab + E[a,b]."""
        N = N or n
        u = UPoly.variable(N) + UeaElement.scalar(N, shift)
        out = {}
        for idx in range(n ** s):
            d = _digits(idx, n, s)
            for a in range(1, n + 1):
                img = list(d)
                img[slot - 1] = a - 1
                b = d[slot - 1] + 1
                entry = UPoly.constant(UeaElement.gen(N, a, b))
                if a == b:
                    entry = entry + u
                out[(_index(img, n), idx)] = entry
        return cls(n, s, N, out)

    def eval_scalar(self, x):
        """Entrywise value at a rational sample, as constant polynomials."""
        out = {}
        for k, p in self.entries.items():
            v = p.eval_scalar(x)
            if not v.is_zero():
                out[k] = UPoly.constant(v)
        return OperatorMatrix(self.n, self.s, self.N, out)

    def lapply(self, scalar_mat):
        """scalar_mat @ self."""
        cols = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in scalar_mat.entries.items():
            for c, p in cols.get(k, ()):
                key = (r, c)
                acc = out.get(key)
                term = p * v
                out[key] = term if acc is None else acc + term
        return OperatorMatrix(self.n, self.s, self.N,
                              {k: p for k, p in out.items() if not p.is_zero()})

    def __matmul__(self, other):
        if isinstance(other, ScalarMatrix):
            cols = {}
            for (r, c), v in other.entries.items():
                cols.setdefault(r, []).append((c, v))
            out = {}
            for (r, k), p in self.entries.items():
                for c, v in cols.get(k, ()):
                    key = (r, c)
                    acc = out.get(key)
                    term = p * v
                    out[key] = term if acc is None else acc + term
            return OperatorMatrix(self.n, self.s, self.N,
                                  {k: p for k, p in out.items() if not p.is_zero()})
        cols = {}
        for (r, c), v in other.entries.items():
            cols.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), p in self.entries.items():
            for c, q in cols.get(k, ()):
                key = (r, c)
                acc = out.get(key)
                term = p * q
                out[key] = term if acc is None else acc + term
        return OperatorMatrix(self.n, self.s, self.N,
                              {k: p for k, p in out.items() if not p.is_zero()})

    def __sub__(self, other):
        out = dict(self.entries)
        for k, p in other.entries.items():
            acc = out.get(k)
            v = -p if acc is None else acc - p
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        return OperatorMatrix(self.n, self.s, self.N, out)

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return ((self.n, self.s, self.N) == (other.n, other.s, other.N)
                and self.entries == other.entries)

    def first_mismatch(self, other):
        keys = set(self.entries) | set(other.entries)
        zero = UPoly.zero(self.N)
        for k in sorted(keys):
            if self.entries.get(k, zero) != other.entries.get(k, zero):
                return k
        return None


def generator_product(n, s, shifts, reverse=False):
    """T_1(u + c_1) ... T_s(u + c_s), or the reversed product."""
    slots = range(s, 0, -1) if reverse else range(1, s + 1)
    out = None
    for slot in slots:
        t = OperatorMatrix.generator_matrix(n, s, slot, shifts[slot - 1])
        out = t if out is None else out @ t
    return out


def rtilde(u, v, k, l, n):
    """The residual factor of the fused R-product at the staircase points.

    Sum over p of (-1)^p p! / ((u-v-k+1)...(u-v-k+p)) times all products
    P_{i_1,k+j_1} ... P_{i_p,k+j_p} with increasing index tuples.
    """
    u, v = Fraction(u), Fraction(v)
    s = k + l
    out = ScalarMatrix.identity(n, s)
    for p in range(1, min(k, l) + 1):
        den = Fraction(1)
        for t in range(1, p + 1):
            d = u - v - k + t
            if d == 0:
                raise ValueError("pole in the residual factor")
            den *= d
        coef = Fraction((-1) ** p * factorial(p)) / den
        acc = ScalarMatrix(n, s)
        for isub in itertools.combinations(range(1, k + 1), p):
            for jsub in itertools.combinations(range(1, l + 1), p):
                prod = ScalarMatrix.identity(n, s)
                for a, b in zip(isub, jsub):
                    prod = prod @ flip(n, s, a, k + b)
                acc = acc + prod
        out = out + acc.scale(coef)
    return out


def factorial(p):
    out = 1
    for t in range(2, p + 1):
        out *= t
    return out


def check_rtt(n, s, samples):
    """Verify the Yang-Baxter, exchange, and fused-exchange identities.

    samples: tuples of rationals; triples feed the Yang-Baxter check and
    the first two entries of each tuple feed the exchange relation with
    the scalar denominator u - v cleared.  The fused identity
    A_s T_1(u) ... T_s(u-s+1) = T_s(u-s+1) ... T_1(u) A_s is checked as
    an identity of polynomial matrices, independent of samples.
    """
    checks = []
    for t in samples:
        if len(t) >= 3:
            u1, u2, u3 = (Fraction(x) for x in t[:3])
            lhs = (r_factor(n, 3, 1, 2, u1 - u2) @ r_factor(n, 3, 1, 3, u1 - u3)
                   @ r_factor(n, 3, 2, 3, u2 - u3))
            rhs = (r_factor(n, 3, 2, 3, u2 - u3) @ r_factor(n, 3, 1, 3, u1 - u3)
                   @ r_factor(n, 3, 1, 2, u1 - u2))
            checks.append(check(
                "yang-baxter n=%d params=%s" % (n, tuple(map(str, t[:3]))),
                "R12 R13 R23 = R23 R13 R12",
                lhs == rhs, witness=lhs.first_mismatch(rhs)))
        if len(t) >= 2:
            u, v = Fraction(t[0]), Fraction(t[1])
            d = u - v
            # (u-v-P) T_1(u) T_2(v) = T_2(v) T_1(u) (u-v-P), denominators cleared
            rm = ScalarMatrix.identity(n, 2).scale(d) - flip(n, 2, 1, 2)
            t1 = OperatorMatrix.generator_matrix(n, 2, 1, 0).eval_scalar(u)
            t2 = OperatorMatrix.generator_matrix(n, 2, 2, 0).eval_scalar(v)
            lhs = (t1 @ t2).lapply(rm)
            rhs = (t2 @ t1) @ rm
            checks.append(check(
                "exchange n=%d u=%s v=%s" % (n, u, v),
                "R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v)",
                lhs == rhs, witness=lhs.first_mismatch(rhs)))
    shifts = [-k for k in range(s)]
    asym = antisymmetrizer(s, n)
    lhs = generator_product(n, s, shifts).lapply(asym)
    rhs = generator_product(n, s, shifts, reverse=True) @ asym
    checks.append(check(
        "fused-exchange n=%d s=%d" % (n, s),
        "A_s T1(u)...Ts(u-s+1) = Ts(u-s+1)...T1(u) A_s",
        lhs == rhs, witness=lhs.first_mismatch(rhs)))
    return checks


def check_fused_specialization(k, l, n, u, v):
    """Fused product at staircase parameters equals the residual normal form.

    Specializing u_i = u-i+1 (i <= k) and u_{k+j} = v-j+1 (j <= l) in the
    fused product must give rtilde(u,v) A_k A'_l.
    """
    u, v = Fraction(u), Fraction(v)
    us = [u - i + 1 for i in range(1, k + 1)] + [v - j + 1 for j in range(1, l + 1)]
    fused = fused_r(us, n)
    s = k + l
    ak = antisymmetrizer_on(s, n, tuple(range(1, k + 1)))
    al = antisymmetrizer_on(s, n, tuple(range(k + 1, k + l + 1)))
    rhs = rtilde(u, v, k, l, n) @ ak @ al
    return check(
        "fused-specialization k=%d l=%d n=%d" % (k, l, n),
        "staircase fused product = residual factor times block antisymmetrizers",
        fused == rhs, witness=fused.first_mismatch(rhs))
